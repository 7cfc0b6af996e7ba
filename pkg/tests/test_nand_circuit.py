import itertools

import pytest
from hypothesis import given, settings, strategies as st

from subgames.nand_circuit import (
    MAX_TABLE_INPUTS, NandCircuit, TruthTable, circuit_for_rule, evaluate, normalize_last,
    s, synthesize_from_table, u, windows,
)


def test_evaluate_examples():
    assert evaluate(NandCircuit(0, ((u(0),),)), (1,)) == ([0], 0)
    c = NandCircuit(1, ((u(0), u(1)),))
    assert evaluate(c, (0, 1, 1))[1] == 0
    assert evaluate(c, (0, 1, 0))[1] == 1
    assert evaluate(c, (0, 0, 0))[1] == 1
    c = NandCircuit(1, ((u(0), u(1)), (s(1),)))
    assert evaluate(c, (0, 1, 1)) == ([0, 1], 1)


def test_basis_identities():
    neg = NandCircuit(0, ((u(0),),))
    orc = NandCircuit(1, ((u(0),), (u(1),), (s(1), s(2))))
    andc = NandCircuit(1, ((u(0), u(1)), (s(1),)))
    for x, y in itertools.product((0, 1), repeat=2):
        assert evaluate(neg, (x,))[1] == 1 - x
        assert evaluate(orc, (0, x, y))[1] == (x | y)
        assert evaluate(andc, (0, x, y))[1] == (x & y)


def test_load_time_validation():
    with pytest.raises(ValueError):
        NandCircuit(0, ())
    with pytest.raises(ValueError):
        NandCircuit(0, ((),))
    with pytest.raises(ValueError):
        NandCircuit(0, ((u(1),),))
    with pytest.raises(ValueError):
        NandCircuit(1, ((s(1),),))
    with pytest.raises(ValueError):
        evaluate(NandCircuit(1, ((u(0),),)), (1,))


def test_synthesis_examples():
    one = synthesize_from_table(TruthTable.from_function(0, lambda a: 1))
    assert all(evaluate(one, w)[1] == 1 for w in windows(1))
    and3 = synthesize_from_table(TruthTable.from_function(1, lambda a, b, c: a & b & c))
    xor = synthesize_from_table(TruthTable.from_function(1, lambda a, b, c: a ^ c ^ 1))
    for w in windows(3):
        assert evaluate(and3, w)[1] == (w[0] & w[1] & w[2])
        assert evaluate(xor, w)[1] == (w[0] ^ w[2] ^ 1)


def test_synthesis_size_limit():
    with pytest.raises(ValueError):
        synthesize_from_table(TruthTable(8, (0,) * (1 << 17)))
    assert MAX_TABLE_INPUTS == 16


def test_normalize_examples():
    ident = NandCircuit(0, ((u(0), u(0)),))
    n = normalize_last(ident)
    assert n.size == 3 and n.last_is_input_free()
    assert all(evaluate(n, w)[1] == evaluate(ident, w)[1] for w in windows(1))
    and3 = synthesize_from_table(TruthTable.from_function(1, lambda a, b, c: a & b & c))
    n = normalize_last(and3)
    assert n.size == and3.size + 6
    # prefix shape: s_{i+r+1} = [u_i], s_{i+3r+2} = [s_{i+r+1}]
    r = 1
    for i in range(-r, r + 1):
        assert n.assignments[i + r] == (u(i),)
        assert n.assignments[i + 3 * r + 1] == (s(i + r + 1),)
    twice = normalize_last(n)
    assert twice.size == n.size + 6
    assert all(evaluate(twice, w)[1] == evaluate(n, w)[1] for w in windows(3))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2), st.data())
def test_synthesize_then_normalize_preserves_function(r, data):
    bits = data.draw(st.lists(st.integers(0, 1), min_size=1 << (2 * r + 1), max_size=1 << (2 * r + 1)))
    t = TruthTable(r, tuple(bits))
    c = normalize_last(synthesize_from_table(t))
    assert c.last_is_input_free() and c.size > r
    assert all(evaluate(c, w)[1] == t(w) for w in windows(2 * r + 1))


def test_synthesis_is_deterministic():
    f = lambda a, b, c: (a | b) & (1 - c) | (a & b & c)  # noqa: E731
    assert circuit_for_rule(1, f) == circuit_for_rule(1, f)


def test_all_blank_preserving_three_input_tables():
    count = 0
    for idx in range(256):
        bits = tuple((idx >> k) & 1 for k in range(8))
        t = TruthTable(1, bits)
        if not t.blank_preserving():
            continue
        count += 1
        c = normalize_last(synthesize_from_table(t))
        assert c.last_is_input_free() and c.size > 1
        assert all(evaluate(c, w)[1] == t(w) for w in windows(3))
    assert count == 128
