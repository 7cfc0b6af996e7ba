import pytest
from hypothesis import given, settings, strategies as st

from oracles import ca_rows
from subgames.automata import (
    ACCEPT, START, CellularAutomaton, Configuration, TuringMachine, ca_run, ca_step,
    decode_ca_config, encode_tm_config, eraser_machine, immediate_accept_machine, initial_config,
    last_bit_machine, parity_machine, relabel_ca, relabel_config, tm_pins, tm_relabeling, tm_run,
    tm_step, tm_to_ca, unrelabel_config,
)

MACHINES = [parity_machine, last_bit_machine, eraser_machine, immediate_accept_machine]


def xor_offset():
    return CellularAutomaton.from_function((0, 1), 1, 1, lambda a, b, c: a ^ c ^ 1, name="xor")


def test_configuration_trims_blanks():
    c = Configuration(-2, (5, 5, 1, 2, 5), 5)
    assert (c.offset, c.cells) == (0, (1, 2))
    assert c[-7] == 5 and c[1] == 2
    assert Configuration(3, (5,), 5).is_blank


def test_ca_step_examples():
    ca = xor_offset()
    blank = Configuration(0, (), 1)
    assert ca_step(ca, blank).is_blank
    c1 = ca_step(ca, Configuration.single(0, 1))
    assert {u for u in range(-3, 4) if c1[u] == 0} == {-1, 1}
    assert ca_run(ca, Configuration.single(0, 1), 0) == Configuration.single(0, 1)
    assert ca_run(ca, Configuration.single(0, 1), 2) == ca_step(ca, c1)
    assert ca_run(ca, blank, 7).is_blank


def test_ca_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        ca_step(xor_offset(), Configuration(0, (2,), 1))
    with pytest.raises(ValueError):
        ca_step(xor_offset(), Configuration(0, (0,), 0))
    with pytest.raises(ValueError):
        CellularAutomaton.from_function((0, 1), 1, 1, lambda a, b, c: 0)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=6), st.integers(0, 8), st.data())
def test_ca_run_matches_reference(cells, t, data):
    table = {}
    import itertools
    for w in itertools.product(range(3), repeat=3):
        table[w] = 0 if w == (0, 0, 0) else data.draw(st.integers(0, 2))
    ca = CellularAutomaton.from_table(table, 0)
    got = ca_run(ca, Configuration(0, tuple(cells), 0), t)
    seed = {i: a for i, a in enumerate(cells)}
    ref = ca_rows(lambda w: table[w], 1, seed, 0, t)[t]
    assert all(got[i] == ref.get(i, 0) for i in range(-t - 1, len(cells) + t + 1))
    lo, hi = got.span
    assert got.is_blank or (lo >= -t and hi <= len(cells) - 1 + t)


def test_tm_examples():
    r = tm_run(immediate_accept_machine(), "", 10)
    assert (r.status, r.steps) == ("accept", 1)
    assert tm_run(parity_machine(), "11", 100).status == "accept"
    assert tm_run(parity_machine(), "1", 100).status == "reject"
    cfg = initial_config(parity_machine(), "")
    assert cfg.symbol() == parity_machine().blank and cfg.state == START
    assert tm_run(eraser_machine(), "10", 100).status == "accept"
    assert tm_run(eraser_machine(), "01", 100).status == "reject"
    assert tm_run(last_bit_machine(), "01", 100).status == "accept"


def test_tm_budget_is_a_status():
    loop = TuringMachine(3, 2, {(1, a): (1, a, 1) for a in range(3)})
    r = tm_run(loop, "1", 5)
    assert (r.status, r.steps) == ("running", 5)


def test_tm_validation():
    with pytest.raises(ValueError):
        TuringMachine(3, 2, {})
    with pytest.raises(ValueError):
        TuringMachine(3, 2, {(1, a): (1, a, 0) for a in range(3)})


def test_tm_to_ca_windows():
    m = parity_machine()
    ca = tm_to_ca(m)
    q2, b2, d = m.delta[(1, 1)]
    assert d == 1
    assert ca.rule(((0, 0), (1, 1), (0, 0))) == (0, b2)
    assert ca.rule(((1, 1), (0, 0), (0, 2))) == (q2, 0)
    assert ca.rule(((0, 1), (0, 0), (0, 2))) == (0, 0)
    assert ca.rule(((0, 2),) * 3) == (0, 2)


@pytest.mark.parametrize("make", MACHINES)
@pytest.mark.parametrize("word", ["", "0", "1", "0110", "1011", "111"])
def test_tm_ca_bisimulation(make, word):
    m = make()
    ca = tm_to_ca(m)
    cfg = initial_config(m, word)
    conf = encode_tm_config(m, cfg)
    for _ in range(50):
        cfg = tm_step(m, cfg)
        conf = ca_step(ca, conf)
        assert decode_ca_config(m, conf) == cfg


def test_relabeling_pins_and_round_trip():
    m = parity_machine()
    pi = tm_relabeling(m)
    L = m.ca_alphabet_size
    assert pi[(0, m.blank)] == 0 and pi[(1, m.blank)] == 1 and pi[(0, 1)] == L - 1
    assert sorted(pi.values()) == list(range(L))
    ca = relabel_ca(tm_to_ca(m), pi, tm_pins(m))
    assert ca.rule((0, 0, 0)) == 0
    conf = Configuration(0, tuple(pi), (0, m.blank))
    assert unrelabel_config(relabel_config(conf, pi), pi) == conf
    bad = dict(pi)
    bad[(0, 1)], bad[(0, 0)] = bad[(0, 0)], bad[(0, 1)]
    with pytest.raises(ValueError):
        relabel_ca(tm_to_ca(m), bad, tm_pins(m))


def test_relabeled_cosimulation():
    m = parity_machine()
    pi = tm_relabeling(m)
    ca, rca = tm_to_ca(m), relabel_ca(tm_to_ca(m), pi, tm_pins(m))
    conf = encode_tm_config(m, initial_config(m, ""))
    rconf = relabel_config(conf, pi)
    assert rconf == Configuration.single(1, 0)
    for _ in range(20):
        conf, rconf = ca_step(ca, conf), ca_step(rca, rconf)
        assert relabel_config(conf, pi) == rconf


def test_halted_head_is_frozen():
    m = immediate_accept_machine()
    ca = tm_to_ca(m)
    conf = ca_run(ca, encode_tm_config(m, initial_config(m, "1")), 1)
    assert ca_run(ca, conf, 10) == conf
    assert decode_ca_config(m, conf).state == ACCEPT
