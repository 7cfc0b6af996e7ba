import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_values
from subgames.game_core import (
    N, P, DifferenceSet, ModularGame, Solver, all_positions, find_period_1d, legal_moves,
    position_value, random_difference_set, solve_up_to_sum, values_1d,
)

vectors = st.lists(st.integers(-3, 3), min_size=1, max_size=3)


@st.composite
def games(draw, max_dim=3, max_size=5):
    d = draw(st.integers(1, max_dim))
    vec = st.tuples(*[st.integers(-3, 3)] * d).filter(lambda v: sum(v) > 0)
    return DifferenceSet(d, tuple(draw(st.lists(vec, max_size=max_size))))


def test_legal_moves_examples():
    assert legal_moves(DifferenceSet.of([(1, 0), (0, 1)]), (0, 0)) == []
    assert legal_moves(DifferenceSet.of([(1, 1)]), (2, 1)) == [(1, 0)]
    assert legal_moves(DifferenceSet.of([(2, -1)]), (1, 3)) == []


def test_legal_moves_are_ordered_by_vector():
    g = DifferenceSet.of([(0, 1), (2, -1), (1, 0)])
    assert legal_moves(g, (2, 2)) == [(2, 1), (1, 2), (0, 3)]


def test_value_examples():
    assert position_value(DifferenceSet.one_dimensional([1, 2, 3]), (5,)) == N
    nim = DifferenceSet.of([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
    assert position_value(nim, (1, 1, 1)) == N
    assert all(position_value(nim, y) == P for y in legal_moves(nim, (1, 1, 1)))


def test_rejects_bad_vectors_and_positions():
    with pytest.raises(ValueError):
        DifferenceSet.of([(1, -1)])
    with pytest.raises(ValueError):
        DifferenceSet(2, ((1, 0, 0),))
    g = DifferenceSet.of([(1, 0)])
    with pytest.raises(ValueError):
        position_value(g, (1,))
    with pytest.raises(ValueError):
        legal_moves(g, (1, 2, 3))
    with pytest.raises(ValueError):
        position_value(g, (-1, 0))


def test_duplicates_collapse():
    assert len(DifferenceSet.of([(1, 0), (1, 0), (0, 1)])) == 2


def test_solve_up_to_sum_examples():
    empty = DifferenceSet(2)
    assert set(solve_up_to_sum(empty, 3).values.values()) == {P}
    t = solve_up_to_sum(DifferenceSet.one_dimensional([1, 2, 3]), 8)
    assert sorted(t.p_positions()) == [(0,), (4,), (8,)]
    t = solve_up_to_sum(DifferenceSet.of([(1, 1)]), 4)
    assert set(t.p_positions()) == {x for x in t.values if min(x) % 2 == 0}


@settings(max_examples=60, deadline=None)
@given(games())
def test_solver_matches_naive_enumerator(g):
    ref = naive_values([list(g.vectors)], g.dimension, 8)
    s = Solver(g)
    assert all(s.value(x) == v for x, v in ref.items())


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 2), st.integers(1, 4), st.data())
def test_modular_solver_matches_naive_enumerator(d, k, data):
    vec = st.tuples(*[st.integers(-2, 3)] * d).filter(lambda v: sum(v) > 0)
    sets = [data.draw(st.lists(vec, max_size=3)) for _ in range(k)]
    g = ModularGame(d, k, tuple(DifferenceSet(d, tuple(s)) for s in sets))
    ref = naive_values(sets, d, 9)
    s = Solver(g)
    assert all(s.value(x) == v for x, v in ref.items())


@settings(max_examples=40, deadline=None)
@given(games())
def test_origin_is_p_and_table_is_self_consistent(g):
    t = solve_up_to_sum(g, 6)
    assert t[(0,) * g.dimension] == P
    assert all(t.recompute(x) == t[x] for x in t.values)
    assert all(position_value(g, x) == t[x] for x in list(t.values)[:50])


@settings(max_examples=40, deadline=None)
@given(games(), st.randoms(use_true_random=False))
def test_moves_decrease_coordinate_sum(g, rnd):
    x = tuple(rnd.randint(0, 6) for _ in range(g.dimension))
    while True:
        moves = legal_moves(g, x)
        if not moves:
            break
        y = rnd.choice(moves)
        assert sum(y) < sum(x) and min(y) >= 0
        x = y


def test_deep_positions_do_not_recurse():
    g = DifferenceSet.one_dimensional([1])
    assert position_value(g, (20000,)) == P


@pytest.mark.parametrize("subs, pre, period, residues", [
    ([1], 0, 2, (0,)),
    ([1, 2, 3], 0, 4, (0,)),
    ([1, 4], 0, 5, (0, 2)),
    ([2, 3], 0, 5, (0, 1)),
])
def test_period_examples(subs, pre, period, residues):
    per = find_period_1d(DifferenceSet.one_dimensional(subs), 200)
    assert (per.preperiod, per.period, per.p_residues) == (pre, period, residues)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(1, 9), min_size=1, max_size=4))
def test_reported_period_holds(subs):
    horizon = 400
    per = find_period_1d(DifferenceSet.one_dimensional(subs), horizon)
    assert per is not None
    vals = values_1d(subs, horizon)
    assert all(vals[n + per.period] == vals[n] for n in range(per.preperiod, horizon - per.period + 1))
    # minimality of both numbers on the computed range
    for q in range(1, per.period):
        assert any(vals[n + q] != vals[n] for n in range(per.preperiod, horizon - q + 1))
    if per.preperiod:
        n = per.preperiod - 1
        assert vals[n + per.period] != vals[n]


def test_period_none_and_errors():
    assert find_period_1d(DifferenceSet.one_dimensional([1, 2, 3]), 3) is None
    with pytest.raises(ValueError):
        find_period_1d(DifferenceSet.of([(1, 0)]), 10)
    assert find_period_1d(DifferenceSet(1), 10).period == 1


def test_random_difference_set_is_valid():
    rng = random.Random(5)
    for _ in range(20):
        g = random_difference_set(rng, 3, 5)
        assert all(sum(v) > 0 for v in g.vectors)
    assert len(list(all_positions(3, 2))) == 10
