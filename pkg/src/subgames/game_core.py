"""Vector subtraction games and their P/N values.

A position is a tuple of non-negative integers.  A move subtracts a vector
from the difference set and must stay inside the non-negative orthant;
every difference vector has a positive coordinate sum, so play terminates.

Values follow the normal-play convention: 0 for a P-position (the player to
move loses), 1 for an N-position.  The value of a position is the NAND of
the values of its successors, so terminal positions are P.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

Position = tuple[int, ...]

P, N = 0, 1


def _as_vector(v: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(a) for a in v)


@dataclass(frozen=True)
class DifferenceSet:
    """Finite set of move vectors of a fixed dimension.

    Vectors are deduplicated and kept in lexicographic order, which fixes
    the order of :func:`legal_moves`.
    """

    dimension: int
    vectors: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be positive, got {self.dimension}")
        vecs = sorted({_as_vector(v) for v in self.vectors})
        for v in vecs:
            if len(v) != self.dimension:
                raise ValueError(f"vector {v} does not have dimension {self.dimension}")
            if sum(v) <= 0:
                raise ValueError(f"vector {v} has non-positive coordinate sum")
        object.__setattr__(self, "vectors", tuple(vecs))

    @classmethod
    def of(cls, vectors: Iterable[Sequence[int]], dimension: int | None = None) -> "DifferenceSet":
        vectors = [_as_vector(v) for v in vectors]
        if dimension is None:
            if not vectors:
                raise ValueError("cannot infer the dimension of an empty difference set")
            dimension = len(vectors[0])
        return cls(dimension, tuple(vectors))

    @classmethod
    def one_dimensional(cls, subtractions: Iterable[int]) -> "DifferenceSet":
        return cls(1, tuple((int(a),) for a in subtractions))

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


@dataclass(frozen=True)
class ModularGame:
    """k difference sets; the set applied at x is chosen by sum(x) mod k."""

    dimension: int
    modulus: int
    sets: tuple[DifferenceSet, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        sets = tuple(self.sets)
        if len(sets) != self.modulus:
            raise ValueError(f"expected {self.modulus} difference sets, got {len(sets)}")
        for s in sets:
            if s.dimension != self.dimension:
                raise ValueError("all difference sets must share the game dimension")
        object.__setattr__(self, "sets", sets)

    def set_for(self, x: Sequence[int]) -> DifferenceSet:
        return self.sets[sum(x) % self.modulus]


Game = Union[DifferenceSet, ModularGame]


def _check_position(game: Game, x: Sequence[int]) -> Position:
    x = tuple(int(c) for c in x)
    if len(x) != game.dimension:
        raise ValueError(f"position {x} does not have dimension {game.dimension}")
    if any(c < 0 for c in x):
        raise ValueError(f"position {x} has a negative coordinate")
    return x


def _sparse(vectors: Sequence[tuple[int, ...]]):
    # (vector, nonzero entries); a move is legal iff x_i >= a_i on positive entries
    out = []
    for a in vectors:
        nz = tuple((i, c) for i, c in enumerate(a) if c)
        need = tuple((i, c) for i, c in nz if c > 0)
        out.append((a, nz, need))
    return tuple(out)


class Solver:
    """Memoized P/N evaluator for one game.

    Evaluation is iterative (no recursion limit) and short-circuits: a
    position is N as soon as one P successor is found.
    """

    def __init__(self, game: Game):
        self.game = game
        self._cache: dict[Position, int] = {}
        if isinstance(game, ModularGame):
            self._tables = tuple(_sparse(s.vectors) for s in game.sets)
            self._modulus = game.modulus
        else:
            self._tables = (_sparse(game.vectors),)
            self._modulus = 1

    def successors(self, x: Position) -> Iterator[Position]:
        table = self._tables[sum(x) % self._modulus] if self._modulus > 1 else self._tables[0]
        for _, nz, need in table:
            if all(x[i] >= c for i, c in need):
                y = list(x)
                for i, c in nz:
                    y[i] -= c
                yield tuple(y)

    def value(self, x: Sequence[int]) -> int:
        x = _check_position(self.game, x)
        cache = self._cache
        if x in cache:
            return cache[x]
        # frames are [position, successor list, index of first unchecked successor]
        stack = [[x, list(self.successors(x)), 0]]
        while stack:
            frame = stack[-1]
            pos, succ, i = frame
            resolved = P
            while i < len(succ):
                v = cache.get(succ[i])
                if v is None:
                    resolved = None
                    break
                if v == P:
                    resolved = N
                    break
                i += 1
            frame[2] = i
            if resolved is None:
                y = succ[i]
                stack.append([y, list(self.successors(y)), 0])
            else:
                cache[pos] = resolved
                stack.pop()
        return cache[x]

    def __len__(self):
        return len(self._cache)


@lru_cache(maxsize=16)
def solver_for(game: Game) -> Solver:
    return Solver(game)


def legal_moves(game: Game, x: Sequence[int]) -> list[Position]:
    """All positions reachable from ``x`` in one move, ordered by move vector."""
    x = _check_position(game, x)
    return list(solver_for(game).successors(x))


def position_value(game: Game, x: Sequence[int]) -> int:
    """0 if ``x`` is a P-position, 1 if it is an N-position."""
    return solver_for(game).value(x)


def positions_with_sum(dimension: int, total: int) -> Iterator[Position]:
    """All non-negative integer vectors of the given dimension and coordinate sum,
    in lexicographic order."""
    if dimension == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in positions_with_sum(dimension - 1, total - first):
            yield (first,) + rest


@dataclass(frozen=True)
class ValueTable:
    game: Game
    bound: int
    values: dict = field(repr=False)

    def __getitem__(self, x: Sequence[int]) -> int:
        return self.values[tuple(x)]

    def __contains__(self, x) -> bool:
        return tuple(x) in self.values

    def __len__(self):
        return len(self.values)

    def p_positions(self) -> list[Position]:
        return [x for x, v in self.values.items() if v == P]

    def recompute(self, x: Sequence[int]) -> int:
        """Value of ``x`` rebuilt from the stored values of its successors."""
        succ = legal_moves(self.game, x)
        return P if all(self.values[y] == N for y in succ) else N


def solve_up_to_sum(game: Game, sum_bound: int) -> ValueTable:
    """Values of every position with coordinate sum at most ``sum_bound``.

    Layers are filled in increasing coordinate sum, so each layer reads only
    finished layers.
    """
    if sum_bound < 0:
        raise ValueError("sum_bound must be non-negative")
    solver = Solver(game)
    values: dict[Position, int] = {}
    for s in range(sum_bound + 1):
        for x in positions_with_sum(game.dimension, s):
            values[x] = P if all(values[y] == N for y in solver.successors(x)) else N
    return ValueTable(game, sum_bound, values)


@dataclass(frozen=True)
class Periodicity:
    preperiod: int
    period: int
    p_residues: tuple[int, ...]


def values_1d(subtractions: Iterable[int], horizon: int) -> list[int]:
    """Values of positions 0..horizon of a one-dimensional subtraction game."""
    subs = sorted(set(subtractions))
    vals: list[int] = []
    for n in range(horizon + 1):
        vals.append(P if all(vals[n - a] == N for a in subs if a <= n) else N)
    return vals


def _divisors(q: int) -> list[int]:
    return [d for d in range(1, q + 1) if q % d == 0]


def find_period_1d(game: DifferenceSet, horizon: int) -> Periodicity | None:
    """Eventual period of the P/N sequence of a one-dimensional game.

    A window of ``max(D)`` consecutive values determines every later value,
    so the first repeated window certifies periodicity.  The certified
    period is then reduced to the minimal one and the preperiod pulled back
    as far as the computed values allow.  Returns ``None`` when no window
    repeats within ``horizon``.
    """
    if game.dimension != 1:
        raise ValueError("periodicity is only defined for one-dimensional games")
    if not game.vectors:
        # every position is terminal
        return Periodicity(0, 1, (0,))
    subs = [a for (a,) in game.vectors]
    width = max(subs)
    vals = values_1d(subs, horizon)
    seen: dict[tuple[int, ...], int] = {}
    found = None
    for start in range(0, horizon - width + 2):
        window = tuple(vals[start:start + width])
        if window in seen:
            found = (seen[window], start - seen[window])
            break
        seen[window] = start
    if found is None:
        return None
    first, q0 = found
    period = next(
        d for d in _divisors(q0)
        if all(vals[n + d] == vals[n] for n in range(first, horizon - d + 1))
    )
    pre = first
    while pre > 0 and vals[pre - 1 + period] == vals[pre - 1]:
        pre -= 1
    residues = tuple(sorted(n % period for n in range(pre, pre + period) if vals[n] == P))
    return Periodicity(pre, period, residues)


def random_difference_set(rng, dimension: int, size: int, low: int = -3, high: int = 3) -> DifferenceSet:
    """Random positive-sum difference set; used by tests and demos."""
    vectors = set()
    attempts = 0
    while len(vectors) < size and attempts < 1000:
        attempts += 1
        v = tuple(rng.randint(low, high) for _ in range(dimension))
        if sum(v) > 0:
            vectors.add(v)
    return DifferenceSet(dimension, tuple(vectors))


def all_positions(dimension: int, sum_bound: int) -> Iterator[Position]:
    return itertools.chain.from_iterable(
        positions_with_sum(dimension, s) for s in range(sum_bound + 1)
    )
