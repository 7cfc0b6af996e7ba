"""NODE KAYLES and its reduction to a subtraction game.

The reduction indexes coordinates by edges: playing vertex v subtracts the
incidence vector of v, which zeroes every edge at v and therefore blocks
all neighbours of v.  Starting from the all-ones position the two games
are isomorphic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .game_core import N, P, DifferenceSet, Position, position_value


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        clean = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def isolated_vertices(self) -> list[int]:
        touched = {v for e in self.edges for v in e}
        return [v for v in range(self.n) if v not in touched]


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def kayles_value(g: SimpleGraph) -> int:
    """P/N value of NODE KAYLES on ``g`` by memoized search over the set of
    still playable vertices (bitmask)."""
    closed = [1 << v for v in range(g.n)]
    for a, b in g.edges:
        closed[a] |= 1 << b
        closed[b] |= 1 << a

    @lru_cache(maxsize=None)
    def value(playable: int) -> int:
        v = 0
        rest = playable
        while rest:
            if rest & 1 and value(playable & ~closed[v]) == P:
                return N
            rest >>= 1
            v += 1
        return P

    return value((1 << g.n) - 1)


@dataclass(frozen=True)
class KaylesReduction:
    game: DifferenceSet
    start: Position
    vertex_vectors: tuple[tuple[int, ...], ...]


def kayles_to_msg(g: SimpleGraph) -> KaylesReduction:
    if not g.edges:
        raise ValueError("graph has no edges; the reduced game would have dimension 0")
    isolated = g.isolated_vertices()
    if isolated:
        raise ValueError(f"isolated vertices {isolated} would give zero-sum move vectors")
    vectors = tuple(
        tuple(1 if v in e else 0 for e in g.edges) for v in range(g.n)
    )
    game = DifferenceSet(len(g.edges), vectors)
    return KaylesReduction(game, (1,) * len(g.edges), vectors)


def verify_kayles_reduction(g: SimpleGraph) -> bool:
    red = kayles_to_msg(g)
    return position_value(red.game, red.start) == kayles_value(g)


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
