"""Straight-line circuits over the game basis.

The gate ``[p1, ..., pn]`` is NAND of its arguments, which is exactly how
the value of a game position is computed from its successors.  A circuit
of radius r reads the window u_{-r}, ..., u_r and consists of assignments
s_1 .. s_N; each argument is either an input ``("u", i)`` or an earlier
assignment ``("s", j)``.  The output is s_N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

MAX_TABLE_INPUTS = 16


class Arg(NamedTuple):
    kind: str  # "u" for an input, "s" for an assignment
    index: int

    def __str__(self):
        return f"{self.kind}{self.index}"


def u(i: int) -> Arg:
    return Arg("u", i)


def s(j: int) -> Arg:
    return Arg("s", j)


@dataclass(frozen=True)
class NandCircuit:
    radius: int
    assignments: tuple[tuple[Arg, ...], ...]

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be non-negative")
        gates = tuple(tuple(Arg(*a) for a in g) for g in self.assignments)
        if not gates:
            raise ValueError("a circuit needs at least one assignment")
        for j, gate in enumerate(gates, start=1):
            if not gate:
                raise ValueError(f"assignment s{j} has no arguments")
            for a in gate:
                if a.kind == "u":
                    if abs(a.index) > self.radius:
                        raise ValueError(f"s{j} reads u{a.index} outside radius {self.radius}")
                elif a.kind == "s":
                    if not 1 <= a.index < j:
                        raise ValueError(f"s{j} reads s{a.index}, which is not an earlier assignment")
                else:
                    raise ValueError(f"unknown argument kind {a.kind!r}")
        object.__setattr__(self, "assignments", gates)

    @property
    def size(self) -> int:
        return len(self.assignments)

    @property
    def width(self) -> int:
        return 2 * self.radius + 1

    def last_is_input_free(self) -> bool:
        return all(a.kind == "s" for a in self.assignments[-1])

    def __str__(self):
        return "\n".join(
            f"s{j} = [{', '.join(map(str, g))}]" for j, g in enumerate(self.assignments, start=1)
        )


def evaluate(c: NandCircuit, window: Sequence[int]) -> tuple[list[int], int]:
    """Values of all assignments (s_1 first) and the output bit."""
    if len(window) != c.width:
        raise ValueError(f"window has width {len(window)}, circuit expects {c.width}")
    r = c.radius
    vals: list[int] = []
    for gate in c.assignments:
        conj = 1
        for a in gate:
            bit = window[a.index + r] if a.kind == "u" else vals[a.index - 1]
            if not bit:
                conj = 0
                break
        vals.append(1 - conj)
    return vals, vals[-1]


def windows(width: int):
    """All bit windows of the given width, in table order (first bit most significant)."""
    for idx in range(1 << width):
        yield tuple((idx >> (width - 1 - b)) & 1 for b in range(width))


def window_index(window: Sequence[int]) -> int:
    idx = 0
    for b in window:
        idx = (idx << 1) | (b & 1)
    return idx


@dataclass(frozen=True)
class TruthTable:
    radius: int
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) & 1 for b in self.bits)
        if len(bits) != 1 << (2 * self.radius + 1):
            raise ValueError(
                f"table for radius {self.radius} needs {1 << (2 * self.radius + 1)} entries, got {len(bits)}"
            )
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_function(cls, radius: int, fn: Callable[..., int]) -> "TruthTable":
        return cls(radius, tuple(fn(*w) for w in windows(2 * radius + 1)))

    @property
    def width(self) -> int:
        return 2 * self.radius + 1

    def __call__(self, window: Sequence[int]) -> int:
        return self.bits[window_index(window)]

    def blank_preserving(self) -> bool:
        # 1 is the blank of a binary automaton
        return self.bits[-1] == 1


def synthesize_from_table(t: TruthTable) -> NandCircuit:
    """Sum-of-products circuit for ``t``.

    Each true window gives one gate [literals]; the output NANDs those
    gates, i.e. ORs the minterms.  Negated literals use one shared [u_i]
    gate per input.  Constants use x NAND not-x.
    """
    if t.width > MAX_TABLE_INPUTS:
        raise ValueError(f"table synthesis supports at most {MAX_TABLE_INPUTS} inputs")
    r = t.radius
    minterms = [w for w in windows(t.width) if t(w)]
    if len(minterms) == len(t.bits):
        return NandCircuit(r, ((u(0),), (u(0), s(1))))
    if not minterms:
        return NandCircuit(r, ((u(0),), (u(0), s(1)), (s(2),)))

    gates: list[tuple[Arg, ...]] = []
    negation: dict[int, int] = {}
    for i in range(-r, r + 1):
        if any(w[i + r] == 0 for w in minterms):
            gates.append((u(i),))
            negation[i] = len(gates)
    products = []
    for w in minterms:
        lits = tuple(u(i) if w[i + r] else s(negation[i]) for i in range(-r, r + 1))
        gates.append(lits)
        products.append(s(len(gates)))
    gates.append(tuple(products))
    return NandCircuit(r, tuple(gates))


def normalize_last(c: NandCircuit) -> NandCircuit:
    """Equivalent circuit whose inputs are read only through a prefix.

    The prefix is s_{i+r+1} = [u_i] and s_{i+3r+2} = [s_{i+r+1}] for
    -r <= i <= r; every later use of u_i becomes s_{i+3r+2} and every
    s_k becomes s_{k + 2(2r+1)}.  The result has N + 2(2r+1) assignments
    and its last assignment reads no input.
    """
    r = c.radius
    shift = 2 * (2 * r + 1)
    prefix = [(u(i),) for i in range(-r, r + 1)]
    prefix += [(s(i + r + 1),) for i in range(-r, r + 1)]

    def remap(a: Arg) -> Arg:
        return s(a.index + 3 * r + 2) if a.kind == "u" else s(a.index + shift)

    body = [tuple(remap(a) for a in g) for g in c.assignments]
    return NandCircuit(r, tuple(prefix + body))


def circuit_for_rule(radius: int, rule: Callable[..., int]) -> NandCircuit:
    """Normalized circuit computing a binary local rule given as a function."""
    return normalize_last(synthesize_from_table(TruthTable.from_function(radius, rule)))
