"""Compile a binary cellular automaton into subtraction games.

The automaton has blank symbol 1 and starts from ...11011... with the 0 at
cell 0.  Its transition function is given by a normalized circuit
s_1..s_N (last assignment reads no input).

Modular game (dimension 2, modulus 2N).  Time runs along (1, 1) and the
tape along (1, -1): cell u at time t sits at (Nt+u, Nt-u) and assignment
s_j for cell i sits at (Nt+i+j, Nt-i+j).  The set at residue 2j mod 2N
holds, for each argument of s_j, the vector (j-k, j+k) for an input u_k
and (j-k, j-k) for an assignment s_k.  Odd residues get empty sets.

Lifted game (dimension 2N+2).  Coordinates are (x1, x2, m_0..m_{2N-1});
a one-hot m tracks the residue of x1+x2, so the residue-dependent move
sets become one ordinary difference set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .game_core import DifferenceSet, ModularGame, Position, Solver
from .nand_circuit import NandCircuit, evaluate, normalize_last, synthesize_from_table, TruthTable


@dataclass(frozen=True)
class CompiledModularGame:
    game: ModularGame
    circuit: NandCircuit
    # residue -> assignment index whose arguments populate it
    provenance: dict

    @property
    def n_assignments(self) -> int:
        return self.circuit.size


@dataclass(frozen=True)
class LiftedGame:
    game: DifferenceSet
    n_assignments: int

    @property
    def dimension(self) -> int:
        return self.game.dimension


def compile_to_modular(circuit: NandCircuit) -> CompiledModularGame:
    if not circuit.last_is_input_free():
        raise ValueError("the last assignment reads an input; normalize the circuit first")
    n = circuit.size
    if n <= circuit.radius:
        raise ValueError(f"circuit size {n} must exceed the radius {circuit.radius}")
    sets: list[set] = [set() for _ in range(2 * n)]
    provenance = {}
    for j, gate in enumerate(circuit.assignments, start=1):
        res = (2 * j) % (2 * n)
        provenance[res] = j
        for a in gate:
            k = a.index
            vec = (j - k, j + k) if a.kind == "u" else (j - k, j - k)
            assert vec[0] + vec[1] > 0
            sets[res].add(vec)
    game = ModularGame(2, 2 * n, tuple(DifferenceSet(2, tuple(v)) for v in sets))
    return CompiledModularGame(game, circuit, provenance)


def lift_to_subtraction(m: CompiledModularGame) -> LiftedGame:
    mod = m.game.modulus
    n = mod // 2
    dim = 2 + mod
    vectors = []
    for j, ds in enumerate(m.game.sets):
        for a1, a2 in ds.vectors:
            k = (j - a1 - a2) % mod
            v = [0] * dim
            v[0], v[1] = a1, a2
            v[2 + j] += 1
            v[2 + k] -= 1
            vectors.append(tuple(v))
    return LiftedGame(DifferenceSet(dim, tuple(vectors)), n)


def lifted_position(n_assignments: int, x1: int, x2: int) -> Position:
    """(x1, x2, 0...) plus the hot coordinate for the residue of x1+x2."""
    mod = 2 * n_assignments
    pos = [0] * (2 + mod)
    pos[0], pos[1] = x1, x2
    pos[2 + (x1 + x2) % mod] = 1
    return tuple(pos)


def cell_position(n_assignments: int, t: int, u: int) -> Position:
    """Lifted-game position whose value is cell u at time t."""
    nt = n_assignments * t
    if abs(u) > nt:
        raise ValueError(f"|u| = {abs(u)} exceeds N*t = {nt}")
    return lifted_position(n_assignments, nt + u, nt - u)


def compile_rule(radius: int, rule: Callable[..., int]):
    """Normalized circuit, modular game and lifted game for a binary rule."""
    table = TruthTable.from_function(radius, rule)
    if not table.blank_preserving():
        raise ValueError("rule is not blank-preserving: delta(1, ..., 1) must be 1")
    circuit = normalize_last(synthesize_from_table(table))
    modular = compile_to_modular(circuit)
    return circuit, modular, lift_to_subtraction(modular)


def run_binary_ca(radius: int, rule: Callable[..., int], t_max: int) -> list[dict[int, int]]:
    """Rows c(t, .) for t = 0..t_max from the single-zero seed, as
    {cell: bit} over the cells that can be non-blank (|u| <= r t)."""
    row = {0: 0}
    rows = [row]
    for t in range(1, t_max + 1):
        prev = row
        row = {}
        for i in range(-radius * t, radius * t + 1):
            w = tuple(prev.get(i + d, 1) for d in range(-radius, radius + 1))
            row[i] = rule(*w)
        rows.append(row)
    return rows


@dataclass
class Mismatch:
    t: int
    u: int
    j: int | None  # None for a cell, else the assignment index
    game: str
    expected: int
    got: int

    def line(self) -> str:
        where = f"{self.u}" if self.j is None else f"{self.u}/s{self.j}"
        return f"{self.t} {where} {self.expected} {self.got}"


@dataclass
class SimulationReport:
    n_assignments: int
    t_max: int
    checked_cells: int = 0
    checked_intermediate: int = 0
    mismatches: list = None

    def __post_init__(self):
        if self.mismatches is None:
            self.mismatches = []

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch(self) -> Mismatch | None:
        return self.mismatches[0] if self.mismatches else None

    def lines(self) -> list[str]:
        out = [f"{m.line()} {m.game}" for m in self.mismatches]
        out.append("PASS" if self.passed else f"FAIL {len(self.mismatches)} mismatches")
        return out


def verify_simulation(
    radius: int,
    rule: Callable[..., int],
    circuit: NandCircuit,
    t_max: int,
    lifted: bool = True,
) -> SimulationReport:
    """Compare the automaton against game values.

    (i) every cell c(t, u) with |u| <= Nt against the position
    (Nt+u, Nt-u) of the modular game, and of the lifted game when
    ``lifted`` is set; (ii) for every cell i with |i| <= Nt and every
    1 <= j < N, the modular value at (Nt+i+j, Nt-i+j) against s_j on the
    window c(t, i-r..i+r).  All mismatches are collected.
    """
    modular = compile_to_modular(circuit)
    n = circuit.size
    mod_solver = Solver(modular.game)
    lift_solver = Solver(lift_to_subtraction(modular).game) if lifted else None
    rows = run_binary_ca(radius, rule, t_max)
    report = SimulationReport(n, t_max)

    def cell(t, i):
        return rows[t].get(i, 1)

    for t in range(t_max + 1):
        nt = n * t
        for i in range(-nt, nt + 1):
            expected = cell(t, i)
            got = mod_solver.value((nt + i, nt - i))
            report.checked_cells += 1
            if got != expected:
                report.mismatches.append(Mismatch(t, i, None, "modular", expected, got))
            if lift_solver is not None:
                got_l = lift_solver.value(lifted_position(n, nt + i, nt - i))
                if got_l != expected:
                    report.mismatches.append(Mismatch(t, i, None, "lifted", expected, got_l))
            window = tuple(cell(t, i + d) for d in range(-radius, radius + 1))
            vals, _ = evaluate(circuit, window)
            for j in range(1, n):
                got_j = mod_solver.value((nt + i + j, nt - i + j))
                report.checked_intermediate += 1
                if got_j != vals[j - 1]:
                    report.mismatches.append(Mismatch(t, i, j, "modular", vals[j - 1], got_j))
    return report


def compare_lifted_with_modular(modular: CompiledModularGame, plane_sum_bound: int):
    """Positions (x1, x2) with x1+x2 <= bound where the lifted game and the
    modular game disagree (the list is empty when they agree)."""
    n = modular.n_assignments
    mod_solver = Solver(modular.game)
    lift_solver = Solver(lift_to_subtraction(modular).game)
    bad = []
    for total in range(plane_sum_bound + 1):
        for x1 in range(total + 1):
            x2 = total - x1
            a = mod_solver.value((x1, x2))
            b = lift_solver.value(lifted_position(n, x1, x2))
            if a != b:
                bad.append(((x1, x2), a, b))
    return bad
