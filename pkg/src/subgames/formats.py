"""Plain-text file formats.

All formats are line oriented; ``#`` starts a comment and blank lines are
ignored.

difference set::

    dim 2
    1 0
    0 1

modular game::

    dim 2
    mod 2
    set 0
    1 1
    set 1
    2 0

graph (0-based vertices)::

    n 3
    e 0 1
    e 1 2

circuit::

    radius 1
    s1 = [u-1, u1]
    s2 = [s1]

Turing machine (states 1..q, symbols 0..tapealpha-1, the last is the blank)::

    states 4
    tapealpha 3
    d 1 0 -> 1 0 R

automaton rule table (radius from the window width; blank 1 for a binary
alphabet, else 0, unless a ``blank`` line says otherwise)::

    blank 1
    0 0 0 -> 1
"""

from __future__ import annotations

import itertools
import re
from pathlib import Path

from .automata import CellularAutomaton, TuringMachine
from .game_core import DifferenceSet, ModularGame
from .kayles import SimpleGraph
from .nand_circuit import Arg, NandCircuit


class FormatError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        super().__init__(f"line {line}: {msg}" if line else msg)
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(parts, no):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(parts)!r}", no) from None


def _directive(line: str, key: str, no: int) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise FormatError(f"expected '{key} <int>'", no)
    return _ints(parts[1:], no)[0]


def _vector(line, dim, no):
    v = _ints(line.split(), no)
    if len(v) != dim:
        raise FormatError(f"vector has {len(v)} entries, expected {dim}", no)
    if sum(v) <= 0:
        raise FormatError(f"vector {tuple(v)} has non-positive coordinate sum", no)
    return tuple(v)


# --- games --------------------------------------------------------------------


def parse_game(text: str) -> DifferenceSet | ModularGame:
    """Difference set or modular game, told apart by a ``mod`` line."""
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty game file")
    no, first = lines[0]
    dim = _directive(first, "dim", no)
    if dim < 1:
        raise FormatError("dimension must be positive", no)
    rest = lines[1:]
    if rest and rest[0][1].split()[0] == "mod":
        no, line = rest[0]
        mod = _directive(line, "mod", no)
        if mod < 1:
            raise FormatError("modulus must be positive", no)
        sets: list[list] = [[] for _ in range(mod)]
        current = None
        for no, line in rest[1:]:
            if line.split()[0] == "set":
                r = _directive(line, "set", no)
                if not 0 <= r < mod:
                    raise FormatError(f"residue {r} outside 0..{mod - 1}", no)
                current = sets[r]
            elif current is None:
                raise FormatError("vector before any 'set' line", no)
            else:
                current.append(_vector(line, dim, no))
        return ModularGame(dim, mod, tuple(DifferenceSet(dim, tuple(s)) for s in sets))
    return DifferenceSet(dim, tuple(_vector(line, dim, no) for no, line in rest))


def format_difference_set(ds: DifferenceSet) -> str:
    out = [f"dim {ds.dimension}"]
    out += [" ".join(map(str, v)) for v in ds.vectors]
    return "\n".join(out) + "\n"


def format_modular_game(g: ModularGame) -> str:
    out = [f"dim {g.dimension}", f"mod {g.modulus}"]
    for r, ds in enumerate(g.sets):
        out.append(f"set {r}")
        out += [" ".join(map(str, v)) for v in ds.vectors]
    return "\n".join(out) + "\n"


def format_game(g) -> str:
    return format_modular_game(g) if isinstance(g, ModularGame) else format_difference_set(g)


# --- graphs -------------------------------------------------------------------


def parse_graph(text: str) -> SimpleGraph:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    no, first = lines[0]
    n = _directive(first, "n", no)
    edges = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise FormatError("expected 'e <u> <v>'", no)
        edges.append(tuple(_ints(parts[1:], no)))
    try:
        return SimpleGraph(n, tuple(edges))
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_graph(g: SimpleGraph) -> str:
    return "\n".join([f"n {g.n}"] + [f"e {a} {b}" for a, b in g.edges]) + "\n"


# --- circuits -----------------------------------------------------------------

_ASSIGN = re.compile(r"^s(\d+)\s*=\s*\[(.*)\]$")
_ARG = re.compile(r"^([us])(-?\d+)$")


def parse_circuit(text: str) -> NandCircuit:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty circuit file")
    no, first = lines[0]
    radius = _directive(first, "radius", no)
    gates = []
    for no, line in lines[1:]:
        m = _ASSIGN.match(line)
        if not m:
            raise FormatError("expected 's<j> = [args]'", no)
        if int(m.group(1)) != len(gates) + 1:
            raise FormatError(f"expected s{len(gates) + 1}", no)
        args = []
        for part in m.group(2).split(","):
            a = _ARG.match(part.strip())
            if not a:
                raise FormatError(f"bad argument {part.strip()!r}", no)
            args.append(Arg(a.group(1), int(a.group(2))))
        gates.append(tuple(args))
    try:
        return NandCircuit(radius, tuple(gates))
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_circuit(c: NandCircuit) -> str:
    return f"radius {c.radius}\n{c}\n"


# --- Turing machines ----------------------------------------------------------

_MOVES = {"L": -1, "R": 1}


def parse_tm(text: str, name: str = "") -> TuringMachine:
    lines = list(_lines(text))
    if len(lines) < 2:
        raise FormatError("machine file needs 'states' and 'tapealpha' lines")
    q = _directive(lines[0][1], "states", lines[0][0])
    alpha = _directive(lines[1][1], "tapealpha", lines[1][0])
    delta = {}
    for no, line in lines[2:]:
        parts = line.split()
        if len(parts) != 7 or parts[0] != "d" or parts[3] != "->" or parts[6] not in _MOVES:
            raise FormatError("expected 'd <s> <a> -> <s'> <a'> <L|R>'", no)
        s, a, s2, b = _ints(parts[1:3] + parts[4:6], no)
        if (s, a) in delta:
            raise FormatError(f"duplicate transition for ({s}, {a})", no)
        delta[(s, a)] = (s2, b, _MOVES[parts[6]])
    try:
        return TuringMachine(q, alpha - 1, delta, name=name)
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_tm(m: TuringMachine) -> str:
    out = [f"states {m.n_states}", f"tapealpha {m.blank + 1}"]
    for (s, a), (s2, b, d) in sorted(m.delta.items()):
        out.append(f"d {s} {a} -> {s2} {b} {'R' if d == 1 else 'L'}")
    return "\n".join(out) + "\n"


# --- automaton rule tables ----------------------------------------------------


def parse_rule_table(text: str, name: str = "") -> CellularAutomaton:
    blank = None
    table = {}
    for no, line in _lines(text):
        if line.split()[0] == "blank":
            blank = _directive(line, "blank", no)
            continue
        if "->" not in line:
            raise FormatError("expected '<window> -> <symbol>'", no)
        lhs, rhs = line.split("->")
        window = tuple(_ints(lhs.split(), no))
        out = _ints(rhs.split(), no)
        if len(out) != 1:
            raise FormatError("the right-hand side must be one symbol", no)
        if window in table:
            raise FormatError(f"duplicate window {window}", no)
        table[window] = out[0]
    if not table:
        raise FormatError("empty rule table")
    symbols = sorted({a for w in table for a in w} | set(table.values()))
    if blank is None:
        blank = 1 if symbols == [0, 1] else 0
    try:
        return CellularAutomaton.from_table(table, blank, sorted(set(symbols) | {blank}), name=name)
    except ValueError as e:
        raise FormatError(str(e)) from None


def format_rule_table(ca: CellularAutomaton) -> str:
    out = [f"blank {ca.blank}"]
    for w in itertools.product(ca.alphabet, repeat=2 * ca.radius + 1):
        out.append(f"{' '.join(map(str, w))} -> {ca.rule(w)}")
    return "\n".join(out) + "\n"


def read(path, parser):
    """Parse a file; unreadable files are reported as format errors."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None
    return parser(text)
