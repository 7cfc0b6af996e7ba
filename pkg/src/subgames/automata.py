"""Cellular automata, Turing machines, and the machine-to-automaton encoding.

Configurations are finite-support words on a doubly infinite tape: a base
offset, the cells from that offset on, and the blank everywhere else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

Symbol = Hashable

START, ACCEPT, REJECT = 1, 2, 3
HALTING = (ACCEPT, REJECT)

# explicit tables are materialized up to this many windows
TABLE_LIMIT = 1 << 16


@dataclass(frozen=True)
class Configuration:
    offset: int
    cells: tuple
    blank: Symbol

    def __post_init__(self):
        cells = tuple(self.cells)
        lo, hi = 0, len(cells)
        while lo < hi and cells[lo] == self.blank:
            lo += 1
        while hi > lo and cells[hi - 1] == self.blank:
            hi -= 1
        object.__setattr__(self, "cells", cells[lo:hi])
        object.__setattr__(self, "offset", self.offset + lo if hi > lo else 0)

    @classmethod
    def from_mapping(cls, cells: Mapping[int, Symbol], blank: Symbol) -> "Configuration":
        if not cells:
            return cls(0, (), blank)
        lo, hi = min(cells), max(cells)
        return cls(lo, tuple(cells.get(i, blank) for i in range(lo, hi + 1)), blank)

    @classmethod
    def single(cls, symbol: Symbol, blank: Symbol, at: int = 0) -> "Configuration":
        return cls(at, (symbol,), blank)

    def __getitem__(self, u: int) -> Symbol:
        i = u - self.offset
        if 0 <= i < len(self.cells):
            return self.cells[i]
        return self.blank

    @property
    def is_blank(self) -> bool:
        return not self.cells

    @property
    def span(self) -> tuple[int, int]:
        """Inclusive range of the non-blank support (empty support gives (0, -1))."""
        return self.offset, self.offset + len(self.cells) - 1

    def window(self, u: int, r: int) -> tuple:
        return tuple(self[u + d] for d in range(-r, r + 1))


@dataclass(frozen=True, eq=False)
class CellularAutomaton:
    """Local rule over ``alphabet`` reading windows of width 2r+1.

    ``rule`` takes the window as a tuple.  ``table`` is kept when the rule
    was given explicitly.
    """

    alphabet: tuple
    blank: Symbol
    radius: int
    rule: Callable[[tuple], Symbol]
    table: Mapping | None = field(default=None, repr=False)
    name: str = ""

    def __post_init__(self):
        if self.blank not in self.alphabet:
            raise ValueError(f"blank {self.blank!r} is not in the alphabet")
        if self.rule((self.blank,) * (2 * self.radius + 1)) != self.blank:
            raise ValueError("rule is not blank-preserving")
        object.__setattr__(self, "_symbols", frozenset(self.alphabet))

    @classmethod
    def from_table(cls, table: Mapping[tuple, Symbol], blank: Symbol, alphabet: Iterable | None = None,
                   name: str = "") -> "CellularAutomaton":
        if not table:
            raise ValueError("empty rule table")
        widths = {len(w) for w in table}
        if len(widths) != 1 or widths.pop() % 2 == 0:
            raise ValueError("all windows must share one odd width")
        width = len(next(iter(table)))
        if alphabet is None:
            alphabet = sorted({a for w in table for a in w} | set(table.values()) | {blank})
        alphabet = tuple(alphabet)
        if len(table) != len(alphabet) ** width:
            raise ValueError(f"rule table has {len(table)} windows, expected {len(alphabet) ** width}")
        frozen = dict(table)
        return cls(alphabet, blank, width // 2, frozen.__getitem__, frozen, name)

    @classmethod
    def from_function(cls, alphabet: Sequence, blank: Symbol, radius: int, fn: Callable[..., Symbol],
                      name: str = "") -> "CellularAutomaton":
        table = {w: fn(*w) for w in itertools.product(alphabet, repeat=2 * radius + 1)}
        return cls.from_table(table, blank, alphabet, name)

    def in_alphabet(self, symbol) -> bool:
        return symbol in self._symbols


def ca_step(ca: CellularAutomaton, conf: Configuration) -> Configuration:
    if conf.blank != ca.blank:
        raise ValueError("configuration blank differs from the automaton blank")
    for a in conf.cells:
        if not ca.in_alphabet(a):
            raise ValueError(f"symbol {a!r} is not in the automaton alphabet")
    if conf.is_blank:
        return conf
    r = ca.radius
    pad = (ca.blank,) * (2 * r)
    row = pad + conf.cells + pad
    width = 2 * r + 1
    rule = ca.rule
    new = tuple(rule(row[i:i + width]) for i in range(len(conf.cells) + 2 * r))
    return Configuration(conf.offset - r, new, ca.blank)


def ca_run(ca: CellularAutomaton, conf: Configuration, t: int) -> Configuration:
    if t < 0:
        raise ValueError("t must be non-negative")
    for _ in range(t):
        conf = ca_step(ca, conf)
    return conf


def ca_history(ca: CellularAutomaton, conf: Configuration, t: int) -> list[Configuration]:
    out = [conf]
    for _ in range(t):
        conf = ca_step(ca, conf)
        out.append(conf)
    return out


# --- Turing machines ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TuringMachine:
    """Single-tape machine with states 1..q (1 start, 2 accept, 3 reject),
    tape symbols 0..blank, and moves +1 / -1."""

    n_states: int
    blank: int
    delta: Mapping[tuple[int, int], tuple[int, int, int]]
    name: str = ""

    def __post_init__(self):
        if self.n_states < 3:
            raise ValueError("a machine needs at least the start, accept and reject states")
        if self.blank < 2:
            raise ValueError("the blank must be a symbol other than 0 and 1")
        for (q, a), (q2, b, d) in self.delta.items():
            if not (1 <= q <= self.n_states and 1 <= q2 <= self.n_states):
                raise ValueError(f"transition ({q}, {a}) uses a state out of range")
            if not (0 <= a <= self.blank and 0 <= b <= self.blank):
                raise ValueError(f"transition ({q}, {a}) uses a symbol out of range")
            if d not in (1, -1):
                raise ValueError(f"transition ({q}, {a}) has move {d}")
        for q in self.working_states:
            for a in range(self.blank + 1):
                if (q, a) not in self.delta:
                    raise ValueError(f"no transition for state {q} on symbol {a}")

    @property
    def working_states(self) -> list[int]:
        return [q for q in range(1, self.n_states + 1) if q not in HALTING]

    @property
    def tape_symbols(self) -> int:
        return self.blank + 1

    @property
    def ca_alphabet_size(self) -> int:
        return (self.n_states + 1) * (self.blank + 1)


@dataclass(frozen=True)
class TmConfiguration:
    tape: Configuration
    head: int
    state: int

    def symbol(self) -> int:
        return self.tape[self.head]


@dataclass(frozen=True)
class TmRun:
    status: str  # "accept", "reject" or "running"
    config: TmConfiguration
    steps: int


def initial_config(m: TuringMachine, word: str | Sequence[int]) -> TmConfiguration:
    symbols = tuple(int(c) for c in word)
    if any(c not in (0, 1) for c in symbols):
        raise ValueError("input must be a binary word")
    return TmConfiguration(Configuration(0, symbols, m.blank), 0, START)


def tm_step(m: TuringMachine, cfg: TmConfiguration) -> TmConfiguration:
    if cfg.state in HALTING:
        return cfg
    q, b, d = m.delta[(cfg.state, cfg.symbol())]
    lo, hi = cfg.tape.span
    lo, hi = min(lo, cfg.head), max(hi, cfg.head)
    cells = {i: cfg.tape[i] for i in range(lo, hi + 1)}
    cells[cfg.head] = b
    return TmConfiguration(Configuration.from_mapping(cells, m.blank), cfg.head + d, q)


def status_of(state: int) -> str:
    return {ACCEPT: "accept", REJECT: "reject"}.get(state, "running")


def tm_run(m: TuringMachine, word: str | Sequence[int], max_steps: int) -> TmRun:
    cfg = initial_config(m, word)
    steps = 0
    while cfg.state not in HALTING and steps < max_steps:
        cfg = tm_step(m, cfg)
        steps += 1
    return TmRun(status_of(cfg.state), cfg, steps)


def tm_trace(m: TuringMachine, cfg: TmConfiguration, steps: int) -> list[TmConfiguration]:
    out = [cfg]
    for _ in range(steps):
        cfg = tm_step(m, cfg)
        out.append(cfg)
    return out


# --- machine -> automaton -----------------------------------------------------


def tm_to_ca(m: TuringMachine) -> CellularAutomaton:
    """Radius-1 automaton over pairs (state, symbol); state 0 marks cells
    without the head.  Halted heads stay in place; a window with two heads
    keeps its centre."""
    blank = (0, m.blank)
    alphabet = tuple((q, a) for q in range(m.n_states + 1) for a in range(m.blank + 1))
    delta = m.delta

    def rule(window):
        (ql, al), (qc, ac), (qr, ar) = window
        heads = (ql > 0) + (qc > 0) + (qr > 0)
        if heads > 1:
            return window[1]
        if qc > 0:
            if qc in HALTING:
                return window[1]
            return (0, delta[(qc, ac)][1])
        if ql > 0 and ql not in HALTING:
            q2, _, d = delta[(ql, al)]
            if d == 1:
                return (q2, ac)
        if qr > 0 and qr not in HALTING:
            q2, _, d = delta[(qr, ar)]
            if d == -1:
                return (q2, ac)
        return window[1]

    table = {w: rule(w) for w in itertools.product(alphabet, repeat=3)}
    return CellularAutomaton(alphabet, blank, 1, table.__getitem__, table, name=f"ca({m.name})")


def encode_tm_config(m: TuringMachine, cfg: TmConfiguration) -> Configuration:
    lo, hi = cfg.tape.span
    lo, hi = min(lo, cfg.head), max(hi, cfg.head)
    cells = {i: (0, cfg.tape[i]) for i in range(lo, hi + 1)}
    cells[cfg.head] = (cfg.state, cfg.tape[cfg.head])
    return Configuration.from_mapping(cells, (0, m.blank))


def decode_ca_config(m: TuringMachine, conf: Configuration) -> TmConfiguration:
    heads = [conf.offset + i for i, (q, _) in enumerate(conf.cells) if q > 0]
    if len(heads) != 1:
        raise ValueError(f"expected exactly one head, found {len(heads)}")
    head = heads[0]
    tape = Configuration(conf.offset, tuple(a for _, a in conf.cells), m.blank)
    return TmConfiguration(tape, head, conf[head][0])


def tm_pins(m: TuringMachine) -> dict:
    """Codes forced on a relabeling of tm_to_ca(m): blank to 0, the start
    head on a blank to 1, and the plain symbol 1 to L-1."""
    size = m.ca_alphabet_size
    return {(0, m.blank): 0, (START, m.blank): 1, (0, 1): size - 1}


def tm_relabeling(m: TuringMachine) -> dict:
    pins = tm_pins(m)
    free = iter(range(2, m.ca_alphabet_size - 1))
    pi = {}
    for q in range(m.n_states + 1):
        for a in range(m.blank + 1):
            pi[(q, a)] = pins[(q, a)] if (q, a) in pins else next(free)
    return pi


def relabel_ca(ca: CellularAutomaton, pi: Mapping, pins: Mapping | None = None) -> CellularAutomaton:
    """Isomorphic automaton over 0..L-1 with rule pi . delta . pi^-1.

    ``pi`` must be a bijection onto 0..L-1 sending the blank to 0; ``pins``
    lists further symbol -> code requirements.
    """
    size = len(ca.alphabet)
    if set(pi) != set(ca.alphabet):
        raise ValueError("relabeling must be defined exactly on the alphabet")
    if sorted(pi.values()) != list(range(size)):
        raise ValueError(f"relabeling must be a bijection onto 0..{size - 1}")
    if pi[ca.blank] != 0:
        raise ValueError("relabeling must send the blank to 0")
    for sym, code in (pins or {}).items():
        if pi.get(sym) != code:
            raise ValueError(f"relabeling must send {sym!r} to {code}")
    inv = {v: k for k, v in pi.items()}
    width = 2 * ca.radius + 1

    def rule(window):
        return pi[ca.rule(tuple(inv[i] for i in window))]

    alphabet = tuple(range(size))
    if size ** width <= TABLE_LIMIT:
        table = {w: rule(w) for w in itertools.product(alphabet, repeat=width)}
        return CellularAutomaton(alphabet, 0, ca.radius, table.__getitem__, table, name=ca.name)
    return CellularAutomaton(alphabet, 0, ca.radius, rule, name=ca.name)


def relabel_config(conf: Configuration, pi: Mapping) -> Configuration:
    return Configuration(conf.offset, tuple(pi[a] for a in conf.cells), pi[conf.blank])


def unrelabel_config(conf: Configuration, pi: Mapping) -> Configuration:
    inv = {v: k for k, v in pi.items()}
    return Configuration(conf.offset, tuple(inv[a] for a in conf.cells), inv[conf.blank])


# --- sample machines ----------------------------------------------------------


def parity_machine() -> TuringMachine:
    """Accepts binary words with an even number of ones (states: 1 even, 4 odd)."""
    R = 1
    return TuringMachine(4, 2, {
        (1, 0): (1, 0, R), (1, 1): (4, 1, R), (1, 2): (ACCEPT, 2, R),
        (4, 0): (4, 0, R), (4, 1): (1, 1, R), (4, 2): (REJECT, 2, R),
    }, name="parity")


def last_bit_machine() -> TuringMachine:
    """Accepts words ending in 1: runs right to the blank, steps back, reads."""
    R, L = 1, -1
    return TuringMachine(4, 2, {
        (1, 0): (1, 0, R), (1, 1): (1, 1, R), (1, 2): (4, 2, L),
        (4, 0): (REJECT, 0, L), (4, 1): (ACCEPT, 1, L), (4, 2): (REJECT, 2, L),
    }, name="last-bit")


def eraser_machine() -> TuringMachine:
    """Overwrites the input with zeros, walks back to the left end and
    accepts iff the first symbol was 1.  Exercises writes and left walks."""
    R, L = 1, -1
    return TuringMachine(7, 2, {
        (1, 0): (4, 0, R), (1, 1): (5, 0, R), (1, 2): (REJECT, 2, R),
        # 4 / 5 erase to the right, remembering the first bit
        (4, 0): (4, 0, R), (4, 1): (4, 0, R), (4, 2): (6, 2, L),
        (5, 0): (5, 0, R), (5, 1): (5, 0, R), (5, 2): (7, 2, L),
        # 6 / 7 walk back to the blank left of the word
        (6, 0): (6, 0, L), (6, 1): (6, 1, L), (6, 2): (REJECT, 2, R),
        (7, 0): (7, 0, L), (7, 1): (7, 1, L), (7, 2): (ACCEPT, 2, R),
    }, name="eraser")


def immediate_accept_machine() -> TuringMachine:
    return TuringMachine(3, 2, {(1, a): (ACCEPT, a, 1) for a in range(3)}, name="accept")
