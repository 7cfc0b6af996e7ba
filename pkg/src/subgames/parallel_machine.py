"""Zone-level interpreter of a machine that runs M on every input at once.

Tape layout (cells of the simulating machine U)::

    0: ◁   1: spare   then zones, each  ◇ R # w # [T blanks] w [T blanks]

and ▷ after the last zone.  R is the result block, (0, 1) once M has
accepted, (0, 0) otherwise.  The zone for w has 4 + 2|w| + 2T(|w|) cells
counting its ◇, so the zone of the k-th word starts at

    S = sum_{l<n} 2^l (4 + 2l + 2T(l)) + bin(w)(4 + 2n + 2T(n)) + 2

and its result block sits at S + 1.

U is not built as a state table.  The interpreter moves a virtual head one
cell per step and charges every head movement of the procedure: the
sweep over all zones, one step of M per unfinished zone, the walk back to
a result block when M halts, and the creation of a fresh zone (copying
the previous word, incrementing it, marking T(n) cells with a binary
counter carried along, copying the word into the configuration block).
Before entering a result block the head makes dummy moves so that every
arrival there happens at a step divisible by 3.
"""

from __future__ import annotations

import bisect
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field

from .automata import ACCEPT, HALTING, START, Configuration, TmConfiguration, TuringMachine, tm_run
from .game_compiler import cell_position

LEFT_END, RIGHT_END, ZONE_MARK, SEP, SPARE, U_BLANK = "◁", "▷", "◇", "#", "_", "."
RESULT_ACCEPT, RESULT_REJECT = (0, 1), (0, 0)
FIRST_ZONE = 2

# Accept indicator inside the binary image of the result block: with the
# plain symbol (0, 1) relabeled to L-1 its block reads 1 1 0^(L-1) 1, so
# the bit at offset 2 is 0 exactly when M accepted.
ACCEPT_BIT_OFFSET = 2
ACCEPT_BIT_VALUE = 0


class HeadTimingError(AssertionError):
    """The head reached a result block at a step not divisible by 3."""


@dataclass(frozen=True)
class TimeBudget:
    """T(n) = C * 2^(n^kappa)."""

    C: int = 1
    kappa: int = 1

    def __post_init__(self):
        if self.C < 1 or self.kappa < 1:
            raise ValueError("C and kappa must be positive integers")

    def __call__(self, n: int) -> int:
        return self.C << (n ** self.kappa)


def bin_value(w: str) -> int:
    if any(c not in "01" for c in w):
        raise ValueError(f"{w!r} is not a binary word")
    return int(w, 2) if w else 0


def word_index(w: str) -> int:
    """Position of w in the order by length, then lexicographically (from 1)."""
    return (1 << len(w)) + bin_value(w)


def word_at(k: int) -> str:
    if k < 1:
        raise ValueError("word indices start at 1")
    n = k.bit_length() - 1
    return format(k - (1 << n), f"0{n}b") if n else ""


def next_word(w: str) -> str:
    """Successor in the same order: add 1 modulo 2^|w|, and on overflow
    append a zero."""
    n = len(w)
    v = bin_value(w) + 1
    if v == 1 << n:
        return "0" * (n + 1)
    return format(v, f"0{n}b")


def zone_size(n: int, T) -> int:
    return 4 + 2 * n + 2 * T(n)


def zone_offset(w: str, T) -> tuple[int, int]:
    """(S, S+1): first cell of the zone of w and its result block."""
    n = len(w)
    S = sum((1 << l) * zone_size(l, T) for l in range(n))
    S += bin_value(w) * zone_size(n, T) + FIRST_ZONE
    return S, S + 1


@dataclass
class Zone:
    index: int
    word: str
    start: int
    margin: int
    steps: int = 0
    finished: bool = False
    result: str | None = None
    result_time: int | None = None
    head: int = 0  # absolute cell of M's head
    state: int = START

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def result_cell(self) -> int:
        return self.start + 1

    @property
    def input_start(self) -> int:
        return self.start + 3

    @property
    def config_start(self) -> int:
        return self.start + 4 + self.n

    @property
    def end(self) -> int:
        """First cell after the zone (the next ◇ or ▷)."""
        return self.start + 4 + 2 * self.n + 2 * self.margin


class ZoneTape:
    """State of U: tape, virtual head, step counter, stage counter."""

    def __init__(self, machine: TuringMachine, budget: TimeBudget):
        self.machine = machine
        self.budget = budget
        self.cells: dict[int, object] = {}
        self.head = 0
        self.t = 0
        self.stage = 0
        self.zones: list[Zone] = []
        self.result_cells: list[int] = []
        self.first_block_visits = 0
        # U starts on a blank tape at cell 0
        self._write(LEFT_END)
        self._right()
        self._write(SPARE)
        self._right()
        self._write(RIGHT_END)
        self._walk(0)

    # -- primitive moves --------------------------------------------------

    def _write(self, sym):
        self.cells[self.head] = sym

    def _read(self, i=None):
        return self.cells.get(self.head if i is None else i, U_BLANK)

    def _arrive(self):
        if self.result_cells:
            i = bisect.bisect_left(self.result_cells, self.head)
            if i < len(self.result_cells) and self.result_cells[i] == self.head:
                self.first_block_visits += 1
                if self.t % 3:
                    raise HeadTimingError(f"result block {self.head} entered at step {self.t}")

    def _move(self, d):
        self.head += d
        self.t += 1
        self._arrive()

    def _is_result(self, i):
        j = bisect.bisect_left(self.result_cells, i)
        return j < len(self.result_cells) and self.result_cells[j] == i

    def _right(self):
        if self._is_result(self.head + 1):
            # dummy moves: left and back until the arrival step is 0 mod 3
            while (self.t + 1) % 3:
                self._move(-1)
                self._move(1)
        self._move(1)

    def _left(self):
        if self._is_result(self.head - 1):
            while (self.t + 1) % 3:
                self._move(1)
                self._move(-1)
        self._move(-1)

    def _walk(self, target):
        """Walk cell by cell; plain stretches are charged in one go."""
        rc = self.result_cells
        while self.head < target:
            i = bisect.bisect_right(rc, self.head)
            nxt = rc[i] if i < len(rc) else None
            if nxt is not None and nxt <= target:
                # plain cells up to the one before the block, then a guarded step
                self.t += (nxt - 1) - self.head
                self.head = nxt - 1
                self._right()
            else:
                self.t += target - self.head
                self.head = target
        while self.head > target:
            i = bisect.bisect_left(rc, self.head) - 1
            nxt = rc[i] if i >= 0 else None
            if nxt is not None and nxt >= target:
                self.t += self.head - (nxt + 1)
                self.head = nxt + 1
                self._left()
            else:
                self.t += self.head - target
                self.head = target

    # -- stages -----------------------------------------------------------

    def _step_zone(self, z: Zone):
        m = self.machine
        self._walk(z.head)
        q, a = self._read()
        q2, b, d = m.delta[(q, a)]
        self._write((0, b))
        if q2 in HALTING:
            # the move of a halting step is irrelevant to the verdict; the
            # head stays so that a run of exactly T(n) steps fits the margin
            d = 0
        else:
            self._move(d)
        z.head += d
        if not z.config_start <= z.head < z.end:
            raise RuntimeError(f"M left the configuration block of zone {z.index}; T is too small")
        self._write((q2, self._read()[1]))
        z.state = q2
        z.steps += 1
        if q2 in HALTING:
            self._walk(z.result_cell)
            z.result_time = self.t
            self._write(RESULT_ACCEPT if q2 == ACCEPT else RESULT_REJECT)
            z.result = "accept" if q2 == ACCEPT else "reject"
            z.finished = True

    def _counter_march(self, cells: int, n: int):
        """Mark ``cells`` cells to the right, carrying a binary counter of
        T(n) along: each cell costs a sweep over the counter and back."""
        bits = max(1, self.budget(n).bit_length())
        for _ in range(cells):
            self._walk(self.head + bits)
            self._walk(self.head - bits)
            self._write((0, self.machine.blank))
            self._right()

    def _fresh_zone(self):
        m = self.machine
        k = len(self.zones) + 1
        prev = self.zones[-1] if self.zones else None
        start = self.head
        self._write(ZONE_MARK)
        self._right()
        self.result_cells.append(start + 1)
        self._write(RESULT_REJECT)
        self._right()
        self._write(SEP)
        self._right()
        in0 = start + 3
        if prev is None:
            word = ""
        else:
            for i, c in enumerate(prev.word):
                self._walk(prev.input_start + i)
                self._walk(in0 + i)
                self._write(c)
            word = next_word(prev.word)
            # increment in place: clear trailing ones, then set a zero or extend
            self._walk(in0 + len(prev.word) - 1 if prev.word else in0)
            while self.head >= in0 and self._read() == "1":
                self._write("0")
                self._left()
            if len(word) > len(prev.word):
                self._walk(in0 + len(prev.word))
                self._write("0")
            else:
                self._write("1")
        n = len(word)
        T = self.budget(n)
        if T <= n:
            raise ValueError(f"T({n}) = {T} must exceed {n}")
        self._walk(in0 + n)
        self._write(SEP)
        self._right()
        # computing the counter value: polynomial in its bit length
        bits = max(1, T.bit_length())
        for _ in range(bits):
            self._walk(self.head + bits)
            self._walk(self.head - bits)
        cfg0 = in0 + n + 1
        self._counter_march(T, n)
        for i in range(max(n, 1)):
            sym = int(word[i]) if i < n else m.blank
            if i < n:
                self._walk(in0 + i)
            self._walk(cfg0 + T + i)
            self._write((START if i == 0 else 0, sym))
        self._walk(cfg0 + T + n)
        if n == 0:
            # the head cell of an empty input is the first right-margin cell
            self._walk(cfg0 + T + 1)
            self._counter_march(T - 1, n)
        else:
            self._counter_march(T, n)
        self._write(RIGHT_END)
        zone = Zone(k, word, start, T, head=cfg0 + T)
        assert self.head == zone.end
        self.zones.append(zone)

    def run_stage(self) -> "ZoneTape":
        self.stage += 1
        for z in self.zones:
            self._walk(z.start)
            if not z.finished:
                self._step_zone(z)
        self._walk(self.zones[-1].end if self.zones else FIRST_ZONE)
        self._fresh_zone()
        self._walk(0)
        return self

    # -- views ------------------------------------------------------------

    @property
    def length(self) -> int:
        return (self.zones[-1].end if self.zones else FIRST_ZONE) + 1

    def render(self) -> list:
        return [self.cells.get(i, U_BLANK) for i in range(self.length)]

    def zone_config(self, z: Zone) -> TmConfiguration:
        """The configuration of M held by a zone, with cells numbered from
        the first input cell as in a direct run."""
        origin = z.config_start + z.margin
        cells = {i - origin: self.cells[i][1] for i in range(z.config_start, z.end)}
        head_state = self.cells[z.head][0]
        return TmConfiguration(
            Configuration.from_mapping(cells, self.machine.blank), z.head - origin, head_state
        )


def run_stage(tape: ZoneTape, machine: TuringMachine = None, budget: TimeBudget = None) -> ZoneTape:
    """Advance U by one stage (in place; the tape is returned)."""
    if machine is not None and machine is not tape.machine:
        raise ValueError("tape was built for a different machine")
    if budget is not None and budget != tape.budget:
        raise ValueError("tape was built for a different time budget")
    return tape.run_stage()


@dataclass(frozen=True)
class UResult:
    word: str
    verdict: str
    t_res: int
    stages: int
    bound: int

    @property
    def within_bound(self) -> bool:
        return self.t_res < self.bound


def default_stage_budget(n: int, budget: TimeBudget) -> int:
    return (1 << (n + 1)) + budget(n)


def run_until_result(machine: TuringMachine, budget: TimeBudget, w: str,
                     stage_budget: int | None = None, tape: ZoneTape | None = None) -> UResult:
    """Run stages until the zone of w holds M's verdict.

    ``t_res`` is the step at which U writes the result block; ``bound`` is
    2^(4 n^kappa).  Pass ``tape`` to continue an existing run.
    """
    n = len(w)
    k = word_index(w)
    if tm_run(machine, w, budget(n)).status == "running":
        raise ValueError(f"M does not halt on {w!r} within T({n}) = {budget(n)} steps")
    if stage_budget is None:
        stage_budget = default_stage_budget(n, budget)
    if tape is None:
        tape = ZoneTape(machine, budget)
    while not (len(tape.zones) >= k and tape.zones[k - 1].finished):
        if tape.stage >= stage_budget:
            raise RuntimeError(f"no result for {w!r} within {stage_budget} stages")
        tape.run_stage()
    z = tape.zones[k - 1]
    return UResult(w, z.result, z.result_time, tape.stage, 1 << (4 * n ** budget.kappa))


# --- reduction arithmetic -------------------------------------------------------


@contextmanager
def _unlimited_digits():
    # t = 2^(4 n^kappa) outgrows the default int/str conversion limit
    get = getattr(sys, "get_int_max_str_digits", None)
    if get is None:
        yield
        return
    old = get()
    sys.set_int_max_str_digits(0)
    try:
        yield
    finally:
        sys.set_int_max_str_digits(old)


@dataclass(frozen=True)
class ReductionPoint:
    word: str
    k: int
    S: int
    u: int
    t: int
    n_assignments: int
    position: tuple | None

    def report_line(self) -> str:
        with _unlimited_digits():
            return self._report_line()

    def _report_line(self) -> str:
        pos = "-" if self.position is None else "(" + ",".join(map(str, self.position)) + ")"
        return f"w={self.word} k={self.k} S={self.S} u={self.u} t={self.t} pos={pos}"


def parse_report_line(line: str) -> dict:
    with _unlimited_digits():
        return _parse_report_line(line)


def _parse_report_line(line: str) -> dict:
    fields = dict(part.split("=", 1) for part in line.split())
    out = {"w": fields["w"]}
    for key in ("k", "S", "u", "t"):
        out[key] = int(fields[key])
    pos = fields["pos"]
    out["pos"] = None if pos == "-" else tuple(int(x) for x in pos.strip("()").split(","))
    return out


def reduction_position(w: str, n_assignments: int, L: int, kappa: int = 1, C: int = 1,
                       bit_offset: int = ACCEPT_BIT_OFFSET, strict: bool = True) -> ReductionPoint:
    """Game position whose value reports M's verdict on w.

    t = 2^(4 n^kappa).  The result block of zone k starts at bit
    (L+2)(S+1) of the binary tape, whose seed bit (cell 0 of the game) is
    the zero of the start symbol at bit L; hence u = (L+2)(S+1) + offset - L.
    When |u| > N t the point has no game position: ``strict`` raises,
    otherwise ``position`` is None.
    """
    n = len(w)
    k = word_index(w)
    S, _ = zone_offset(w, TimeBudget(C, kappa))
    t = 1 << (4 * n ** kappa)
    u = (L + 2) * (S + 1) + bit_offset - L
    if abs(u) <= n_assignments * t:
        pos = cell_position(n_assignments, t, u)
    elif strict:
        raise ValueError(f"u = {u} exceeds N t = {n_assignments * t}")
    else:
        pos = None
    return ReductionPoint(w, k, S, u, t, n_assignments, pos)


# --- binary image of U's tape -----------------------------------------------------


def u_alphabet(machine: TuringMachine) -> list:
    """Tape symbols of U used by the interpreter."""
    pairs = [(q, a) for q in range(machine.n_states + 1) for a in range(machine.blank + 1)]
    return [U_BLANK, LEFT_END, RIGHT_END, ZONE_MARK, SEP, SPARE, "0", "1"] + pairs


def u_relabeling(machine: TuringMachine, u_states: int) -> dict:
    """Codes for U's automaton symbols (U state or 0, U tape symbol): blank
    to 0, U's start head on a blank to 1, the plain accept result (0, (0, 1))
    to L-1."""
    symbols = [(s, g) for s in range(u_states + 1) for g in u_alphabet(machine)]
    L = len(symbols)
    pins = {(0, U_BLANK): 0, (1, U_BLANK): 1, (0, RESULT_ACCEPT): L - 1}
    free = iter(range(2, L - 1))
    return {sym: pins[sym] if sym in pins else next(free) for sym in symbols}


def tape_codes(tape: ZoneTape, pi: dict, head_state: int = 1) -> Configuration:
    """The automaton configuration of U's tape (head marked with
    ``head_state``), relabeled by ``pi``."""
    cells = {i: pi[(0, sym)] for i, sym in enumerate(tape.render())}
    cells[tape.head] = pi[(head_state, tape.cells.get(tape.head, U_BLANK))]
    return Configuration.from_mapping(cells, 0)


def result_bit(tape: ZoneTape, w: str, u_states: int = 1, bit_offset: int = ACCEPT_BIT_OFFSET) -> int:
    """Bit (L+2)(S+1) + offset of the binary image of U's current tape,
    read through the relabeling of ``u_relabeling``."""
    from .binary_code import phi_bit

    pi = u_relabeling(tape.machine, u_states)
    L = len(pi)
    conf = tape_codes(tape, pi)
    _, rc = zone_offset(w, tape.budget)
    return phi_bit(conf[rc], bit_offset, L)


@dataclass
class ResultProfile:
    """Worst result time per input length, against 2^(4 n^kappa)."""

    kappa: int
    worst: dict = field(default_factory=dict)

    def within(self, n: int) -> bool:
        return self.worst[n] < 1 << (4 * n ** self.kappa)

    @property
    def n0(self) -> int | None:
        """Smallest n from which every measured length meets the bound."""
        ns = sorted(self.worst)
        n0 = None
        for n in reversed(ns):
            if not self.within(n):
                break
            n0 = n
        return n0


def result_profile(machine: TuringMachine, budget: TimeBudget, max_n: int) -> ResultProfile:
    """Run U until every word of length <= max_n has its result."""
    tape = ZoneTape(machine, budget)
    run_until_result(machine, budget, "1" * max_n, tape=tape,
                     stage_budget=default_stage_budget(max_n, budget) + (1 << (max_n + 1)))
    return profile_of(tape, max_n)


def profile_of(tape: ZoneTape, max_n: int) -> ResultProfile:
    """Profile of the zones of a tape holding every word up to ``max_n``."""
    prof = ResultProfile(tape.budget.kappa)
    for z in tape.zones:
        n = len(z.word)
        if n > max_n:
            continue
        if not z.finished:
            raise RuntimeError(f"zone of {z.word!r} has no result")
        prof.worst[n] = max(prof.worst.get(n, 0), z.result_time)
    return prof


def u_alphabet_size(machine: TuringMachine, u_states: int = 1) -> int:
    """L for U's automaton with ``u_states`` states."""
    return (u_states + 1) * len(u_alphabet(machine))


def min_assignments(L: int) -> int:
    """Lower bound on N for the binary automaton over an L-symbol code:
    normalization alone adds 2(2R+1) assignments for R = 2(L+2), and the
    body has at least one."""
    R = 2 * (L + 2)
    return 2 * (2 * R + 1) + 1
