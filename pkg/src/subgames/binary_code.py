"""Binary simulation of an automaton over 0..L-1.

Symbol a becomes the block 1^(1+L-a) 0^a 1 of length L+2, so the blank 0
becomes all ones (the binary blank).  Every block ends with its zero run
followed by a single 1, which lets a bit's neighbourhood of radius
2(L+2) recover the block grid, the three symbols around the bit and the
bit's offset inside its block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import CellularAutomaton, Configuration


def block_length(L: int) -> int:
    return L + 2


def binary_radius(L: int) -> int:
    return 2 * (L + 2)


def phi_block(a: int, L: int) -> tuple[int, ...]:
    if not 0 <= a < L:
        raise ValueError(f"symbol {a} is outside 0..{L - 1}")
    return (1,) * (1 + L - a) + (0,) * a + (1,)


def phi_bit(a: int, k: int, L: int) -> int:
    """Bit k of phi(a) without building the block."""
    return 0 if 1 + L - a <= k <= L else 1


def phi_encode(word: Sequence[int], L: int) -> tuple[int, ...]:
    out: list[int] = []
    for a in word:
        out.extend(phi_block(a, L))
    return tuple(out)


def phi_config(conf: Configuration, L: int) -> Configuration:
    """Binary image of a configuration; cell q maps to bits q(L+2) .. q(L+2)+L+1."""
    if conf.blank != 0:
        raise ValueError("the encoded automaton must use 0 as its blank")
    return Configuration(conf.offset * block_length(L), phi_encode(conf.cells, L), 1)


@dataclass(frozen=True)
class Restored:
    """Outcome of reading a window.

    ``kind`` is "symbols" (``symbols`` and ``offset`` filled), "blank" (the
    window shows no zero inside the three blocks around the centre; the
    symbols are all 0 and ``offset`` may be unknown) or "unrestorable".
    """

    kind: str
    symbols: tuple[int, int, int] | None = None
    offset: int | None = None


UNRESTORABLE = Restored("unrestorable")
ALL_BLANK = Restored("blank", (0, 0, 0), None)


def _match_partial(bits: Sequence[int], start: int, L: int) -> bool:
    """Whether the visible part of a block starting at window index
    ``start`` agrees with phi(a) for some a."""
    B = L + 2
    lo, hi = max(start, 0), min(start + B, len(bits))
    if lo >= hi:
        return True
    for a in range(L):
        if all(bits[p] == phi_bit(a, p - start, L) for p in range(lo, hi)):
            return True
    return False


def _decode_full(bits: Sequence[int], start: int, L: int) -> int | None:
    block = tuple(bits[start:start + L + 2])
    a = block.count(0)
    if a < L and block == phi_block(a, L):
        return a
    return None


def _read_with_phase(window: Sequence[int], phase: int, L: int):
    """(symbols, offset) if every block on the grid ``phase + m(L+2)``
    agrees with the code, else None."""
    B = L + 2
    r = 2 * B
    k = (r - phase) % B
    centre_start = r - k
    start = centre_start - ((centre_start + B - 1) // B) * B
    while start < len(window):
        if not _match_partial(window, start, L):
            return None
        start += B
    symbols = tuple(_decode_full(window, centre_start + d * B, L) for d in (-1, 0, 1))
    if any(a is None for a in symbols):
        return None
    return symbols, k


def restore_window(window: Sequence[int], L: int) -> Restored:
    """Symbols c(q-1), c(q), c(q+1) and the offset of the centre bit.

    The centre bit is window[r], r = 2(L+2).  Take the zero nearest to the
    centre and its maximal zero run: the run ends two bits before the end
    of its block, which fixes the block grid.  The window is then checked
    block by block against the code.
    """
    B = L + 2
    r = 2 * B
    if len(window) != 2 * r + 1:
        raise ValueError(f"window must have {2 * r + 1} bits for L = {L}")
    zeros = [p for p, b in enumerate(window) if b == 0]
    if not zeros:
        return ALL_BLANK
    nearest = min(zeros, key=lambda p: (abs(p - r), p))
    first, end = nearest, nearest
    while first > 0 and window[first - 1] == 0:
        first -= 1
    while end + 1 < len(window) and window[end + 1] == 0:
        end += 1
    if end + 1 < len(window):
        read = _read_with_phase(window, (end - L) % B, L)
        if read is None:
            return UNRESTORABLE
        return Restored("symbols", *read)
    # The run is cut by the right edge, so it lies beyond block q+1 and the
    # three blocks around the centre hold no zero; the grid (and offset) is
    # fixed only up to the unseen run length.
    seen = end - first + 1
    offsets = set()
    for a in range(seen, L):
        read = _read_with_phase(window, (first - (1 + L - a)) % B, L)
        if read is not None:
            offsets.add(read[1])
    if not offsets:
        return UNRESTORABLE
    if len(offsets) == 1:
        return Restored("symbols", (0, 0, 0), offsets.pop())
    return ALL_BLANK


def ca_to_2ca(ca: CellularAutomaton) -> CellularAutomaton:
    """Binary automaton (blank 1, radius 2(L+2)) whose run from phi(c) is
    phi of the run of ``ca`` from c.  The rule is procedural."""
    if ca.radius != 1:
        raise ValueError("only radius-1 automata are encoded")
    if ca.blank != 0 or tuple(ca.alphabet) != tuple(range(len(ca.alphabet))):
        raise ValueError("the automaton must be over 0..L-1 with blank 0")
    L = len(ca.alphabet)
    delta = ca.rule

    def rule(window):
        res = restore_window(window, L)
        if res.kind != "symbols":
            return 1
        return phi_bit(delta(res.symbols), res.offset, L)

    return CellularAutomaton((0, 1), 1, binary_radius(L), rule, name=f"binary({ca.name})")
