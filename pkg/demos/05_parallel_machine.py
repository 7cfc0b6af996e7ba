"""A machine that runs M on every binary word at once, and the game point
that reports its verdict on one word.

The tape is split into zones, one per word in length-lexicographic order.
Every stage the head sweeps right, advancing each open zone by one step of
M and opening a fresh zone at the far end.  A finished zone writes its
verdict into the result cell right after the zone mark.
"""

from subgames.automata import parity_machine, tm_run
from subgames.parallel_machine import (
    TimeBudget, ZoneTape, min_assignments, reduction_position, result_bit, result_profile,
    run_until_result, u_alphabet_size, word_at, zone_offset,
)

m = parity_machine()
T = TimeBudget(C=1, kappa=1)  # T(n) = 2^n steps for M on inputs of length n
tape = ZoneTape(m, T)

for k in range(1, 16):
    w = word_at(k)
    res = run_until_result(m, T, w, tape=tape)
    S, rc = zone_offset(w, T)
    assert res.verdict == tm_run(m, w, T(len(w))).status
    assert tape.zones[k - 1].result_cell == rc
    print(f"{w or '-':>4}  {res.verdict:6}  result cell {rc:5}  written at step {res.t_res:7}"
          f"  bound {res.bound:6}  {'ok' if res.within_bound else 'late'}")

# The bound 2^(4n) is missed for short words, where the sweep over earlier
# zones dominates, and met from some length on.
prof = result_profile(m, T, 7)
for n, worst in sorted(prof.worst.items()):
    print(f"n={n}  latest result step {worst:9}  bound {1 << 4 * n:12}")
print("bound met for every n from", prof.n0)

# The result cell, seen through the binary encoding, carries the verdict as
# one bit: 0 for accept, 1 for reject.
for w in ["", "1", "11", "101"]:
    print(f"{w or '-':>4}  bit {result_bit(tape, w)}")

# The corresponding game coordinates are astronomically large but exact.
L = u_alphabet_size(m)
N = min_assignments(L)
for w in ["1", "10", "1" * 6]:
    p = reduction_position(w, N, L)
    print(f"w={w} S={p.S} u={p.u} t=2^{p.t.bit_length() - 1} position sum={sum(p.position)}")
