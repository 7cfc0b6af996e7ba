"""P/N values of vector subtraction games, and periodicity in dimension one."""

from subgames.game_core import DifferenceSet, ModularGame, Solver, find_period_1d, solve_up_to_sum

# A one-dimensional game: take 1, 2 or 3 tokens.  P-positions are the
# multiples of 4.
d123 = DifferenceSet(1, ((1,), (2,), (3,)))
solver = Solver(d123)
print("take 1,2,3:", "".join("PN"[solver.value((n,))] for n in range(20)))
print("period:", find_period_1d(d123, 200))

# {1, 4}: the sequence settles into period 5 with P at residues 0 and 2.
print("take 1,4:  ", find_period_1d(DifferenceSet(1, ((1,), (4,))), 200))

# Two dimensions with a negative coordinate: a move may grow one pile as
# long as the total shrinks.
game = DifferenceSet(2, ((1, 0), (0, 1), (2, -1)))
table = solve_up_to_sum(game, 8)
for x2 in range(8, -1, -1):
    print(" ".join("PN"[table[(x1, x2)]] if x1 + x2 <= 8 else "." for x1 in range(9)))

# A modular game picks its move set by the coordinate sum mod k.
mod = ModularGame(2, 2, (DifferenceSet(2, ((1, 1),)), DifferenceSet(2, ((1, 0), (0, 1)))))
ms = Solver(mod)
print("modular (3,2):", "PN"[ms.value((3, 2))], " (4,4):", "PN"[ms.value((4, 4))])
