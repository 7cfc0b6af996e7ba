"""From a binary cellular automaton rule to a modular game and its lift.

The rule is written as a NAND-basis circuit.  Each assignment becomes a
move set chosen by the coordinate sum, so the game values on the line
x1 + x2 = 2Nt replay row t of the automaton.  The lift removes the modulus
by adding a one-hot residue counter.
"""

from subgames.game_compiler import compile_rule, run_binary_ca, verify_simulation
from subgames.nand_circuit import evaluate, windows


def xor_rule(a, b, c):
    return a ^ c ^ 1  # blank 1 stays blank


circuit, modular, lifted = compile_rule(1, xor_rule)
print("circuit:")
print(circuit)
assert all(evaluate(circuit, w)[1] == xor_rule(*w) for w in windows(3))
print(f"N={circuit.size}  modulus={modular.game.modulus}  lifted dim={lifted.dimension}"
      f"  vectors={len(lifted.game)}")

for t, row in enumerate(run_binary_ca(1, xor_rule, 4)):
    print(t, "".join(str(row[u]) for u in sorted(row)))

# Near the centre the game tracks the automaton.  At the edges of the
# simulated band it does not: a position (2Nt, 0) has no legal moves, so it
# is a P-position, while the blank cell it stands for is 1.  The errors then
# spread inward along the intermediate rows.
report = verify_simulation(1, xor_rule, circuit, 3, lifted=False)
print("checked", report.checked_cells, "cells,", report.checked_intermediate, "intermediate values")
print(report.lines()[-1])
m = report.first_mismatch
print(f"first mismatch: t={m.t} u={m.u} expected={m.expected} got={m.got}")
