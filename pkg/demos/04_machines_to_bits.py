"""A Turing machine run as a cellular automaton, then as a binary one.

Cells carry either a tape symbol or a (state, symbol) pair marking the head.
The binary encoding writes every symbol a as the block 1^(1+L-a) 0^a 1, and
a binary rule of radius 2(L+2) recovers enough of the neighbourhood to
update each bit.
"""

from subgames.automata import (
    CellularAutomaton, Configuration, ca_run, ca_step, decode_ca_config, encode_tm_config, initial_config, parity_machine,
    tm_run, tm_to_ca,
)
from subgames.binary_code import binary_radius, block_length, ca_to_2ca, phi_block, phi_config

m = parity_machine()
for w in ["", "1", "11", "101", "1101"]:
    run = tm_run(m, w, 100)
    print(f"{w or '-':>5}: {run.status} after {run.steps} steps")

ca = tm_to_ca(m)
start = encode_tm_config(m, initial_config(m, "101"))
after = decode_ca_config(m, ca_run(ca, start, 4))
print("after 4 automaton steps, state", after.state, "head at", after.head)

# Binary encoding of a small automaton over {0, 1, 2}: cyclic shift to the left.
shift = Configuration(0, (1, 2), 0)
left = CellularAutomaton((0, 1, 2), 0, 1, lambda w: w[2])
L = 3
print("block length", block_length(L), "binary radius", binary_radius(L))
print("phi(2) =", "".join(map(str, phi_block(2, L))))
b = ca_to_2ca(left)
conf, bits = shift, phi_config(shift, L)
for t in range(1, 4):
    conf, bits = ca_step(left, conf), ca_step(b, bits)
    print(f"step {t}: encoding commutes with the update: {bits == phi_config(conf, L)}")
