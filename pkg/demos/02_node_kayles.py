"""Node Kayles, solved directly and through its subtraction-game encoding.

Each edge becomes a coordinate, each vertex the 0/1 vector of its incident
edges, and the start position is all ones.  Choosing a vertex subtracts its
vector; a vertex next to an already chosen one would drive a coordinate
negative, so it is no longer available.
"""

from subgames.game_core import position_value
from subgames.kayles import all_graphs, cycle_graph, kayles_to_msg, kayles_value, path_graph

for name, g in [("path 4", path_graph(4)), ("path 5", path_graph(5)), ("cycle 6", cycle_graph(6))]:
    red = kayles_to_msg(g)
    print(f"{name}: direct={'PN'[kayles_value(g)]} game={'PN'[position_value(red.game, red.start)]}"
          f" dim={red.game.dimension}")

# Exhaustive agreement on every graph with 5 vertices and no isolated vertex.
checked = 0
for g in all_graphs(5):
    if g.edges and not g.isolated_vertices():
        red = kayles_to_msg(g)
        assert position_value(red.game, red.start) == kayles_value(g)
        checked += 1
print("agreeing graphs on 5 vertices:", checked)
