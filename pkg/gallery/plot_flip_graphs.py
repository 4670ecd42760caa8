"""
Flip graphs on partition words
==============================

Two partitions are adjacent when their words differ in one letter.  For
d = 1 the graph is bipartite (a flip changes the number of parts by one),
its diameter is n - 1, and the all-zeros word is the only leaf.
"""

import numpy as np

from pwords import graphs

g = graphs.build(1, 8)
print(graphs.structure_report(g).to_json())

# the single vertex of degree one
print([g.labels[i] for i in np.flatnonzero(g.degrees == 1)])

# removing it leaves a 2-connected graph
h = graphs.build(1, 8, include_zero=False)
print("articulation points:", graphs.articulation_points(h))

# but the two colour classes have different sizes, so no Hamiltonian cycle
print(graphs.is_hamiltonian(h))

# in higher dimensions there are triangles
for d in (1, 2, 3):
    print(d, round(graphs.global_clustering(graphs.build(d, 7)), 4))

# plane partitions of 6: one word hangs off the rest
g = graphs.build(2, 6)
print(graphs.articulation_points(g), sorted(graphs.neighbors("21021", 2)))

# DOT output for a small instance
print(graphs.to_dot(graphs.build(1, 4)))
