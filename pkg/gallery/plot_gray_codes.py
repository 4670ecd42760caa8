"""
Gray codes for partitions
=========================

A Hamiltonian cycle in the square of the flip graph lists all partitions
(except 1^n) so that neighbours differ in at most two letters.  Walking a
BFS spanning tree in prepostorder gives a three-flip listing in any
dimension, in linear time.
"""

from pwords import graphs, graycode

code = graycode.gray2(8)
print(len(code), "words")
for a, b in code.pairs()[:8]:
    print(a, "->", b)

g = graphs.build(1, 8, include_zero=False)
print("verified:", graycode.verify(code, g), "max step:", graycode.max_step(code, g))

# the three-flip code on solid partitions of 6
code = graycode.gray3(3, 6)
g = graphs.build(3, 6)
print(len(code), graycode.verify(code, g), graycode.max_step(code, g))
print("\n".join(graycode.format_gray(code).splitlines()[:6]))
