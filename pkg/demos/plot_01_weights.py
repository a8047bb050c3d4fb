"""
Vertex weights and the topological index
========================================

Each vertex averages its neighbours plus itself and adds a constant.
Solving that system for every unit right-hand side gives a matrix K whose
row sums are the topological index.
"""

from fractions import Fraction

import weightiso as wi

###############################################################################
# A path on three vertices. The middle vertex has label 2.
g = wi.named("path:3")
print(g.sorted_edges())

###############################################################################
# Solve with b = (1, 1, 1). Results are exact fractions.
x = wi.solve_system(g, [1, 1, 1])
print([str(v) for v in x])

###############################################################################
# The full K matrix, shown entry by entry. Every entry lies strictly between
# 0 and 1 off the diagonal and between 1 and 2 on it.
k = wi.k_matrix(g)
for row in k.to_fractions():
    print("  ".join(f"{str(v):>6}" for v in row))
print("bounds hold:", wi.check_bounds(k))

###############################################################################
# The index does not depend on vertex labels.
h = wi.permute(g, wi.Permutation([2, 0, 1]))
print(sorted(wi.topo_index(g)) == sorted(wi.topo_index(h)))
print([str(v) for v in wi.topo_index(h)])

###############################################################################
# Denominators grow quickly with n. K keeps integer numerators over one
# shared denominator, so entries are compared as plain integers.
big = wi.random_connected(20, 0.3, seed=1)
kb = wi.k_matrix(big)
print("denominator digits:", len(str(kb.den)))
print(kb.entry(0, 0) == Fraction(kb.num[0][0], kb.den))
