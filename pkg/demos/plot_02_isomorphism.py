"""
Testing two graphs for isomorphism
==================================

The test anchors one vertex of G against each candidate in G', prunes a
bipartite compatibility graph one edge at a time, and accepts only a
mapping that carries every edge onto an edge.
"""

import weightiso as wi

###############################################################################
# Relabel the Petersen graph at random and ask for the mapping back.
g = wi.named("petersen")
h = wi.permute(g, wi.Permutation.random(g.n, seed=4))
res = wi.algorithm1(g, h)
print(res.verdict, res.mapping)
print("edges preserved:", wi.verify(g, h, res.mapping))
print("anchors tried:", res.tried_pairs)

###############################################################################
# Two 3-regular graphs on six vertices that are not isomorphic:
# K(3,3) has no triangles, the prism has two.
print(wi.algorithm1(wi.named("k33"), wi.named("prism")).verdict)

###############################################################################
# The 4x4 rook graph and the Shrikhande graph share degree sequence and
# spectrum. A 4-clique exists only in the first.
print(wi.algorithm1(wi.named("rook44"), wi.named("shrikhande")).verdict)

###############################################################################
# Inside one anchor: build the bigraph, refine it, and look at its size.
k, k2 = wi.k_matrix(g), wi.k_matrix(h)
j = res.mapping[0]
start = wi.build_bigraph(k, k2, 0, j)
refined = wi.refine(k, k2, 0, j)
print("bigraph edges before/after refinement:", len(start), len(refined))
print("transversal:", wi.transversal(refined))

###############################################################################
# Fingerprint mode compares residues modulo four primes instead of exact
# rationals. A returned mapping is still checked edge by edge.
big = wi.random_connected(90, 0.1, seed=2)
bigh = wi.permute(big, wi.Permutation.random(90, seed=3))
print(wi.algorithm1(big, bigh, mode="fingerprint").stats["mode"])
