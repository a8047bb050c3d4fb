"""
When a single anchor is not enough
==================================

Paley(17) is vertex-transitive, so every anchor pair could extend to an
isomorphism. Pruning one anchor can still fail, and whether it fails
depends on the order the edges are visited. The full test tries every
anchor and so still succeeds.
"""

import weightiso as wi

g = wi.named("paley:17")
h = wi.permute(g, wi.Permutation.random(17, seed=1))
k, k2 = wi.k_matrix(g), wi.k_matrix(h)


def outcome(j, reverse):
    r = wi.p1(g, h, k, k2, 0, j, reverse=reverse)
    if r is None:
        return "none"
    return "iso" if wi.verify(g, h, r) else "bad"


###############################################################################
for j in range(17):
    print(j, outcome(j, False), outcome(j, True))

###############################################################################
print(wi.algorithm1(g, h).verdict, wi.algorithm1(g, h, reverse=True).verdict)
