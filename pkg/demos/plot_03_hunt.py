"""
Hunting for disagreements with a brute-force oracle
===================================================

Generate pairs, decide each one twice, and keep any pair where the two
answers differ.
"""

import weightiso as wi

###############################################################################
# Relabelled copies: the truth is known by construction.
rep = wi.hunt(wi.HuntConfig(strategy="iso", count=50, nmin=4, nmax=20, seed=0))
print(rep.instances_tested, rep.agreements, rep.false_negatives)

###############################################################################
# Near misses: one edge swap away from each other, decided by backtracking.
rep = wi.hunt(wi.HuntConfig(strategy="near", count=100, nmin=5, nmax=8, seed=1))
print(rep.instances_tested, rep.agreements, rep.false_positives, rep.false_negatives)

###############################################################################
# Highly symmetric graphs and strongly regular look-alikes.
rep = wi.hunt(wi.HuntConfig(strategy="hard", count=9, seed=0))
print(rep.to_dict()["agreements"], "of", rep.instances_tested)

###############################################################################
# The oracle on its own.
print(wi.brute_force_iso(wi.named("cycle:5"), wi.named("cycle:5")))
print(wi.brute_force_iso(wi.named("k33"), wi.named("prism")))
