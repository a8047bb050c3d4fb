"""Isomorphism test driven by the weight-system coefficient matrix.

``refine`` builds the anchor bigraph ``H_ij`` and prunes it pair by pair,
``p1`` extracts a transversal of the result, and ``algorithm1`` runs ``p1``
with vertex 0 of the first graph anchored to every vertex of the second,
accepting only mappings that pass ``verify``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, is_connected
from .matcher import Bigraph, Mapping, build_bigraph, intersect, transversal
from .weights import KMatrix, k_matrix

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"

#: exact mode is used up to this vertex count when ``mode="auto"``
FINGERPRINT_THRESHOLD = 64


class InputError(ValueError):
    """Input outside the supported class: disconnected or mismatched graphs."""


class DisconnectedGraphError(InputError):
    pass


@dataclass
class IsoResult:
    verdict: str
    mapping: Mapping | None = None
    tried_pairs: int = 0
    stats: dict = field(default_factory=dict)

    @property
    def isomorphic(self) -> bool:
        return self.verdict == ISOMORPHIC

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "mapping": list(self.mapping) if self.mapping is not None else None,
            "tried_pairs": self.tried_pairs,
            "stats": dict(self.stats),
        }


def _new_stats() -> dict:
    return {
        "bigraph_builds": 0,
        "transversal_calls": 0,
        "max_bigraph_edges": 0,
        "verify_rejections": 0,
        "degree_skips": 0,
        "p1_none": 0,
        "k_matrix_s": 0.0,
        "p1_s": 0.0,
        "verify_s": 0.0,
    }


def refine(k: KMatrix, k2: KMatrix, i: int, j: int, reverse: bool = False,
           keys=None, stats: dict | None = None) -> Bigraph:
    """Steps 1-2 of P1: the anchor bigraph ``H_ij`` after pairwise pruning.

    Edges of the initial ``H_ij`` (except ``(i, j)``) are visited in ascending
    order, or descending with ``reverse``. An edge already removed is skipped.
    For edge ``(p, q)``, ``U := U & H_pq`` when that intersection still has a
    transversal; otherwise ``(p, q)`` alone is dropped from ``U``.
    """
    if keys is None:
        keys = k.comparable_rows(k2)
    u = build_bigraph(k, k2, i, j, keys)
    if stats is not None:
        stats["bigraph_builds"] += 1
        stats["max_bigraph_edges"] = max(stats["max_bigraph_edges"], len(u))
    snapshot = [e for e in u.edges() if e != (i, j)]
    if reverse:
        snapshot.reverse()
    for p, q in snapshot:
        if (p, q) not in u:
            continue
        h_pq = build_bigraph(k, k2, p, q, keys)
        w = intersect(u, h_pq)
        if stats is not None:
            stats["bigraph_builds"] += 1
            stats["transversal_calls"] += 1
        if transversal(w) is not None:
            u = w
        else:
            u = u.without(p, q)
    return u


def p1(g: Graph, g2: Graph, k: KMatrix, k2: KMatrix, i: int, j: int,
       reverse: bool = False, keys=None, stats: dict | None = None) -> Mapping | None:
    """Candidate mapping for anchor pair ``(i, j)``, or None."""
    if g.n != g2.n or g.m != g2.m:
        raise InputError("p1 needs graphs with equal vertex and edge counts")
    if k.n != g.n or k2.n != g2.n:
        raise InputError("KMatrix does not match graph size")
    u = refine(k, k2, i, j, reverse=reverse, keys=keys, stats=stats)
    if stats is not None:
        stats["transversal_calls"] += 1
    return transversal(u)


def verify(g: Graph, g2: Graph, r: Sequence[int]) -> bool:
    """True iff ``r`` is an isomorphism ``g -> g2`` (edge-level ``M' = P^T M P``)."""
    if g.n != g2.n or len(r) != g.n:
        raise InputError("size mismatch in verify")
    if sorted(r) != list(range(g.n)):
        return False
    if g.m != g2.m:
        return False
    adj2 = g2.adjacency_sets
    # a bijection that maps E into E' with |E| = |E'| maps E onto E'
    return all(r[v] in adj2[r[u]] for u, v in g.edges)


def check_input(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(
            f"graph with n={g.n}, m={g.m} is disconnected; only connected simple graphs are supported"
        )


def algorithm1(g: Graph, g2: Graph, mode: str = "exact", reverse: bool = False) -> IsoResult:
    """Decide ``g ~= g2``.

    ``mode`` is ``"exact"``, ``"fingerprint"`` (residues modulo large primes;
    any reported mapping is still checked exactly by ``verify``) or ``"auto"``
    (fingerprint above ``FINGERPRINT_THRESHOLD`` vertices).
    """
    check_input(g)
    check_input(g2)
    stats = _new_stats()
    if g.n != g2.n or g.m != g2.m:
        stats["early_exit"] = True
        return IsoResult(NOT_ISOMORPHIC, stats=stats)
    if mode == "auto":
        mode = "fingerprint" if g.n > FINGERPRINT_THRESHOLD else "exact"
    if mode not in ("exact", "fingerprint"):
        raise ValueError(f"unknown mode {mode!r}")
    stats["mode"] = mode

    t0 = time.perf_counter()
    fp = mode == "fingerprint"
    k, k2 = k_matrix(g, fingerprint=fp), k_matrix(g2, fingerprint=fp)
    keys = k.comparable_rows(k2)
    stats["k_matrix_s"] = time.perf_counter() - t0

    tried = 0
    for j in range(g2.n):
        if g.degrees[0] != g2.degrees[j]:
            stats["degree_skips"] += 1
            continue
        tried += 1
        t0 = time.perf_counter()
        r = p1(g, g2, k, k2, 0, j, reverse=reverse, keys=keys, stats=stats)
        stats["p1_s"] += time.perf_counter() - t0
        if r is None:
            stats["p1_none"] += 1
            continue
        t0 = time.perf_counter()
        ok = verify(g, g2, r)
        stats["verify_s"] += time.perf_counter() - t0
        if ok:
            stats["anchor"] = j
            return IsoResult(ISOMORPHIC, mapping=r, tried_pairs=tried, stats=stats)
        stats["verify_rejections"] += 1
    return IsoResult(NOT_ISOMORPHIC, tried_pairs=tried, stats=stats)
