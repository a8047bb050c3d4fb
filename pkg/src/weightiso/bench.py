"""Empirical scaling of ``algorithm1`` on isomorphic pairs."""

from __future__ import annotations

import hashlib
import statistics
import time

import numpy as np

from .graph import Permutation, permute, random_connected, to_edge_list
from .isotest import FINGERPRINT_THRESHOLD, algorithm1


def bench_instance(n: int, index: int, seed: int, edge_prob: float):
    rng = np.random.default_rng([seed, n, index])
    g = random_connected(n, edge_prob, rng)
    return g, permute(g, Permutation.random(n, rng))


def fit_loglog(ns, times) -> dict:
    """Least-squares fit of ``log t = slope * log n + intercept``."""
    x, y = np.log(np.asarray(ns, float)), np.log(np.asarray(times, float))
    if len(x) < 2:
        return {"slope": None, "intercept": None, "r2": None}
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid ** 2)) / ss_tot if ss_tot > 0 else 1.0
    return {"slope": float(slope), "intercept": float(intercept), "r2": r2}


def run_bench(n_list, instances: int = 5, seed: int = 0, edge_prob: float = 0.25,
              fingerprint_above: int = FINGERPRINT_THRESHOLD) -> dict:
    """Median wall time of ``algorithm1`` per ``n`` plus the fitted exponent.

    Sizes above ``fingerprint_above`` run in fingerprint mode.
    """
    rows = []
    for n in n_list:
        mode = "fingerprint" if n > fingerprint_above else "exact"
        times, digests, verdicts = [], [], []
        for idx in range(instances):
            g, h = bench_instance(n, idx, seed, edge_prob)
            digests.append(hashlib.sha256((to_edge_list(g) + to_edge_list(h)).encode()).hexdigest()[:16])
            t0 = time.perf_counter()
            res = algorithm1(g, h, mode=mode)
            times.append(time.perf_counter() - t0)
            verdicts.append(res.verdict)
        rows.append({
            "n": n,
            "mode": mode,
            "instances": instances,
            "median_s": statistics.median(times),
            "times_s": times,
            "verdicts": verdicts,
            "instance_digests": digests,
        })
    fit = fit_loglog([r["n"] for r in rows], [r["median_s"] for r in rows])
    return {"seed": seed, "edge_prob": edge_prob, "rows": rows, "fit": fit}
