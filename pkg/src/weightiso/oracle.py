"""Ground-truth isomorphism oracle and the discrepancy hunt.

``brute_force_iso`` is an exhaustive backtracking search that shares nothing
with the weight-based test except the final ``verify`` call. ``hunt`` runs
``algorithm1`` on generated pairs with known ground truth and records every
disagreement as a reproducible counterexample.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .graph import (
    Graph,
    Permutation,
    is_connected,
    max_clique_size,
    named,
    parse_edge_list,
    permute,
    random_connected,
    to_edge_list,
)
from .isotest import ISOMORPHIC, NOT_ISOMORPHIC, algorithm1, verify

ORACLE_LIMIT = 10
STRATEGIES = ("iso", "near", "hard")


class OracleLimitError(ValueError):
    pass


def brute_force_iso(g: Graph, h: Graph, limit: int = ORACLE_LIMIT) -> tuple[int, ...] | None:
    """An isomorphism ``g -> h`` found by exhaustive search, or None."""
    if max(g.n, h.n) > limit:
        raise OracleLimitError(f"n={max(g.n, h.n)} exceeds oracle limit {limit}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degrees[v], v))
    image = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for c in range(n):
            if used[c] or h.degrees[c] != g.degrees[v]:
                continue
            if any(g.has_edge(v, u) != h.has_edge(c, image[u]) for u in order[:depth]):
                continue
            image[v], used[c] = c, True
            if extend(depth + 1):
                return True
            image[v], used[c] = -1, False
        return False

    if not extend(0):
        return None
    result = tuple(image)
    assert verify(g, h, result), "oracle produced a non-isomorphism"
    return result


@dataclass
class HuntConfig:
    strategy: str = "iso"
    nmin: int = 4
    nmax: int = 8
    count: int = 100
    seed: int = 0
    exhaustive_oracle: bool = False
    oracle_limit: int = ORACLE_LIMIT
    mode: str = "exact"
    jobs: int = 1

    def validate(self) -> None:
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if not 1 <= self.nmin <= self.nmax:
            raise ValueError(f"bad n range [{self.nmin}, {self.nmax}]")
        if self.count < 0:
            raise ValueError("count must be non-negative")
        if self.strategy == "near" and self.nmax > self.oracle_limit:
            raise ValueError(
                f"near pairs need the oracle; nmax={self.nmax} exceeds limit {self.oracle_limit}"
            )
        if self.strategy == "near" and self.nmin < 4:
            raise ValueError("near pairs need n >= 4")


@dataclass
class HuntReport:
    strategy: str
    seed: int
    instances_tested: int = 0
    agreements: int = 0
    false_positives: int = 0
    false_negatives: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "HuntReport":
        return cls(**d)


def _rewire(g: Graph, rng: np.random.Generator) -> Graph | None:
    """``g`` with one edge moved: a degree-preserving double swap when one
    keeps the graph connected, else a single edge moved elsewhere."""
    edges = g.sorted_edges()
    for _ in range(30):
        a, b = rng.choice(len(edges), size=2, replace=False)
        (u, v), (x, y) = edges[a], edges[b]
        if rng.random() < 0.5:
            x, y = y, x
        if len({u, v, x, y}) < 4 or g.has_edge(u, x) or g.has_edge(v, y):
            continue
        new = set(edges) - {edges[a], edges[b]}
        new |= {(min(u, x), max(u, x)), (min(v, y), max(v, y))}
        cand = Graph(g.n, new)
        if is_connected(cand):
            return cand
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not non_edges:
        return None
    for _ in range(30):
        e = edges[rng.integers(len(edges))]
        f = non_edges[rng.integers(len(non_edges))]
        cand = Graph(g.n, (set(edges) - {e}) | {f})
        if is_connected(cand):
            return cand
    return None


def _hard_catalogue():
    """(name_a, name_b, truth) for the named hard pairs; relabelled copies come later."""
    return [
        ("k33", "prism", NOT_ISOMORPHIC),
        ("shrikhande", "rook44", NOT_ISOMORPHIC),
        ("petersen", "petersen", ISOMORPHIC),
        ("shrikhande", "shrikhande", ISOMORPHIC),
        ("rook44", "rook44", ISOMORPHIC),
        ("k33", "k33", ISOMORPHIC),
        ("prism", "prism", ISOMORPHIC),
        ("paley:13", "paley:13", ISOMORPHIC),
        ("paley:17", "paley:17", ISOMORPHIC),
    ]


def make_instance(cfg: HuntConfig, index: int) -> tuple[Graph, Graph, str | None, str]:
    """The ``index``-th pair of a hunt: ``(g, h, truth, truth_source)``.

    ``truth`` is None when only the oracle can supply it.
    """
    rng = np.random.default_rng([cfg.seed, index])
    if cfg.strategy == "hard":
        cat = _hard_catalogue()
        a, b, truth = cat[index % len(cat)]
        g, h = named(a), named(b)
        if index >= len(cat) or truth == ISOMORPHIC:
            h = permute(h, Permutation.random(h.n, rng))
        if a == b:
            source = "construction"
        elif g.n <= cfg.oracle_limit:
            source = "brute_force"
            truth = None
        else:
            source = "clique_certificate"
            if max_clique_size(g) == max_clique_size(h):
                raise RuntimeError(f"clique number does not separate {a} and {b}")
        return g, h, truth, source

    n = int(rng.integers(cfg.nmin, cfg.nmax + 1))
    p = float(rng.uniform(0.15, 0.7))
    g = random_connected(n, p, rng)
    if cfg.strategy == "iso":
        h = permute(g, Permutation.random(n, rng))
        return g, h, ISOMORPHIC, "construction"
    h = None
    while h is None:
        h = _rewire(g, rng)
        if h is None:
            g = random_connected(n, min(1.0, p + 0.1), rng)
    h = permute(h, Permutation.random(n, rng))
    return g, h, None, "brute_force"


def run_instance(cfg: HuntConfig, index: int) -> dict:
    g, h, truth, source = make_instance(cfg, index)
    if truth is None or (cfg.exhaustive_oracle and g.n <= cfg.oracle_limit):
        oracle_truth = ISOMORPHIC if brute_force_iso(g, h, cfg.oracle_limit) else NOT_ISOMORPHIC
        if truth is not None and oracle_truth != truth:
            raise RuntimeError(f"instance {index}: construction and oracle disagree")
        truth = oracle_truth
        if source == "construction":
            source = "construction+brute_force"
    res = algorithm1(g, h, mode=cfg.mode)
    if res.isomorphic and not verify(g, h, res.mapping):
        raise RuntimeError(f"instance {index}: isomorphic verdict with an invalid mapping")
    return {
        "index": index,
        "strategy": cfg.strategy,
        "n": g.n,
        "algorithm": res.verdict,
        "truth": truth,
        "truth_source": source,
        "graph_a": to_edge_list(g),
        "graph_b": to_edge_list(h),
    }


def _run_chunk(args):
    cfg, indices = args
    return [run_instance(cfg, i) for i in indices]


def hunt(cfg: HuntConfig) -> HuntReport:
    """Run ``cfg.count`` instances and tally ``algorithm1`` against ground truth."""
    cfg.validate()
    t0 = time.perf_counter()
    indices = list(range(cfg.count))
    if cfg.jobs > 1 and cfg.count > 1:
        chunks = [indices[k::cfg.jobs] for k in range(cfg.jobs)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            rows = [r for part in ex.map(_run_chunk, [(cfg, c) for c in chunks]) for r in part]
        rows.sort(key=lambda r: r["index"])
    else:
        rows = [run_instance(cfg, i) for i in indices]

    report = HuntReport(strategy=cfg.strategy, seed=cfg.seed)
    for row in rows:
        report.instances_tested += 1
        if row["algorithm"] == row["truth"]:
            report.agreements += 1
            continue
        if row["algorithm"] == ISOMORPHIC:
            report.false_positives += 1
        else:
            report.false_negatives += 1
        report.counterexamples.append(row)
    report.wall_time = time.perf_counter() - t0
    return report


def replay(counterexample: dict, mode: str = "exact") -> str:
    """Re-run ``algorithm1`` on a serialized counterexample; returns the verdict."""
    g = parse_edge_list(counterexample["graph_a"])
    h = parse_edge_list(counterexample["graph_b"])
    return algorithm1(g, h, mode=mode).verdict
