import json

import networkx as nx
import pytest
from hypothesis import given, settings

from oracles import all_isomorphisms
from test_graph import connected_graphs, to_nx
from weightiso.graph import complete, cycle, k33, parse_edge_list, path, prism, random_connected
from weightiso.isotest import verify
from weightiso.oracle import (
    HuntConfig,
    HuntReport,
    OracleLimitError,
    brute_force_iso,
    hunt,
    make_instance,
    replay,
)


class TestBruteForce:
    def test_k3_c3(self):
        r = brute_force_iso(complete(3), cycle(3))
        assert r is not None and verify(complete(3), cycle(3), r)

    def test_k33_prism(self):
        assert brute_force_iso(k33(), prism()) is None
        assert all_isomorphisms(k33(), prism()) == []

    def test_p3(self):
        assert brute_force_iso(path(3), path(3)) in {(0, 1, 2), (2, 1, 0)}

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            brute_force_iso(path(11), path(11))
        assert brute_force_iso(path(11), path(11), limit=11) is not None

    def test_size_mismatch(self):
        assert brute_force_iso(path(3), path(4)) is None

    @settings(max_examples=80, deadline=None)
    @given(connected_graphs(nmax=7), connected_graphs(nmax=7))
    def test_against_networkx(self, g, h):
        r = brute_force_iso(g, h)
        assert (r is not None) == nx.is_isomorphic(to_nx(g), to_nx(h))
        if r is not None:
            assert verify(g, h, r)

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(nmax=7), connected_graphs(nmax=7))
    def test_symmetric(self, g, h):
        assert (brute_force_iso(g, h) is None) == (brute_force_iso(h, g) is None)


class TestHunt:
    def test_iso(self):
        rep = hunt(HuntConfig(strategy="iso", count=100, nmin=4, nmax=8, seed=1))
        assert rep.instances_tested == 100
        assert rep.false_positives == 0
        assert rep.false_negatives == 0
        assert rep.agreements == 100

    def test_hard(self):
        rep = hunt(HuntConfig(strategy="hard", count=9, seed=0))
        assert rep.false_positives == 0 and rep.false_negatives == 0
        assert rep.instances_tested == rep.agreements == 9

    def test_hard_named_pairs_truth_sources(self):
        cfg = HuntConfig(strategy="hard")
        g, h, truth, source = make_instance(cfg, 0)
        assert (g.n, source, truth) == (6, "brute_force", None)
        g, h, truth, source = make_instance(cfg, 1)
        assert (g.n, source, truth) == (16, "clique_certificate", "not_isomorphic")

    def test_near_n6_exhaustive(self):
        rep = hunt(HuntConfig(strategy="near", count=60, nmin=6, nmax=6, seed=3,
                              exhaustive_oracle=True))
        assert rep.instances_tested == rep.agreements + rep.false_positives + rep.false_negatives
        assert rep.false_positives == 0
        assert rep.agreements == rep.instances_tested

    def test_near_pairs_are_near(self):
        cfg = HuntConfig(strategy="near", nmin=5, nmax=8, seed=11)
        for i in range(30):
            g, h, truth, source = make_instance(cfg, i)
            assert truth is None and source == "brute_force"
            assert g.n == h.n and g.m == h.m
            assert nx.is_connected(to_nx(h))

    def test_instances_reproducible(self):
        cfg = HuntConfig(strategy="near", nmin=4, nmax=7, seed=5)
        assert [make_instance(cfg, i)[:2] for i in range(5)] == \
               [make_instance(cfg, i)[:2] for i in range(5)]

    def test_parallel_matches_sequential(self):
        seq = hunt(HuntConfig(strategy="near", count=12, nmin=4, nmax=6, seed=2))
        par = hunt(HuntConfig(strategy="near", count=12, nmin=4, nmax=6, seed=2, jobs=2))
        a, b = seq.to_dict(), par.to_dict()
        a.pop("wall_time"), b.pop("wall_time")
        assert a == b

    @pytest.mark.parametrize("cfg", [
        HuntConfig(strategy="bogus"),
        HuntConfig(strategy="near", nmax=12),
        HuntConfig(strategy="iso", nmin=5, nmax=4),
        HuntConfig(strategy="near", nmin=2, nmax=5),
    ])
    def test_infeasible(self, cfg):
        with pytest.raises(ValueError):
            hunt(cfg)

    def test_report_json_round_trip(self):
        rep = HuntReport(strategy="iso", seed=3, instances_tested=1, false_negatives=1,
                         counterexamples=[{"graph_a": "2 1\n0 1\n", "graph_b": "2 1\n0 1\n"}])
        assert HuntReport.from_dict(json.loads(rep.to_json())) == rep

    def test_counterexample_format_replays(self):
        # a hand-made record in the counterexample format; replay re-derives the verdict
        g = random_connected(7, 0.4, 2)
        from weightiso.graph import to_edge_list
        record = {"graph_a": to_edge_list(g), "graph_b": to_edge_list(g),
                  "algorithm": "isomorphic", "truth": "isomorphic"}
        assert parse_edge_list(record["graph_a"]) == g
        assert replay(record) == record["algorithm"]
        assert replay({"graph_a": to_edge_list(k33()), "graph_b": to_edge_list(prism())}) == \
            "not_isomorphic"

    def test_one_vertex_iso(self):
        rep = hunt(HuntConfig(strategy="iso", count=3, nmin=1, nmax=2, seed=0))
        assert rep.agreements == 3
