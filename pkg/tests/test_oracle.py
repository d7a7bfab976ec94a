from itertools import combinations

import pytest

from cvdsolve.graph import Graph, is_cluster_graph, remove_vertices
from cvdsolve.hv import HvGraph
from cvdsolve.oracle import (
    OracleGuardError,
    all_vertex_covers,
    dominating_classes,
    oracle_min_cvd,
    oracle_min_cvd_subsets,
    oracle_vc,
)

from conftest import complete_graph, cycle_graph, er_corpus, path_graph


def test_min_cvd_examples():
    size, sols = oracle_min_cvd(path_graph(3))
    assert size == 1 and sorted(map(sorted, sols)) == [[0], [1], [2]]
    assert oracle_min_cvd(cycle_graph(4))[0] == 2
    assert oracle_min_cvd(complete_graph(4)) == (0, [frozenset()])


def test_all_optimal_sets_listed():
    for G in er_corpus(80, max_n=7, seed=31):
        size, sols = oracle_min_cvd(G)
        ok = set()
        for S in combinations(range(G.n), size):
            if is_cluster_graph(remove_vertices(G, S)):
                ok.add(frozenset(S))
        assert set(sols) == ok


def test_two_oracles_agree():
    for G in er_corpus(300, max_n=8, ps=(0.2, 0.35, 0.5, 0.7), seed=32):
        size, sols = oracle_min_cvd(G)
        other, witness = oracle_min_cvd_subsets(G)
        assert size == other and witness in sols


def test_guard():
    with pytest.raises(OracleGuardError):
        oracle_min_cvd(path_graph(20))
    assert oracle_min_cvd(path_graph(20), guard=20)[0] == 6


class TestVertexCover:
    def test_sizes(self):
        assert oracle_vc(HvGraph.from_edges([0, 1], [], [(0, 1)])) == 1
        assert oracle_vc(HvGraph.from_edges(range(4), [], [(0, 1), (1, 2), (2, 3)])) == 2
        assert oracle_vc(HvGraph.from_edges(range(6), [], [(0, 1), (2, 3), (4, 5)])) == 3

    def test_enumeration_is_complete(self):
        H = HvGraph.from_edges([0], [1, 2], [(0, 1), (0, 2)])
        assert sorted(map(sorted, all_vertex_covers(H))) == [[0], [0, 1], [0, 1, 2], [0, 2], [1, 2]]


class TestDomination:
    def test_single_edge(self):
        H = HvGraph.from_edges([0], [1], [(0, 1)])
        assert [(s, set(p)) for s, p, _ in dominating_classes(H).dominating()] == [(1, {1})]

    def test_seagull(self):
        H = HvGraph.from_edges([0], [1, 2], [(0, 1), (0, 2)])
        reps = sorted(sorted(rep) for _, _, rep in dominating_classes(H).dominating())
        assert reps == [[0], [1, 2]]

    def test_edgeless(self):
        report = dominating_classes(HvGraph.from_edges([0], [1], []))
        assert report.dominating() == [(0, frozenset(), frozenset())]
        assert len(report.classes) == len(report.dominating_flags) > 1

    def test_flagged_representatives_are_minimal_covers(self, hv_graphs):
        for H in hv_graphs[:150]:
            for _, _, rep in dominating_classes(H).dominating():
                assert H.is_vertex_cover(rep)
                assert not any(H.is_vertex_cover(rep - {u}) for u in rep)


def test_graph_argument_is_not_mutated():
    G = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    before = G.edges()
    oracle_min_cvd(G)
    assert G.edges() == before
