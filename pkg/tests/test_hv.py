from collections import deque

import pytest

from cvdsolve.graph import Graph, connected_components, is_clique, remove_vertices
from cvdsolve.hv import (
    HvGraph,
    build_hv,
    format_hv,
    n1_neighbor_violations,
    skein_view,
    twins,
    vc_class,
)
from cvdsolve.oracle import all_vertex_covers, oracle_vc

from conftest import complete_graph, er_corpus, path_graph

# G on {v,a,b,c} = {0,1,2,3} with edges va, vb, ab, bc
PAW = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def reference_hv(G, v):
    """H_v straight from the definition, using BFS distances."""
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    n1 = {u for u, d in dist.items() if d == 1}
    n2 = {u for u, d in dist.items() if d == 2}
    edges = set()
    for a in n1 | n2:
        for b in n1 | n2:
            if a >= b:
                continue
            if a in n1 and b in n1 and not G.has_edge(a, b):
                edges.add((a, b))
            elif (a in n1) != (b in n1) and G.has_edge(a, b):
                edges.add((a, b))
    return n1, n2, sorted(edges)


def seagull(center=0, left=1, right=2):
    return HvGraph.from_edges([center], [left, right], [(center, left), (center, right)])


class TestBuild:
    def test_p3_center(self):
        H = build_hv(path_graph(3), 1)
        assert H.n1 == {0, 2} and H.n2 == frozenset()
        assert H.edges() == [(0, 2)]

    def test_paw(self):
        H = build_hv(PAW, 0)
        assert H.n1 == {1, 2} and H.n2 == {3}
        assert H.edges() == [(2, 3)]
        assert H.isolated() == [1]

    def test_clique(self):
        H = build_hv(complete_graph(4), 2)
        assert len(H) == 3 and not H.has_edges()
        assert set(H.isolated()) == H.n1

    def test_matches_definition(self):
        for G in er_corpus(150, seed=11):
            for v in G.vertices():
                H = build_hv(G, v)
                n1, n2, edges = reference_hv(G, v)
                assert (H.n1, H.n2, H.edges()) == (n1, n2, edges)

    def test_from_edges_rejects_n2_edge(self):
        with pytest.raises(ValueError):
            HvGraph.from_edges([0], [1, 2], [(1, 2)])

    def test_without(self):
        H = seagull().without([0])
        assert not H.has_edges() and len(H) == 2

    def test_format(self):
        text = format_hv(build_hv(PAW, 0), labels="vabc")
        assert "v b N1" in text and "v c N2" in text and "e b c" in text


class TestTwins:
    def test_examples(self):
        assert twins(complete_graph(4), 0) == {0, 1, 2, 3}
        assert twins(path_graph(3), 1) == {1}
        assert twins(PAW, 0) == {0, 1}

    def test_isolated_characterization(self):
        for G in er_corpus(150, seed=12):
            for v in G.vertices():
                assert twins(G, v) == {v} | set(build_hv(G, v).isolated())


class TestVcClass:
    def test_examples(self):
        assert vc_class(HvGraph.from_edges([4, 7], [], [(4, 7)])) == ("one", {4})
        P4 = HvGraph.from_edges([0, 1, 2, 3], [], [(0, 1), (1, 2), (2, 3)])
        # {1, 2} is also a cover, but {0, 2} comes first lexicographically
        assert vc_class(P4) == ("two", {0, 2})
        M3 = HvGraph.from_edges(range(6), [], [(0, 1), (2, 3), (4, 5)])
        assert vc_class(M3) == ("three_plus", None)

    def test_agrees_with_oracle(self, hv_graphs):
        for H in hv_graphs:
            if not H.has_edges():
                continue
            cls, X = vc_class(H)
            size = oracle_vc(H)
            assert cls == {1: "one", 2: "two"}.get(size, "three_plus")
            if X is not None:
                assert H.is_vertex_cover(X) and len(X) == size
                smaller = [C for C in all_vertex_covers(H) if len(C) == size]
                assert min(tuple(sorted(C)) for C in smaller) == tuple(sorted(X))


class TestSkein:
    def test_seagull_with_isolated(self):
        H = HvGraph.from_edges([0, 3], [1, 2, 4], [(0, 1), (0, 2)])
        view = skein_view(H)
        assert view.is_skein and view.seagull_centers == (0,)
        assert view.isolated == (3, 4)

    def test_single_edge_is_not_skein(self):
        assert not skein_view(HvGraph.from_edges([0], [1], [(0, 1)])).is_skein

    def test_two_seagulls(self):
        H = HvGraph.from_edges([0, 3], [1, 2, 4, 5], [(0, 1), (0, 2), (3, 4), (3, 5)])
        view = skein_view(H)
        assert view.is_skein and view.seagull_centers == (0, 3)


def test_cover_leaves_clique_component():
    for G in er_corpus(60, seed=13):
        for v in G.vertices():
            H = build_hv(G, v)
            for X in all_vertex_covers(H):
                rest = remove_vertices(G, X)
                at = rest.labels.index(v)
                comps = connected_components(rest)
                assert is_clique(rest, comps.members[comps.component_id[at]])


def test_max_degree_pivot_has_no_n1_violation():
    for G in er_corpus(300, seed=14):
        if G.m == 0:
            continue
        top = max(G.degree(u) for u in G.vertices())
        for v in G.vertices():
            if G.degree(v) == top:
                assert n1_neighbor_violations(build_hv(G, v)) == []
