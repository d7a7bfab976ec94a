"""The auxiliary graph H_v on the first and second neighborhood of a vertex.

Inside ``N1 = N(v)`` the adjacency of G is complemented; between ``N1`` and
``N2 = N2(v)`` it is copied; ``N2`` stays independent.  Vertex covers of H_v are
exactly the deletion sets that turn the component of ``v`` into a clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, second_neighborhood

__all__ = [
    "HvGraph",
    "SkeinView",
    "build_hv",
    "twins",
    "vc_class",
    "skein_view",
    "n1_neighbor_violations",
    "format_hv",
]

N1, N2 = "N1", "N2"


@dataclass(frozen=True)
class HvGraph:
    n1: frozenset[int]
    n2: frozenset[int]
    adj: Mapping[int, frozenset[int]]
    source_vertex: int | None = None
    _sorted: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if not self._sorted:
            object.__setattr__(self, "_sorted", tuple(sorted(self.adj)))

    @classmethod
    def from_edges(cls, n1: Iterable[int], n2: Iterable[int], edges: Iterable[tuple[int, int]],
                   source_vertex: int | None = None) -> "HvGraph":
        """Build directly from a side assignment and edge list (used by tests)."""
        n1, n2 = frozenset(n1), frozenset(n2)
        if n1 & n2:
            raise ValueError("N1 and N2 overlap")
        nbrs: dict[int, set[int]] = {u: set() for u in n1 | n2}
        for a, b in edges:
            if a == b:
                raise ValueError("self-loop")
            if a in n2 and b in n2:
                raise ValueError(f"edge ({a}, {b}) inside N2")
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(n1, n2, {u: frozenset(s) for u, s in nbrs.items()}, source_vertex)

    def vertices(self) -> tuple[int, ...]:
        return self._sorted

    def __len__(self):
        return len(self._sorted)

    def __contains__(self, u):
        return u in self.adj

    def side(self, u: int) -> str:
        return N1 if u in self.n1 else N2

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in self._sorted for w in sorted(self.adj[u]) if u < w]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj.values()) // 2

    def has_edges(self) -> bool:
        return any(self.adj.values())

    def is_vertex_cover(self, X: Iterable[int]) -> bool:
        X = set(X)
        return all(u in X or self.adj[u] <= X for u in self._sorted)

    def without(self, X: Iterable[int]) -> "HvGraph":
        X = frozenset(X)
        if not X:
            return self
        adj = {u: (s - X if s & X else s) for u, s in self.adj.items() if u not in X}
        return HvGraph(self.n1 - X, self.n2 - X, adj, self.source_vertex,
                       tuple(u for u in self._sorted if u not in X))

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted tuples, ordered by smallest member."""
        seen: set[int] = set()
        out = []
        for s in self._sorted:
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
                        comp.append(w)
            out.append(tuple(sorted(comp)))
        return out

    def isolated(self) -> list[int]:
        return [u for u in self._sorted if not self.adj[u]]


@dataclass(frozen=True)
class SkeinView:
    seagull_centers: tuple[int, ...]
    seagull_leaves: dict[int, tuple[int, int]]
    isolated: tuple[int, ...]
    is_skein: bool


def build_hv(G: Graph, v: int) -> HvGraph:
    first = G.adj[v]
    second = second_neighborhood(G, v)
    adj: dict[int, frozenset[int]] = {}
    for u in first:
        nu = G.adj[u]
        adj[u] = (first - nu - {u}) | (nu & second)
    for w in second:
        adj[w] = G.adj[w] & first
    return HvGraph(frozenset(first), second, adj, v)


def twins(G: Graph, v: int) -> frozenset[int]:
    """``v`` together with every vertex sharing its closed neighborhood."""
    closed = G.closed_neighborhood(v)
    return frozenset({v} | {u for u in G.adj[v] if G.closed_neighborhood(u) == closed})


def vc_class(H: HvGraph) -> tuple[str, frozenset[int] | None]:
    """Classify the minimum vertex cover size of H as ``one``, ``two`` or ``three_plus``.

    The witness is the lexicographically smallest cover of that size.
    """
    edges = H.edges()
    if not edges:
        raise ValueError("vc_class needs a graph with at least one edge")
    verts = [u for u in H.vertices() if H.adj[u]]
    for x in verts:
        if H.degree(x) == len(edges):
            return "one", frozenset({x})
    for x in verts:
        common: set[int] | None = None
        for a, b in edges:
            if a == x or b == x:
                continue
            common = {a, b} if common is None else common & {a, b}
            if not common:
                break
        if common:
            later = [y for y in common if y > x]
            if later:
                return "two", frozenset({x, min(later)})
    return "three_plus", None


def skein_view(H: HvGraph) -> SkeinView:
    centers, leaves, isolated = [], {}, []
    ok = True
    for comp in H.components():
        if len(comp) == 1:
            isolated.append(comp[0])
            continue
        if len(comp) == 3:
            mids = [u for u in comp if H.degree(u) == 2]
            if len(mids) == 1 and mids[0] in H.n1:
                rest = tuple(u for u in comp if u != mids[0])
                if all(u in H.n2 for u in rest):
                    centers.append(mids[0])
                    leaves[mids[0]] = rest
                    continue
        ok = False
    return SkeinView(tuple(centers), leaves, tuple(isolated), ok)


def n1_neighbor_violations(H: HvGraph) -> list[int]:
    """N1 vertices with more N2-neighbors than N1-neighbors.

    Always empty when H was built from a maximum-degree vertex.
    """
    bad = []
    for u in sorted(H.n1):
        nu = H.adj[u]
        if len(nu & H.n2) > len(nu & H.n1):
            bad.append(u)
    return bad


def format_hv(H: HvGraph, labels=None) -> str:
    """Edge list with side tags, for debugging."""
    name = (lambda u: labels[u]) if labels is not None else (lambda u: u)
    lines = [f"# H_v for v={name(H.source_vertex) if H.source_vertex is not None else '?'}: "
             f"|N1|={len(H.n1)} |N2|={len(H.n2)} edges={H.edge_count()}"]
    for u in H.vertices():
        lines.append(f"v {name(u)} {H.side(u)}")
    for a, b in H.edges():
        lines.append(f"e {name(a)} {name(b)}")
    return "\n".join(lines) + "\n"
