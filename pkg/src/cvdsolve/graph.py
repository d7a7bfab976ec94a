"""Simple undirected graphs and the queries the solver needs.

Vertices are dense integer ids ``0..n-1``.  Every graph also carries a tuple
of external labels so that deletion sets found deep in the search can be
reported in the numbering of the input file.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

__all__ = [
    "Graph",
    "ComponentView",
    "GraphFormatError",
    "parse_graph",
    "format_graph",
    "second_neighborhood",
    "connected_components",
    "is_cluster_graph",
    "find_induced_p3",
    "remove_vertices",
    "is_clique",
    "choose_pivot",
]


class GraphFormatError(ValueError):
    """Raised when an instance file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    adj: tuple[frozenset[int], ...]
    labels: tuple = ()
    duplicate_edges: int = field(default=0, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.adj))))
        elif len(self.labels) != len(self.adj):
            raise ValueError("labels must match the number of vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        dups = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                dups += 1
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs), tuple(labels) if labels is not None else (), dups)

    @property
    def n(self) -> int:
        return len(self.adj)

    vertex_count = n

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def vertices(self) -> range:
        return range(len(self.adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def relabeled(self) -> "Graph":
        """Same graph with labels reset to the vertex ids."""
        return Graph(self.adj, (), self.duplicate_edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ComponentView:
    component_id: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.members)


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", lineno) from None


def _parse_edgelist(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, toks in _tokens(text):
        if toks[0].startswith("#"):
            continue
        if header is None:
            if len(toks) != 2:
                raise GraphFormatError("header must be 'n m'", lineno)
            header = (_int(toks[0], lineno), _int(toks[1], lineno))
            if header[0] < 0 or header[1] < 0:
                raise GraphFormatError("negative header value", lineno)
            continue
        if len(toks) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        _check_edge(u, v, header[0], lineno)
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing header")
    return Graph.from_edges(header[0], edges)


def _parse_dimacs(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, toks in _tokens(text):
        kind = toks[0]
        if kind == "c":
            continue
        if kind == "p":
            if header is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise GraphFormatError("problem line must be 'p edge n m'", lineno)
            header = (_int(toks[2], lineno), _int(toks[3], lineno))
            continue
        if kind == "e":
            if header is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(toks) != 3:
                raise GraphFormatError("edge line must be 'e u v'", lineno)
            u, v = _int(toks[1], lineno) - 1, _int(toks[2], lineno) - 1
            _check_edge(u, v, header[0], lineno, offset=1)
            edges.append((u, v))
            continue
        raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if header is None:
        raise GraphFormatError("missing problem line")
    n = header[0]
    return Graph.from_edges(n, edges, labels=range(1, n + 1))


def _check_edge(u: int, v: int, n: int, lineno: int, offset: int = 0):
    for x in (u, v):
        if not 0 <= x < n:
            raise GraphFormatError(f"vertex {x + offset} out of range", lineno)
    if u == v:
        raise GraphFormatError(f"self-loop at vertex {u + offset}", lineno)


def parse_graph(source: str | TextIO, format: str = "edgelist") -> Graph:
    """Parse an instance given as text or an open text stream.

    ``format`` is ``"edgelist"`` (header ``n m``, 0-indexed endpoints) or
    ``"dimacs"`` (``p edge n m`` / ``e u v``, 1-indexed).  Duplicate edges are
    collapsed and counted in ``Graph.duplicate_edges``.
    """
    text = source if isinstance(source, str) else source.read()
    fmt = format.lower().replace("-", "").replace("_", "")
    if fmt in ("edgelist", "el", "txt"):
        return _parse_edgelist(text)
    if fmt in ("dimacs", "dimacslike"):
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def format_graph(G: Graph, format: str = "edgelist") -> str:
    out = io.StringIO()
    edges = G.edges()
    if format == "dimacs":
        out.write(f"p edge {G.n} {len(edges)}\n")
        for u, v in edges:
            out.write(f"e {u + 1} {v + 1}\n")
    else:
        out.write(f"{G.n} {len(edges)}\n")
        for u, v in edges:
            out.write(f"{u} {v}\n")
    return out.getvalue()


def second_neighborhood(G: Graph, v: int) -> frozenset[int]:
    """Vertices at distance exactly two from ``v``."""
    first = G.adj[v]
    reach: set[int] = set()
    for u in first:
        reach |= G.adj[u]
    return frozenset(reach - first - {v})


def connected_components(G: Graph) -> ComponentView:
    comp = [-1] * G.n
    members: list[tuple[int, ...]] = []
    for s in range(G.n):
        if comp[s] != -1:
            continue
        cid = len(members)
        comp[s] = cid
        stack, seen = [s], [s]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    stack.append(w)
                    seen.append(w)
        members.append(tuple(sorted(seen)))
    return ComponentView(tuple(comp), tuple(members))


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    S = list(S)
    for i, u in enumerate(S):
        nu = G.adj[u]
        for w in S[i + 1:]:
            if w not in nu:
                return False
    return True


def is_cluster_graph(G: Graph) -> bool:
    # a connected component is a clique iff each member is adjacent to all others
    for members in connected_components(G).members:
        size = len(members) - 1
        if any(len(G.adj[u]) != size for u in members):
            return False
    return True


def find_induced_p3(G: Graph) -> tuple[int, int, int] | None:
    """Lexicographically smallest induced path ``(a, b, c)``, or None."""
    for a in range(G.n):
        na = G.adj[a]
        for b in sorted(na):
            for c in sorted(G.adj[b]):
                if c != a and c not in na:
                    return a, b, c
    return None


def remove_vertices(G: Graph, S: Iterable[int]) -> Graph:
    """Induced subgraph on ``V - S``, densely re-indexed, labels carried along."""
    drop = set(S)
    if not drop:
        return G
    keep = [u for u in range(G.n) if u not in drop]
    index = {u: i for i, u in enumerate(keep)}
    adj = tuple(frozenset(index[w] for w in G.adj[u] if w in index) for u in keep)
    return Graph(adj, tuple(G.labels[u] for u in keep))


def choose_pivot(G: Graph) -> int:
    """Smallest degree-1 vertex if there is one, else smallest max-degree vertex."""
    best, best_deg = -1, 0
    for v in range(G.n):
        d = len(G.adj[v])
        if d == 1:
            return v
        if d > best_deg:
            best, best_deg = v, d
    if best < 0:
        raise ValueError("graph has no edges")
    return best
