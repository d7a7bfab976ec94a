"""Brute-force ground truth for small instances.

Nothing here shares code with the solver beyond the Graph/HvGraph containers:
cluster deletion is solved by naive three-way P3 branching (and, as a second
opinion, by subset enumeration), and the cover-domination definitions are
checked by enumerating every vertex cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .hv import HvGraph

__all__ = [
    "OracleGuardError",
    "DominationReport",
    "oracle_min_cvd",
    "oracle_min_cvd_subsets",
    "oracle_vc",
    "all_vertex_covers",
    "dominating_classes",
    "DEFAULT_GUARD",
]

DEFAULT_GUARD = 16


class OracleGuardError(ValueError):
    pass


def _guard(n: int, guard: int):
    if n > guard:
        raise OracleGuardError(f"instance has {n} vertices, oracle guard is {guard}")


def _p3_avoiding(adj, removed: int):
    # induced P3 a-b-c in G - removed (bitmask), or None
    n = len(adj)
    for b in range(n):
        if removed >> b & 1:
            continue
        nb = [a for a in adj[b] if not removed >> a & 1]
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                if c not in adj[a]:
                    return a, b, c
    return None


def oracle_min_cvd(G: Graph, guard: int = DEFAULT_GUARD) -> tuple[int, list[frozenset[int]]]:
    """Minimum cluster deletion size and every optimum deletion set.

    Iterative deepening over the budget; each level branches three ways on
    the endpoints of some induced P3.  Any optimum set S is reached by always
    following the branch that picks a vertex of S, so the sets of size exactly
    the optimum found at the first successful level are all of them.
    """
    _guard(G.n, guard)
    adj = [set(s) for s in G.adj]
    for k in range(G.n + 1):
        found: set[int] = set()

        def rec(removed: int, budget: int):
            p3 = _p3_avoiding(adj, removed)
            if p3 is None:
                found.add(removed)
                return
            if budget == 0:
                return
            for x in p3:
                rec(removed | (1 << x), budget - 1)

        rec(0, k)
        if found:
            sols = sorted((frozenset(i for i in range(G.n) if m >> i & 1) for m in found),
                          key=lambda s: tuple(sorted(s)))
            return k, [s for s in sols if len(s) == k]
    raise AssertionError("unreachable: deleting all vertices leaves a cluster graph")


def _cluster_after(adj, keep: set[int]) -> bool:
    for b in keep:
        nb = [a for a in adj[b] if a in keep]
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                if c not in adj[a]:
                    return False
    return True


def oracle_min_cvd_subsets(G: Graph, guard: int = DEFAULT_GUARD) -> tuple[int, frozenset[int]]:
    """Same optimum by scanning subsets in increasing size."""
    _guard(G.n, guard)
    adj = [set(s) for s in G.adj]
    verts = list(range(G.n))
    for size in range(G.n + 1):
        for S in combinations(verts, size):
            if _cluster_after(adj, set(verts) - set(S)):
                return size, frozenset(S)
    raise AssertionError("unreachable")


def all_vertex_covers(H: HvGraph, guard: int = DEFAULT_GUARD) -> list[frozenset[int]]:
    verts = H.vertices()
    _guard(len(verts), guard)
    idx = {u: i for i, u in enumerate(verts)}
    emasks = [(1 << idx[a]) | (1 << idx[b]) for a, b in H.edges()]
    covers = []
    for m in range(1 << len(verts)):
        if all(m & e for e in emasks):
            covers.append(frozenset(u for u in verts if m >> idx[u] & 1))
    return covers


def oracle_vc(H: HvGraph, guard: int = DEFAULT_GUARD) -> int:
    return min(len(X) for X in all_vertex_covers(H, guard))


ClassKey = tuple[int, frozenset]


@dataclass(frozen=True)
class DominationReport:
    classes: list[tuple[int, frozenset[int], frozenset[int]]]
    dominating_flags: list[bool]

    def dominating(self) -> list[tuple[int, frozenset[int], frozenset[int]]]:
        return [c for c, f in zip(self.classes, self.dominating_flags) if f]


def dominating_classes(H: HvGraph, guard: int = DEFAULT_GUARD) -> DominationReport:
    """Group all covers by ``(size, X & N2)`` and flag the dominating classes.

    A class is dominating when each member X satisfies all three clauses:
    no cover dominates X; no proper subset of X is a cover; and for every
    nonempty Z within ``X & N2`` no cover is equivalent to ``X - Z``.
    """
    covers = all_vertex_covers(H, guard)
    cover_set = set(covers)
    members: dict[ClassKey, list[frozenset[int]]] = {}
    for X in covers:
        members.setdefault((len(X), X & H.n2), []).append(X)
    keys = sorted(members, key=lambda key: (key[0], tuple(sorted(key[1]))))

    def dominated(key: ClassKey) -> bool:
        size, n2part = key
        return any(s <= size and p >= n2part and (s, p) != key for s, p in members)

    def minimal(X: frozenset[int]) -> bool:
        # covers are upward closed: a proper subset cover exists iff some X - {u} is one
        return not any(X - {u} in cover_set for u in X)

    def strippable(key: ClassKey) -> bool:
        size, n2part = key
        part = sorted(n2part)
        for r in range(1, len(part) + 1):
            for Z in combinations(part, r):
                if (size - r, n2part - set(Z)) in members:
                    return True
        return False

    classes, flags = [], []
    for key in keys:
        group = sorted(members[key], key=lambda X: tuple(sorted(X)))
        flag = not dominated(key) and all(minimal(X) for X in group) and not strippable(key)
        classes.append((key[0], key[1], group[0]))
        flags.append(flag)
    return DominationReport(classes, flags)

