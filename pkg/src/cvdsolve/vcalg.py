"""Branching enumeration of a k-dominating family of vertex covers of H_v.

Every call applies the first applicable rule among VC1..VC8.  The rules that
recurse on a single set (VC3, VC4, VC5) and the ones that branch (VC6, VC7,
VC8) are both expressed as a list of committed sets; the recursion continues
on ``H - X_i`` with budget ``k - |X_i|`` and glues ``X_i`` onto every result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .hv import HvGraph

__all__ = [
    "RuleChoice",
    "TraceStep",
    "RuleTrace",
    "CoverFamily",
    "select_rule",
    "branch_sets_vc7",
    "vcalg",
]


class RuleChoice(NamedTuple):
    rule: str
    target: tuple[int, ...]
    branches: tuple[frozenset[int], ...]

    @property
    def costs(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.branches)


class TraceStep(NamedTuple):
    depth: int
    rule: str
    target: tuple[int, ...]
    costs: tuple[int, ...]


@dataclass
class RuleTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def append(self, step: TraceStep):
        self.steps.append(step)

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def format(self, labels=None) -> str:
        name = (lambda u: labels[u]) if labels is not None else (lambda u: u)
        lines = []
        for s in self.steps:
            tgt = ",".join(str(name(u)) for u in s.target)
            costs = ",".join(map(str, s.costs))
            lines.append(f"{'  ' * s.depth}{s.rule} [{tgt}] costs=({costs})")
        return "\n".join(lines)


@dataclass(frozen=True)
class CoverFamily:
    covers: tuple[frozenset[int], ...]

    def __iter__(self):
        return iter(self.covers)

    def __len__(self):
        return len(self.covers)

    def __contains__(self, X):
        return frozenset(X) in self.covers


def _walk_cycle(H: HvGraph, start: int) -> list[int]:
    order = [start]
    prev, cur = start, min(H.adj[start])
    while cur != start:
        order.append(cur)
        a, b = H.adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


def branch_sets_vc7(path: tuple[int, ...]) -> tuple[frozenset[int], frozenset[int]]:
    """Split ``u_0..u_{s+1}`` into even-indexed and odd-indexed vertices.

    The two ends may coincide (one N2 vertex closing the path into a cycle);
    both sets then still cover every edge of that cycle.
    """
    if len(path) < 4:
        raise ValueError("VC7 path needs at least two N1 vertices")
    return frozenset(path[0::2]), frozenset(path[1::2])


def _n1_path_component(H: HvGraph) -> tuple[int, ...] | None:
    """Smallest component of size >= 2 in H[N1], as the path u_0..u_{s+1}."""
    seen: set[int] = set()
    best: list[int] | None = None
    for s in sorted(H.n1):
        if s in seen or not (H.adj[s] & H.n1):
            continue
        comp, stack = [s], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in H.adj[u] & H.n1:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        if best is None or len(comp) < len(best):
            best = comp
    if best is None:
        return None
    ends = sorted(u for u in best if len(H.adj[u] & H.n1) == 1)
    if len(ends) != 2:
        raise RuntimeError(f"VC7: component {sorted(best)} of H[N1] is not a path")
    path = [ends[0]]
    prev = None
    while len(path) < len(best):
        cur = path[-1]
        nxt = [w for w in H.adj[cur] & H.n1 if w != prev]
        prev = cur
        path.append(nxt[0])
    outer = []
    for end in (path[0], path[-1]):
        ext = H.adj[end] & H.n2
        if len(ext) != 1:
            raise RuntimeError(f"VC7: path end {end} has {len(ext)} N2 neighbors")
        outer.append(next(iter(ext)))
    return (outer[0], *path, outer[1])


def select_rule(H: HvGraph, k: int) -> RuleChoice:
    """Return the first applicable rule, its target and its committed sets."""
    if k < 0:
        return RuleChoice("VC1", (), ())
    if not H.has_edges():
        return RuleChoice("VC2", (), ())
    verts = H.vertices()
    adj = H.adj

    for u in verts:
        if u in H.n1 and len(adj[u]) == 1:
            w = next(iter(adj[u]))
            return RuleChoice("VC3", (u, w), (frozenset({w}),))

    cycles = [c for c in H.components() if len(c) >= 3 and all(len(adj[u]) == 2 for u in c)]
    for c in cycles:
        if all(u in H.n1 for u in c):
            cyc = _walk_cycle(H, c[0])
            return RuleChoice("VC4", tuple(cyc), (frozenset(cyc[0::2]),))
    for c in cycles:
        if all(not (adj[u] & H.n1) for u in c if u in H.n1):
            cyc = _walk_cycle(H, min(u for u in c if u in H.n1))
            return RuleChoice("VC5", tuple(cyc), (frozenset(u for u in c if u in H.n2),))

    maxdeg = max(len(adj[u]) for u in verts)
    if maxdeg >= 3:
        top = [u for u in verts if len(adj[u]) == maxdeg]
        on_n2 = [u for u in top if u in H.n2]
        u = on_n2[0] if on_n2 else top[0]
        return RuleChoice("VC6", (u,), (frozenset({u}), adj[u]))

    path = _n1_path_component(H)
    if path is not None:
        return RuleChoice("VC7", path, branch_sets_vc7(path))

    comps = [c for c in H.components() if len(c) > 1]
    best = max(comps, key=lambda c: (len(c), -c[0]))
    for u in best:
        if u in H.n1 and (len(adj[u]) != 2 or adj[u] & H.n1):
            raise RuntimeError(f"VC8: component {best} is not an alternating path")
    c1 = frozenset(u for u in best if u in H.n1)
    c2 = frozenset(u for u in best if u in H.n2)
    return RuleChoice("VC8", best, (c1, c2))


def _cover_key(X: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(X))


def vcalg(H: HvGraph, k: int, trace: RuleTrace | None = None, counts=None) -> CoverFamily:
    """Enumerate a k-dominating family of vertex covers of ``H``.

    Parameters
    ----------
    H : HvGraph
    k : int
        Budget; covers larger than ``k`` are never produced.
    trace : RuleTrace, optional
        Receives one step per recursive call.
    counts : collections.Counter, optional
        Incremented once per rule application.

    Returns
    -------
    CoverFamily
        Distinct covers sorted lexicographically.
    """
    found: set[frozenset[int]] = set()

    def rec(H: HvGraph, k: int, committed: frozenset[int], depth: int):
        choice = select_rule(H, k)
        if counts is not None:
            counts[choice.rule] += 1
        if trace is not None:
            trace.append(TraceStep(depth, choice.rule, choice.target, choice.costs))
        if choice.rule == "VC1":
            return
        if choice.rule == "VC2":
            found.add(committed)
            return
        for X in choice.branches:
            rec(H.without(X), k - len(X), committed | X, depth + 1)

    rec(H, k, frozenset(), 0)
    return CoverFamily(tuple(sorted(found, key=_cover_key)))
