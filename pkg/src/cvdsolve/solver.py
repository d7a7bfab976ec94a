"""Branch-and-reduce solver for Cluster Vertex Deletion.

Reductions R1-R5 strip components that can be settled directly; the pivot's
H_v then decides between three branching rules:

* B1: vc(H_v) = 1, or vc(H_v) = 2 with a twin of the pivot -- branch on the
  dominating family of the pivot.
* B2: vc(H_v) = 2 and no twins -- additionally delete the pivot together with
  every member of the dominating family of a neighbor-side vertex ``w`` in
  ``G - v``.
* B3: vc(H_v) >= 3 -- delete all twins of the pivot at once, or one of the
  family members.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph import (
    Graph,
    choose_pivot,
    connected_components,
    is_clique,
    is_cluster_graph,
    remove_vertices,
)
from .hv import build_hv, n1_neighbor_violations, twins, vc_class
from .vcalg import vcalg

__all__ = [
    "Instance",
    "BranchMenu",
    "SolveResult",
    "SearchStats",
    "Reduced",
    "InvariantViolation",
    "apply_reductions",
    "min_cvd_deg2",
    "build_branches",
    "solve_decision",
    "solve_min",
    "verify",
]

class InvariantViolation(RuntimeError):
    """An assumption the branching rules rely on did not hold."""


@dataclass(frozen=True)
class Instance:
    graph: Graph
    budget: int


@dataclass(frozen=True)
class BranchMenu:
    rule: str
    branches: tuple[tuple[frozenset[int], int], ...]

    def __len__(self):
        return len(self.branches)

    def costs(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.branches)


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    witness: frozenset | None = None

    @property
    def size(self) -> int | None:
        return None if self.witness is None else len(self.witness)


@dataclass
class SearchStats:
    """Counters filled in during a search."""

    nodes: int = 0
    rules: Counter = field(default_factory=Counter)

    def as_dict(self) -> dict:
        return {"nodes": self.nodes, "rules": dict(sorted(self.rules.items()))}


@dataclass(frozen=True)
class Reduced:
    verdict: bool | None
    instance: Instance
    witness: frozenset

    @property
    def solved(self) -> bool:
        return self.verdict is not None


def _walk(G: Graph, start: int, prev: int | None, count: int) -> list[int]:
    order = [start]
    while len(order) < count:
        cur = order[-1]
        nxt = min(w for w in G.adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def min_cvd_deg2(G: Graph, members: tuple[int, ...] | None = None) -> tuple[int, frozenset[int]]:
    """Optimum deletion set of a connected graph with maximum degree at most two.

    Paths on n vertices need ``n // 3`` deletions (every third vertex),
    cycles on n >= 4 vertices need ``ceil(n / 3)``.
    """
    if members is None:
        members = tuple(G.vertices())
    if any(G.degree(u) > 2 for u in members):
        raise ValueError("component has a vertex of degree > 2")
    n = len(members)
    if is_clique(G, members):
        return 0, frozenset()
    if all(G.degree(u) == 2 for u in members):
        # cycle: drop the smallest vertex, then solve the remaining path
        first = min(members)
        order = _walk(G, min(G.adj[first]), first, n - 1)
        picked = [first] + order[2::3]
    else:
        start = min(u for u in members if G.degree(u) <= 1)
        picked = _walk(G, start, None, n)[2::3]
    return len(picked), frozenset(picked)


def apply_reductions(inst: Instance, stats: SearchStats | None = None) -> Reduced:
    """Exhaustively apply R1-R5.

    The rules act on whole components, and deleting one component never
    changes another, so one pass over the components reaches the same fixed
    point as re-scanning after each application.
    """
    G, k = inst.graph, inst.budget
    rules = stats.rules if stats is not None else Counter()
    if k < 0:
        rules["R1"] += 1
        return Reduced(False, inst, frozenset())
    if is_cluster_graph(G):
        rules["R2"] += 1
        return Reduced(True, inst, frozenset())

    drop: set[int] = set()
    witness: set[int] = set()
    for comp in connected_components(G).members:
        if is_clique(G, comp):
            rules["R3"] += 1
            drop.update(comp)
            continue
        hit = _single_deletion(G, comp)
        if hit is not None:
            rules["R4"] += 1
            drop.update(comp)
            witness.add(hit)
            k -= 1
            continue
        if all(G.degree(u) <= 2 for u in comp):
            rules["R5"] += 1
            size, S = min_cvd_deg2(G, comp)
            drop.update(comp)
            witness |= S
            k -= size

    labels = frozenset(G.labels[u] for u in witness)
    reduced = Instance(remove_vertices(G, drop), k)
    if k < 0:
        rules["R1"] += 1
        return Reduced(False, reduced, labels)
    if reduced.graph.n == 0:
        rules["R2"] += 1
        return Reduced(True, reduced, labels)
    return Reduced(None, reduced, labels)


def _single_deletion(G: Graph, comp: tuple[int, ...]) -> int | None:
    members = set(comp)
    for v in comp:
        rest = members - {v}
        if _cluster_on(G, rest):
            return v
    return None


def _cluster_on(G: Graph, keep: set[int]) -> bool:
    # cluster graph iff adjacent vertices have equal closed neighborhoods
    for b in keep:
        closed_b = (G.adj[b] & keep) | {b}
        for a in G.adj[b] & keep:
            if (G.adj[a] & keep) | {a} != closed_b:
                return False
    return True


def build_branches(inst: Instance, v: int, stats: SearchStats | None = None) -> BranchMenu:
    G, k = inst.graph, inst.budget
    counts = stats.rules if stats is not None else None
    H = build_hv(G, v)
    if __debug__ and G.degree(v) == max(G.degree(u) for u in G.vertices()):
        bad = n1_neighbor_violations(H)
        assert not bad, f"N1-neighbor bound fails at {bad} for max-degree pivot {v}"
    cls, X = vc_class(H)
    T = twins(G, v)
    family = vcalg(H, k, counts=counts)
    base = tuple((S, len(S)) for S in family)

    if cls == "one" or (cls == "two" and len(T) >= 2):
        rule, branches = "B1", base
    elif cls == "two":
        rule = "B2"
        keep = [u for u in G.vertices() if u != v]
        Gv = remove_vertices(G, [v]).relabeled()
        index = {u: i for i, u in enumerate(keep)}
        comps = connected_components(Gv)
        w = None
        for cand in sorted(X):
            ci = index[cand]
            members = comps.members[comps.component_id[ci]]
            if not is_clique(Gv, members):
                w = ci
                break
        if w is None:
            raise InvariantViolation(
                f"B2: no vertex of {sorted(X)} has a non-clique component in G - {v}; "
                f"instance n={G.n} k={k} edges={G.edges()}")
        fam_w = vcalg(build_hv(Gv, w), k - 1, counts=counts)
        extra = tuple((frozenset({v} | {keep[s] for s in S}), 1 + len(S)) for S in fam_w)
        branches = base + extra
    else:
        rule = "B3"
        branches = ((T, len(T)),) + tuple(b for b in base if b[0] != T)

    if stats is not None:
        stats.rules[rule] += 1
    return BranchMenu(rule, branches)


def _search(G: Graph, k: int, stats: SearchStats) -> frozenset | None:
    stats.nodes += 1
    red = apply_reductions(Instance(G, k), stats)
    if red.verdict is False:
        return None
    if red.verdict is True:
        return red.witness
    G, k = red.instance.graph, red.instance.budget
    v = choose_pivot(G)
    menu = build_branches(red.instance, v, stats)
    for S, cost in menu.branches:
        sub = _search(remove_vertices(G, S), k - cost, stats)
        if sub is not None:
            return red.witness | {G.labels[u] for u in S} | sub
    return None


def solve_decision(G: Graph, k: int, stats: SearchStats | None = None) -> SolveResult:
    """Decide whether G has a cluster deletion set of size at most k.

    The witness, if any, is given in the labels of ``G``.
    """
    stats = stats if stats is not None else SearchStats()
    found = _search(G, k, stats)
    if found is None:
        return SolveResult(False, None)
    ids = {lab: i for i, lab in enumerate(G.labels)}
    if not verify(G, {ids[x] for x in found}, k):
        raise InvariantViolation(f"solver produced an invalid witness {sorted(found)}")
    return SolveResult(True, frozenset(found))


def solve_min(G: Graph, stats: SearchStats | None = None) -> tuple[int, frozenset]:
    """Minimum deletion set size and witness, scanning k upward from zero."""
    for k in range(G.n + 1):
        res = solve_decision(G, k, stats)
        if res.feasible:
            return len(res.witness), res.witness
    raise AssertionError("unreachable: deleting every vertex always works")


def verify(G: Graph, S, k: int) -> bool:
    S = set(S)
    return len(S) <= k and is_cluster_graph(remove_vertices(G, S))
