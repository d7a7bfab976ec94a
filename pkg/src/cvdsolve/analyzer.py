"""Automated worst-case analysis of the branching rules.

The dominating-family enumeration is abstracted by *top recursion trees*:
bounded-depth trees whose internal nodes carry one of six branching vectors
and whose leaves record the weighted depth reached.  Every tree compatible
with the structural constraints is generated; its leaf depths ``c_1..c_t``
are composed with the cost of the surrounding solver step, giving the vector
``(2, 3, c_1, .., c_t)`` when vc(H_v) = 2 and ``(1, c_1, .., c_t)`` when
vc(H_v) >= 3.  The largest branching number over all of them bounds the
running time, after four hand-analysed cases are removed or replaced.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

__all__ = [
    "ConstraintMode",
    "CALIBRATED_MODE",
    "NODE_VECTORS",
    "BranchingVector",
    "TopTree",
    "CaseRecord",
    "branching_number",
    "round_up",
    "iter_top_trees",
    "enumerate_top_trees",
    "top_cases",
    "refined_cases",
    "final_bound",
]


class ConstraintMode(str, Enum):
    """How strictly a child's branching vector must follow its parent's.

    ``strict``: the child comes strictly later in the rule order.
    ``nonstrict``: the child may repeat the parent's vector.
    ``repeats``: strict, except that ``(1)`` and ``(1,2)`` may repeat.
    """

    STRICT = "strict"
    NONSTRICT = "nonstrict"
    REPEATS = "repeats"


#: the only mode whose top five cases match the reference worst-case table
CALIBRATED_MODE = ConstraintMode.NONSTRICT

# in rule order: VC3/4/5, VC6 (deg>=4), VC6 (deg 3), VC7, VC7/VC8, VC8 on a skein
NODE_VECTORS: tuple[tuple[int, ...], ...] = ((1,), (1, 4), (1, 3), (2, 2), (2, 3), (1, 2))
_RANK = {vec: i for i, vec in enumerate(NODE_VECTORS)}
_SKEIN = (1, 2)


def branching_number(vector: Iterable[int] | "BranchingVector", tol: float = 1e-12) -> float:
    """Largest root of ``1 - sum(x ** -a)`` found by bisection.

    A single-entry vector has branching number 1.
    """
    costs = tuple(vector.costs if isinstance(vector, BranchingVector) else vector)
    if not costs:
        raise ValueError("empty branching vector")
    if any(a < 1 for a in costs):
        raise ValueError("branch costs must be positive")
    if len(costs) == 1:
        return 1.0
    lo, hi = 1.0, max(2.0, float(len(costs)))
    # sum(x**-a) is strictly decreasing, equal to len(costs) > 1 at x = 1
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if sum(mid ** -a for a in costs) > 1.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def round_up(x: float, digits: int = 3) -> float:
    """Round upward to ``digits`` decimals, as upper bounds are printed."""
    scale = 10 ** digits
    return math.ceil(x * scale - 1e-7) / scale


@dataclass(frozen=True)
class BranchingVector:
    costs: tuple[int, ...]

    def __post_init__(self):
        costs = tuple(sorted((int(a) for a in self.costs), reverse=True))
        if not costs or costs[-1] < 1:
            raise ValueError("branching vector needs at least one positive cost")
        object.__setattr__(self, "costs", costs)

    @classmethod
    def parse(cls, text: str) -> "BranchingVector":
        return cls(tuple(int(tok) for tok in text.replace("(", "").replace(")", "").split(",") if tok.strip()))

    @property
    def number(self) -> float:
        return branching_number(self.costs)


@dataclass(frozen=True)
class TopTree:
    """A node of a top recursion tree; leaves have ``label is None``."""

    depth: int
    label: tuple[int, ...] | None = None
    children: tuple["TopTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.label is None

    def leaf_depths(self) -> tuple[int, ...]:
        if self.is_leaf:
            return (self.depth,)
        return tuple(d for c in self.children for d in c.leaf_depths())

    def labels(self) -> Iterator[tuple[int, ...]]:
        if not self.is_leaf:
            yield self.label
            for c in self.children:
                yield from c.labels()

    def internal_nodes(self) -> Iterator["TopTree"]:
        if not self.is_leaf:
            yield self
            for c in self.children:
                yield from c.internal_nodes()

    def render(self) -> str:
        """Compact bracket notation, e.g. ``(1,3)[(2,2)[3,3],3]``."""
        if self.is_leaf:
            return str(self.depth)
        inner = ",".join(c.render() for c in self.children)
        return f"({','.join(map(str, self.label))})[{inner}]"


@dataclass(frozen=True)
class CaseRecord:
    alpha: int
    leaf_depths: tuple[int, ...]
    composed: tuple[int, ...]
    branching_number: float
    tree: TopTree | None = None

    @property
    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.leaf_depths))

    def as_row(self) -> dict:
        return {
            "alpha": self.alpha,
            "leaf_depths": " ".join(map(str, self.leaf_depths)),
            "vector": ",".join(map(str, self.composed)),
            "branching_number": round(self.branching_number, 9),
            "printed": f"{round_up(self.branching_number):.3f}",
            "tree": self.tree.render() if self.tree is not None else "",
        }


def _may_follow(parent: tuple[int, ...] | None, child: tuple[int, ...], mode: ConstraintMode) -> bool:
    if parent is None:
        return True
    p, c = _RANK[parent], _RANK[child]
    if mode is ConstraintMode.STRICT:
        return c > p
    if mode is ConstraintMode.NONSTRICT:
        return c >= p
    return c > p or (c == p and child in ((1,), _SKEIN))


def _grow(alpha: int, mode: ConstraintMode, depth: int, parent, reach: int) -> Iterator[TopTree]:
    # reach >= 0: still within the marked range below some shallow (1,2) node
    if depth >= alpha and reach < 0:
        yield TopTree(depth)
        return
    for vec in NODE_VECTORS:
        if not _may_follow(parent, vec, mode):
            continue
        child_reach = reach - 1
        if vec == _SKEIN and depth < alpha:
            child_reach = max(child_reach, alpha - depth - 2)
        subtrees = [list(_grow(alpha, mode, depth + a, vec, child_reach)) for a in vec]
        for kids in itertools.product(*subtrees):
            yield TopTree(depth, vec, kids)


def _legal(tree: TopTree) -> bool:
    root = tree.label
    if root not in ((1,), (1, 4)) and any(lab == _SKEIN for lab in tree.labels()):
        return False
    if root in ((1, 3), (1, 4)) and tree.children[0].label == _SKEIN:
        return False
    return True


def iter_top_trees(alpha: int, mode: ConstraintMode | str = CALIBRATED_MODE) -> Iterator[TopTree]:
    """Every legal top recursion tree for the given depth threshold."""
    mode = ConstraintMode(mode)
    if alpha < 1:
        raise ValueError("alpha must be positive")
    for tree in _grow(alpha, mode, 0, None, -1):
        if _legal(tree):
            yield tree


def _prefix(alpha: int) -> tuple[int, ...]:
    return (2, 3) if alpha == 2 else (1,)


def enumerate_top_trees(alpha: int, mode: ConstraintMode | str = CALIBRATED_MODE) -> list[CaseRecord]:
    """One case per distinct leaf-depth multiset, first tree found wins."""
    seen: dict[tuple[int, ...], CaseRecord] = {}
    for tree in iter_top_trees(alpha, mode):
        leaves = tree.leaf_depths()
        key = tuple(sorted(leaves))
        if key in seen:
            continue
        vec = _prefix(alpha) + leaves
        seen[key] = CaseRecord(alpha, leaves, vec, branching_number(vec), tree)
    return list(seen.values())


def _rank_key(rec: CaseRecord):
    return (-round(rec.branching_number, 9), rec.alpha, rec.composed)


def top_cases(limit: int | None = 5, mode: ConstraintMode | str = CALIBRATED_MODE,
              alphas: Sequence[int] = (2, 3, 4)) -> list[CaseRecord]:
    """All cases over the given thresholds, worst first.

    Exact ties (several vectors share a root) are ordered by ``alpha``.
    """
    records: dict[tuple[int, ...], CaseRecord] = {}
    for alpha in alphas:
        for rec in enumerate_top_trees(alpha, mode):
            records.setdefault(tuple(sorted(rec.composed)), rec)
    ranked = sorted(records.values(), key=_rank_key)
    return ranked if limit is None else ranked[:limit]


# (alpha, sorted leaf depths) of the hand-analysed cases
_IMPOSSIBLE = {
    (2, (2, 2)): "pivot of degree 2 contradicts the reduction rules",
    (2, (2, 3, 4)): "second degree-3 vertex would violate the N1-neighbor bound",
    (3, (3, 3, 4, 5)): "third degree-3 vertex would violate the N1-neighbor bound",
}
_REPLACED = {
    (3, (3, 3, 3)): ((2, 3, 3, 3), (2, 3, 3, 3, 3)),
}


def refined_cases(mode: ConstraintMode | str = CALIBRATED_MODE) -> list[CaseRecord]:
    """All cases after dropping impossible ones and substituting sharper vectors."""
    out = []
    for rec in top_cases(None, mode):
        key = (rec.alpha, rec.multiset)
        if key in _IMPOSSIBLE:
            continue
        if key in _REPLACED:
            for vec in _REPLACED[key]:
                out.append(CaseRecord(rec.alpha, rec.leaf_depths, vec, branching_number(vec), rec.tree))
            continue
        out.append(rec)
    return sorted(out, key=_rank_key)


def final_bound(mode: ConstraintMode | str = CALIBRATED_MODE) -> float:
    return max(rec.branching_number for rec in refined_cases(mode))
