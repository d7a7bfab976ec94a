"""Seeded random instance generators."""

from __future__ import annotations

import random

from .graph import Graph

__all__ = ["erdos_renyi", "planted"]


def erdos_renyi(n: int, p: float, seed: int | None = None) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def planted(cliques: int, size: int, deletions: int, noise: int = 0, spread: int = 2,
            seed: int | None = None) -> tuple[Graph, frozenset[int]]:
    """Disjoint cliques plus vertices wired across several of them.

    Each planted vertex attaches to a random nonempty part of ``spread``
    distinct cliques.  ``noise`` extra edges join random vertices of different
    cliques.  Deleting the planted vertices plus one endpoint per noise edge
    leaves a cluster graph, so the optimum is at most ``deletions + noise``.

    Returns the graph and the planted vertex ids.
    """
    if cliques < 1 or size < 1 or deletions < 0 or noise < 0 or spread < 1:
        raise ValueError("invalid planted-instance parameters")
    if noise and cliques < 2:
        raise ValueError("noise edges need at least two cliques")
    rng = random.Random(seed)
    groups = [list(range(c * size, (c + 1) * size)) for c in range(cliques)]
    n = cliques * size + deletions
    edges: set[tuple[int, int]] = set()
    for g in groups:
        edges.update((a, b) for i, a in enumerate(g) for b in g[i + 1:])
    extra = list(range(cliques * size, n))
    for x in extra:
        for g in rng.sample(groups, min(spread, cliques)):
            for u in rng.sample(g, rng.randint(1, size)):
                edges.add((u, x))
    added = 0
    while added < noise:
        ga, gb = rng.sample(range(cliques), 2)
        e = (rng.choice(groups[ga]), rng.choice(groups[gb]))
        e = (min(e), max(e))
        if e not in edges:
            edges.add(e)
            added += 1
    perm = list(range(n))
    rng.shuffle(perm)
    G = Graph.from_edges(n, [(perm[a], perm[b]) for a, b in sorted(edges)])
    return G, frozenset(perm[x] for x in extra)
