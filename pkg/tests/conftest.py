import random

import pytest

from cvdsolve.generators import erdos_renyi
from cvdsolve.graph import Graph
from cvdsolve.hv import HvGraph

# lines collected by the acceptance module, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def er_corpus(count=500, max_n=10, ps=(0.2, 0.4, 0.6), seed=0):
    """Seeded Erdos-Renyi graphs with 1 <= n <= max_n."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        p = ps[i % len(ps)]
        out.append(erdos_renyi(n, p, seed=rng.randrange(2**31)))
    return out


def hv_corpus(count=300, max_n=10, seed=1):
    """Seeded random graphs with a side split and no edge inside N2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        n1 = rng.randint(1, n)
        p = rng.choice((0.15, 0.3, 0.5))
        edges = [(a, b) for a in range(n1) for b in range(a + 1, n) if rng.random() < p]
        out.append(HvGraph.from_edges(range(n1), range(n1, n), edges))
    return out


@pytest.fixture(scope="session")
def er_graphs():
    return er_corpus()


@pytest.fixture(scope="session")
def hv_graphs():
    return hv_corpus()
