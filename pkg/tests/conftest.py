import itertools
import random

import pytest

from triadminor.ising import Graph, IsingInstance

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_instance(graph, rng, lo=-2, hi=2):
    return IsingInstance(graph, [rng.randint(lo, hi) for _ in graph.vertices],
                         {e: rng.randint(lo, hi) for e in graph.edges})


def brute_force_energy(inst, spins):
    """Second energy evaluation: dense symmetric coupling matrix, double loop."""
    n = inst.graph.vertex_count
    M = [[0] * n for _ in range(n)]
    for (u, v), w in inst.J.items():
        M[u][v] = w
        M[v][u] = w
    total = 0
    for a in range(n):
        total += inst.h[a] * spins[a]
        for b in range(a + 1, n):
            total += M[a][b] * spins[a] * spins[b]
    return total


def brute_force_ground(inst):
    """(min energy, lexicographic first argmin, degeneracy) by itertools.product."""
    best, first, count = None, None, 0
    for s in itertools.product((-1, 1), repeat=inst.graph.vertex_count):
        e = brute_force_energy(inst, s)
        if best is None or e < best:
            best, first, count = e, s, 1
        elif e == best:
            count += 1
    return best, first, count


def cycle_graph(n):
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n):
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


@pytest.fixture
def rng():
    return random.Random(20260416)
