import numpy as np
import pytest

from hyperspec.graph import Graph, is_connected

ACCEPTANCE_LINES: list[str] = []


def random_connected_graph(rng, n_min=2, n_max=8, p=None) -> Graph:
    """Random spanning tree plus extra edges, so the result is always connected."""
    n = int(rng.integers(n_min, n_max + 1))
    order = rng.permutation(n)
    edges = {tuple(sorted((int(order[i]), int(order[rng.integers(0, i)])))) for i in range(1, n)}
    p = rng.uniform(0.1, 0.7) if p is None else p
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    G = Graph.from_edges(n, sorted(edges))
    assert is_connected(G)
    return G


def random_graph(rng, n_min=1, n_max=7, p=0.4) -> Graph:
    n = int(rng.integers(n_min, n_max + 1))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
