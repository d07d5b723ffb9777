import networkx as nx
import numpy as np
import pytest

from alphatough import Graph

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in h.edges()))


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_edges(n, zip(*np.nonzero(upper)))


def random_connected(rng: np.random.Generator, n: int, p: float | None = None) -> Graph:
    while True:
        q = rng.uniform(0.2, 1.0) if p is None else p
        g = random_graph(rng, n, q)
        if g.is_connected():
            return g


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
