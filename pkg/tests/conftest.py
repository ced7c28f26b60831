from pathlib import Path

import numpy as np
import pytest

from lapdiam.enumeration import make_rng, random_connected, random_graph
from lapdiam.graph6 import parse_graph6

DATA = Path(__file__).parent / "data"


def geng_census(n, connected=True):
    """Graphs produced by nauty's geng (independent of this package's enumerator)."""
    name = f"geng_{'connected' if connected else 'all'}_{n}.g6"
    with open(DATA / name) as fh:
        return [parse_graph6(line.strip()) for line in fh if line.strip()]


def random_graphs(count, seed, n_range=(1, 10), p_range=(0.15, 0.85), connected=False):
    rng = make_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(*p_range))
        out.append(random_connected(n, max(p, 0.3), rng) if connected else random_graph(n, p, rng))
    return out


@pytest.fixture(scope="session")
def corpus7():
    """All graphs (connected or not) with 1 to 7 vertices."""
    out = []
    for n in range(1, 8):
        out.extend(geng_census(n, connected=False))
    return out


@pytest.fixture(scope="session")
def connected7():
    out = []
    for n in range(1, 8):
        out.extend(geng_census(n, connected=True))
    return out


def to_nx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def numpy_spectrum(g):
    from lapdiam.spectra import laplacian

    return np.sort(np.linalg.eigvalsh(laplacian(g).astype(float)))[::-1]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
