import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cyclecliques.graph import Graph, build, is_two_connected

settings.register_profile("default", deadline=None, max_examples=50,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return build(len(index), [(index[a], index[b]) for a, b in h.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_two_connected(rng: random.Random, n_min: int = 4, n_max: int = 9) -> Graph:
    while True:
        n = rng.randint(n_min, n_max)
        g = random_graph(rng, n, rng.uniform(0.3, 0.8))
        if is_two_connected(g):
            return g


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [e for e, b in zip(pairs, bits) if b])


@pytest.fixture(scope="session")
def atlas():
    """Every graph on at most 7 vertices, from networkx's independent atlas."""
    return [from_nx(h) for h in nx.graph_atlas_g()]


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line; printed now and again in the terminal summary."""
    def record(label: str, ok: bool, detail: str) -> None:
        line = f"{label}: {'PASS' if ok else 'FAIL'} ({detail})"
        _ACCEPTANCE_LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
