import itertools
import random

import pytest
from hypothesis import settings, strategies as st

from trianglefree.graph import Graph, graph_new

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def labeled_graphs(n):
    """Every labelled graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield graph_new(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng, n, p=None):
    if p is None:
        p = rng.random()
    return graph_new(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def random_relabel(rng, g):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def to_nx(g):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_new(n, [p for p, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
