import random

import networkx as nx
import pytest

from eternal_domination import Digraph, SimpleGraph


def to_nx(g):
    h = nx.DiGraph() if isinstance(g, Digraph) else nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.arcs if isinstance(g, Digraph) else g.edges)
    return h


def small_graphs(n_min=1, n_max=5):
    for h in nx.graph_atlas_g():
        if n_min <= h.number_of_nodes() <= n_max:
            yield SimpleGraph(h.number_of_nodes(), h.edges())


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
