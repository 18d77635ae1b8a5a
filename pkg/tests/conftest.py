import itertools
import os

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from listcolor.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def from_nx(h) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


def to_nx(g: Graph):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def atlas(max_n: int, connected: bool = True) -> list[Graph]:
    """Every graph (up to isomorphism) on 1..max_n vertices, from the networkx atlas."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


def brute_colorings(g: Graph, lists):
    """All proper colourings from the lists, by itertools.product."""
    out = []
    for combo in itertools.product(*[sorted(L) for L in lists]):
        if all(combo[u] != combo[v] for u, v in g.edges()):
            out.append(combo)
    return out


def brute_chromatic_number(g: Graph) -> int:
    for k in range(1, g.n + 1):
        if brute_colorings(g, [range(k)] * g.n):
            return k
    return g.n


@pytest.fixture(scope="session")
def connected_atlas_6():
    return atlas(6)
