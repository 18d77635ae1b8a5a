"""Graph core: families, join, Cartesian products and cheap invariants."""
import json

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import atlas, brute_chromatic_number, from_nx, to_nx
from listcolor.errors import InvalidBipartition, InvalidParameter
from listcolor.graph import (
    CompleteBipartite,
    ExplicitBipartite,
    Graph,
    ProductGraph,
    build_family,
    cartesian_product,
    chromatic_number,
    coloring_number,
    complete,
    complete_bipartite,
    cycle,
    degeneracy_order,
    is_bipartite,
    join,
    path,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


# [TRIVIAL] family definitions
def test_complete_3_is_triangle():
    g = build_family("complete", 3)
    assert g.n == 3 and g.edge_count == 3


def test_complete_bipartite_edge_count_and_side_order():
    g = build_family("complete_bipartite", 2, 4)
    assert (g.n, g.edge_count) == (6, 8)
    assert all(g.has_edge(i, j) for i in range(2) for j in range(2, 6))
    assert not g.has_edge(0, 1)


def test_cycle_5_is_2_regular():
    g = build_family("cycle", 5)
    assert g.n == 5 and all(g.degree(v) == 2 for v in range(5))


@pytest.mark.parametrize("kind,sizes", [("complete", (0,)), ("path", (0,)), ("complete_bipartite", (0, 3)),
                                        ("cycle", (2,)), ("nonsense", (3,)), ("complete", (1, 2))])
def test_bad_family_parameters(kind, sizes):
    with pytest.raises(InvalidParameter):
        build_family(kind, *sizes)


def test_graph_rejects_loops_and_asymmetry():
    with pytest.raises(InvalidParameter):
        Graph(2, (0b01, 0b00))
    with pytest.raises(InvalidParameter):
        Graph(2, (0b10, 0b00))
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(0, 0)])


# [TRIVIAL] joins
def test_join_with_k1_is_k3():
    assert nx.is_isomorphic(to_nx(join(complete(2), complete(1))), nx.complete_graph(3))


def test_join_c5_k1_edge_count():
    g = join(cycle(5), complete(1))
    assert (g.n, g.edge_count) == (6, 10)


def test_join_k2_k2_is_k4():
    assert join(complete(2), complete(2)).is_complete()


@given(graphs(5), graphs(5))
def test_join_edge_count(g, h):
    j = join(g, h)
    assert j.edge_count == g.edge_count + h.edge_count + g.n * h.n


# [DERIVED] products against networkx.cartesian_product as an independent oracle
def test_k2_times_k11_is_c4():
    p = cartesian_product(complete(2), CompleteBipartite(1, 1))
    assert p.base.is_cycle() and p.base.n == 4


def test_k3_times_k21_keeps_copies():
    p = cartesian_product(complete(3), CompleteBipartite(2, 1))
    assert p.base.n == 9
    for block in [p.u_copy(0), p.u_copy(1), p.w_copy(0)]:
        assert p.base.induced_subgraph(list(block)).is_complete()


def test_c5_times_star_has_chromatic_number_3():
    p = cartesian_product(cycle(5), CompleteBipartite(1, 6))
    assert p.base.n == 35
    assert chromatic_number(p.base) == 3


@pytest.mark.parametrize("g", [complete(3), cycle(5), path(4), complete_bipartite(2, 2)])
@pytest.mark.parametrize("a,b", [(1, 1), (1, 3), (2, 2), (3, 1)])
def test_product_matches_networkx(g, a, b):
    p = cartesian_product(g, CompleteBipartite(a, b))
    oracle = nx.cartesian_product(to_nx(g), nx.complete_bipartite_graph(a, b))
    assert nx.is_isomorphic(to_nx(p.base), oracle)
    assert p.base.n == g.n * (a + b)
    # coordinates: the product rule, vertex by vertex
    h = complete_bipartite(a, b)
    for x in range(p.base.n):
        for y in range(p.base.n):
            (i, hx), (j, hy) = p.coord_of(x), p.coord_of(y)
            expected = (i == j and h.has_edge(hx, hy)) or (hx == hy and g.has_edge(i, j))
            assert p.base.has_edge(x, y) == expected


def test_explicit_bipartite_product():
    h = cycle(4)
    p = cartesian_product(complete(2), ExplicitBipartite(h, (0, 2), (1, 3)))
    assert nx.is_isomorphic(to_nx(p.base), nx.cartesian_product(nx.complete_graph(2), nx.cycle_graph(4)))
    assert p.w_neighbors(0) == [0, 1]


@pytest.mark.parametrize("A,B", [((0, 1), (2, 3)), ((0, 2), (1,)), ((), (0, 1, 2, 3))])
def test_invalid_bipartition(A, B):
    with pytest.raises(InvalidBipartition):
        cartesian_product(complete(2), ExplicitBipartite(cycle(4), A, B))


def test_w_copy_range_check():
    p = cartesian_product(complete(2), CompleteBipartite(1, 2))
    with pytest.raises(InvalidParameter):
        p.w_copy(2)


def test_product_json_round_trip():
    p = cartesian_product(cycle(5), CompleteBipartite(2, 3))
    again = ProductGraph.from_json(json.loads(json.dumps(p.to_json())))
    assert again.base == p.base
    q = cartesian_product(complete(2), ExplicitBipartite(cycle(4), (0, 2), (1, 3)))
    assert ProductGraph.from_json(q.to_json()).base == q.base


def test_truncate_drops_last_copies():
    p = cartesian_product(complete(3), CompleteBipartite(2, 5))
    t = p.truncate(3)
    assert t.b == 3
    assert t.base == p.base.induced_subgraph(range(t.base.n))


@given(graphs())
def test_graph_json_round_trip(g):
    assert Graph.from_json(json.loads(g.dumps())) == g


# [DERIVED] colouring number against networkx core numbers (degeneracy = max core number)
@given(graphs(8))
def test_coloring_number_matches_core_number(g):
    cores = nx.core_number(to_nx(g))
    assert coloring_number(g) == max(cores.values()) + 1


@given(graphs(8))
def test_degeneracy_order_bounds_back_degree(g):
    order, degen = degeneracy_order(g)
    assert sorted(order) == list(range(g.n))
    placed = set()
    for v in reversed(order):
        assert sum(1 for u in g.neighbors(v) if u in placed) <= degen
        placed.add(v)


# [DERIVED] chromatic number and bipartiteness against brute force / networkx
def test_chromatic_number_on_atlas():
    for g in atlas(6, connected=False):
        assert chromatic_number(g) == brute_chromatic_number(g)


@given(graphs(8))
def test_is_bipartite_matches_networkx(g):
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert sorted(map(sorted, g.components())) == [[0, 1], [2, 3], [4]]
    assert not g.is_connected() and cycle(6).is_connected()


def test_from_nx_helper_round_trip():
    assert from_nx(to_nx(cycle(7))) == cycle(7)
