"""Chromatic polynomials, colouring counts and the P_l = P threshold."""
import math

import pytest
from hypothesis import given, strategies as st

from conftest import atlas, brute_colorings
from listcolor.chromatic import (
    IntegerPolynomial,
    PlqThreshold,
    chromatic_polynomial,
    count_k_colorings,
    plq_equals_p_threshold,
)
from listcolor.errors import BudgetExceeded, PreconditionError
from listcolor.graph import Graph, complete, cycle, empty, join, path


# [DERIVED] deletion-contraction against the independent counting backtracker
def test_polynomial_matches_counts_on_atlas():
    for g in atlas(7, connected=False):
        p = chromatic_polynomial(g)
        assert p.has_chromatic_shape(g.n)
        for k in range(7):
            assert p(k) == count_k_colorings(g, k)


@given(st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7)).filter(lambda e: e[0] < e[1]), max_size=28))
def test_polynomial_matches_counts_on_eight_vertices(edges):
    g = Graph.from_edges(8, edges)
    p = chromatic_polynomial(g)
    for k in range(7):
        assert p(k) == count_k_colorings(g, k)


@pytest.mark.parametrize("k", range(5))
def test_count_matches_brute_force(k):
    for g in atlas(5, connected=False):
        assert count_k_colorings(g, k) == len(brute_colorings(g, [range(k)] * g.n))


# [PAPER] closed forms for cycles and complete graphs
@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_formula(n):
    p = chromatic_polynomial(cycle(n))
    for k in range(7):
        assert p(k) == (k - 1) ** n + (-1) ** n * (k - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_complete_formula(n):
    p = chromatic_polynomial(complete(n))
    assert p == IntegerPolynomial.falling_factorial(n)
    assert p(n + 2) == math.perm(n + 2, n)


# [TRIVIAL] standard identities
def test_tree_and_edgeless():
    assert chromatic_polynomial(path(5)) == IntegerPolynomial((0, 1)) * IntegerPolynomial((-1, 1)) ** 4
    assert chromatic_polynomial(empty(4)) == IntegerPolynomial.monomial(4)


def test_join_with_vertex_multiplies_shift():
    # P(G v K1, k) = k * P(G, k - 1)
    g = cycle(5)
    p, q = chromatic_polynomial(join(g, complete(1))), chromatic_polynomial(g)
    for k in range(1, 7):
        assert p(k) == k * q(k - 1)


def test_disconnected_product():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert chromatic_polynomial(g) == chromatic_polynomial(complete(2)) * chromatic_polynomial(complete(3))


def test_polynomial_budget():
    with pytest.raises(BudgetExceeded):
        chromatic_polynomial(join(cycle(5), cycle(4)), budget=1)


def test_polynomial_arithmetic_and_printing():
    p = IntegerPolynomial((0, 4, -10, 10, -5, 1))
    assert str(p) == "k^5 - 5*k^4 + 10*k^3 - 10*k^2 + 4*k"
    assert (p - p) == IntegerPolynomial((0,))
    assert str(IntegerPolynomial((0,))) == "0"
    assert IntegerPolynomial((3, 0, 0)).degree == 0


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       st.integers(-4, 4))
def test_polynomial_ring_ops_evaluate_pointwise(a, b, k):
    p, q = IntegerPolynomial(tuple(a)), IntegerPolynomial(tuple(b))
    assert (p + q)(k) == p(k) + q(k)
    assert (p * q)(k) == p(k) * q(k)
    assert (p ** 2)(k) == p(k) ** 2


# [PAPER] threshold k > (m - 1) / ln(1 + sqrt 2)
def test_threshold_values():
    t = plq_equals_p_threshold(cycle(5))  # m = 5
    assert t.m_minus_one == 4
    assert abs(t.value - 4 / math.log(1 + math.sqrt(2))) < 1e-12
    assert t.smallest_admitted() == 5
    assert t.admits(5) and not t.admits(4)


@pytest.mark.parametrize("m_minus_one", range(0, 60))
def test_smallest_admitted_is_least(m_minus_one):
    t = PlqThreshold(m_minus_one)
    k = t.smallest_admitted()
    assert k * math.log(1 + math.sqrt(2)) > m_minus_one
    assert k == 1 or (k - 1) * math.log(1 + math.sqrt(2)) <= m_minus_one


def test_threshold_rejects_disconnected():
    with pytest.raises(PreconditionError):
        plq_equals_p_threshold(empty(3))
