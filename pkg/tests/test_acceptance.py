"""Acceptance run: eleven end-to-end checks, each against a wall-clock limit.

Every check prints one ``ACCEPT <n> PASS|FAIL`` line (visible with ``-s`` or
``-v``) before asserting.
"""
import io
import json
import random
import time

import pytest

from conftest import atlas
from listcolor.chromatic import chromatic_polynomial
from listcolor.choosability import list_chromatic_number, list_color_function
from listcolor.cli import main
from listcolor.gadgets import (
    borowiecki_product_bound,
    construct_bad_assignment,
    count_bad_colorings_for_copy,
    fa_bounds,
    verify_noncolorable_by_bad_colorings,
)
from listcolor.graph import (
    CompleteBipartite,
    Graph,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    join,
    path,
)
from listcolor.lists import ListAssignment, is_l_colorable
from listcolor.strong import is_strongly_chromatic_choosable


@pytest.fixture
def accept(capsys):
    """Time the body, print the verdict line, then fail if over the limit."""

    class Run:
        def __init__(self):
            self.start = time.perf_counter()

        def done(self, number, title, ok, limit, detail=""):
            elapsed = time.perf_counter() - self.start
            ok = ok and elapsed < limit
            with capsys.disabled():
                print(f"\nACCEPT {number:>2} {'PASS' if ok else 'FAIL'}  {title}  "
                      f"({elapsed:.2f}s of {limit}s){'  ' + detail if detail else ''}")
            assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"

    return Run()


def cli_json(*argv):
    out = io.StringIO()
    code = main([*argv, "--format", "json"], stdout=out, stderr=io.StringIO())
    return code, json.loads(out.getvalue())


def count_by_backtracking(g: Graph, k: int) -> int:
    """Proper k-colourings counted one vertex at a time, no library code."""
    colour = [None] * g.n

    def rec(v):
        if v == g.n:
            return 1
        used = {colour[u] for u in g.neighbors(v) if u < v}
        total = 0
        for c in range(k):
            if c not in used:
                colour[v] = c
                total += rec(v + 1)
        colour[v] = None
        return total

    return rec(0)


def random_disjoint(rng, p, size, palette, aimed):
    """Pairwise disjoint u-lists per G-vertex; aimed w-lists reuse one colour
    from each of them plus a shared block, the shape that can go bad."""
    lists = [None] * p.base.n
    for i in range(p.n):
        colours = rng.sample(range(palette), size * p.a)
        for j in range(p.a):
            lists[p.u_index(i, j)] = colours[j * size:(j + 1) * size]
    common = list(range(palette, palette + size - p.a))
    for i, v in enumerate(p.w_copy(0)):
        if aimed:
            lists[v] = [rng.choice(lists[p.u_index(i, j)]) for j in range(p.a)] + common
        else:
            lists[v] = rng.sample(range(palette), size)
    return ListAssignment.from_lists(lists)


def test_criterion_01_complete_bipartite_threshold(accept):
    got = {b: cli_json("chi-list", f"KB(2,{b})") for b in (1, 2, 3, 4)}
    ok = all(code == 0 for code, _ in got.values())
    values = {b: r["list_chromatic_number"] for b, (_, r) in got.items()}
    ok = ok and values == {1: 2, 2: 2, 3: 2, 4: 3}
    accept.done(1, "chi_l(K_{2,b}) = 2 for b <= 3, 3 for b = 4", ok, 120, str(values))
    assert ok


def test_criterion_02_polynomial_matches_counting(accept):
    graphs = atlas(7, connected=True)
    bad = [(g.edges(), k) for g in graphs for k in range(6)
           if chromatic_polynomial(g)(k) != count_by_backtracking(g, k)]
    accept.done(2, "P(G, k) equals counted colourings", not bad, 300,
                f"{len(graphs)} graphs x 6 values, {len(bad)} mismatches")
    assert not bad


def test_criterion_03_list_colour_function_closed_forms(accept):
    cases = {(cycle(3), 2): 0, (cycle(4), 2): 2, (cycle(5), 2): 0, (complete(3), 3): 6}
    got = {(g.n, k): list_color_function(g, k, method="search").value for (g, k) in cases}
    want = {(g.n, k): v for (g, k), v in cases.items()}
    ok = got == want
    accept.done(3, "P_l closed forms by search", ok, 600, str(got))
    assert ok


def test_criterion_04_f1_of_k2(accept):
    code, report = cli_json("chi-list", "cart(K2,KB(1,1))")
    part_i = code == 0 and report["list_chromatic_number"] == 2
    built = construct_bad_assignment(complete(2), 1)
    verdict = verify_noncolorable_by_bad_colorings(built.product, built.assignment)
    direct = is_l_colorable(built.product.base, built.assignment)[0]
    part_ii = built.b == 2 and verdict.noncolorable and built.product.base.n == 6 and not direct
    product = cartesian_product(complete(2), CompleteBipartite(1, 2))
    part_iii = (borowiecki_product_bound(complete(2), complete_bipartite(1, 2)) == 3
                and list_chromatic_number(product.base) == 3)
    ok = part_i and part_ii and part_iii
    accept.done(4, "f_1(K_2) = 2", ok, 60, f"(i) {part_i} (ii) {part_ii} (iii) {part_iii}")
    assert ok


def test_criterion_05_construction_at_scale(accept):
    built = construct_bad_assignment(complete(3), 2)
    verdict = verify_noncolorable_by_bad_colorings(built.product, built.assignment)
    ok = (built.b == 576 and built.product.base.n == 1734 and verdict.noncolorable
          and verdict.u_colorings == 576 and verdict.checks == 576)
    accept.done(5, "K_3, a = 2: b = 576, 1734 vertices, non-colourable", ok, 30,
                f"b={built.b} n={built.product.base.n} checks={verdict.checks}")
    assert ok


def test_criterion_06_one_copy_removed(accept):
    built = construct_bad_assignment(complete(3), 2)
    p = built.product.truncate(575)
    lists = built.assignment.restrict(range(p.base.n))
    verdict = verify_noncolorable_by_bad_colorings(p, lists)
    ok = (not verdict.noncolorable and verdict.witness is not None
          and verdict.witness.is_proper_l_coloring(p.base, lists))
    accept.done(6, "b = 575 truncation is colourable", ok, 30,
                f"witness from u-colouring {verdict.survivor}")
    assert ok


def test_criterion_07_tightness_instance(accept):
    p = cartesian_product(complete(3), CompleteBipartite(3, 1))
    lists = [None] * p.base.n
    for i in range(3):
        lists[p.w_index(i, 0)] = {1, 2, 3, 4, 5}
    # (vertex, u-copy) -> list, 0-based
    placement = {
        (0, 0): {1, 2, 6, 7, 8}, (2, 1): {1, 2, 6, 7, 8}, (1, 2): {1, 2, 6, 7, 8},
        (1, 0): {3, 4, 9, 10, 11}, (0, 1): {3, 4, 9, 10, 11}, (2, 2): {3, 4, 9, 10, 11},
        (2, 0): {5, 12, 13, 14, 15}, (1, 1): {5, 12, 13, 14, 15}, (0, 2): {5, 12, 13, 14, 15},
    }
    for (i, j), colours in placement.items():
        lists[p.u_index(i, j)] = colours
    count = count_bad_colorings_for_copy(p, ListAssignment.from_lists(lists), require_disjoint=True)
    accept.done(7, "K_3 x K_{3,1} instance has exactly 4 bad colourings", count == 4, 1, f"count={count}")
    assert count == 4


def test_criterion_08_bad_colouring_bounds(accept):
    rng = random.Random(8)
    p3 = cartesian_product(complete(3), CompleteBipartite(2, 1))
    p2 = cartesian_product(complete(2), CompleteBipartite(2, 1))
    first = [count_bad_colorings_for_copy(p3, random_disjoint(rng, p3, 4, 9, t % 2 == 0), True)
             for t in range(200)]
    second = [count_bad_colorings_for_copy(p2, random_disjoint(rng, p2, 3, 7, t % 2 == 0), True)
              for t in range(200)]
    violations = sum(c > 1 for c in first) + sum(c > 2 for c in second)
    accept.done(8, "bad-colouring counts within 1 and 2^(k-1)", violations == 0, 120,
                f"max {max(first)} and {max(second)}, nonzero {sum(map(bool, first))}/{sum(map(bool, second))}")
    assert violations == 0


def test_criterion_09_strong_classification(accept):
    strong = {"K2": complete(2), "C3": cycle(3), "C5": cycle(5), "C7": cycle(7), "K4": complete(4),
              "join(K2,C5)": join(complete(2), cycle(5))}
    weak = {"C4": cycle(4), "P3": path(3), "P4": path(4), "K_{2,3}": complete_bipartite(2, 3)}
    verdicts = {name: is_strongly_chromatic_choosable(g).verdict for name, g in {**strong, **weak}.items()}
    ok = (all(verdicts[n] == "strongly-cc" for n in strong)
          and all(verdicts[n] == "not-strongly-cc" for n in weak))
    accept.done(9, "strong chromatic-choosability classification", ok, 600,
                ", ".join(f"{n}:{'Y' if v == 'strongly-cc' else 'N'}" for n, v in verdicts.items()))
    assert ok


def test_criterion_10_bound_ordering(accept):
    graphs = [g for g in atlas(5, connected=False) if g.edges()]
    failures = []
    for g in graphs:
        for a in (1, 2):
            r = fa_bounds(g, a)
            if not (r.upper < r.borowiecki and 1 <= r.lower <= r.upper):
                failures.append((g.edges(), a))
    accept.done(10, "P_l power bound below the Borowiecki bound; lower <= upper", not failures, 300,
                f"{len(graphs)} graphs x 2 values of a")
    assert not failures


def test_criterion_11_bad_colouring_equivalence(accept):
    rng = random.Random(11)
    p = cartesian_product(complete(2), CompleteBipartite(1, 2))
    disagreements = noncolourable = 0
    for _ in range(200):
        lists = ListAssignment(tuple(frozenset(rng.sample(range(3), 2)) for _ in range(p.base.n)))
        by_copies = verify_noncolorable_by_bad_colorings(p, lists).noncolorable
        direct = not is_l_colorable(p.base, lists)[0]
        disagreements += by_copies != direct
        noncolourable += direct
    accept.done(11, "bad-colouring verdict equals the direct solver", disagreements == 0, 60,
                f"{noncolourable}/200 non-colourable")
    assert disagreements == 0
