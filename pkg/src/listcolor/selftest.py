"""Quick end-to-end checks behind ``listcolor selftest``."""
from __future__ import annotations

import random

from .choosability import list_chromatic_number, list_color_function
from .chromatic import chromatic_polynomial, count_k_colorings
from .gadgets import construct_bad_assignment, count_bad_colorings_for_copy, verify_noncolorable_by_bad_colorings
from .graph import CompleteBipartite, cartesian_product, complete, complete_bipartite, cycle, join
from .lists import ListAssignment, is_l_colorable
from .strong import is_strongly_chromatic_choosable


def _tightness_count() -> int:
    p = cartesian_product(complete(3), CompleteBipartite(3, 1))
    lists = [None] * p.base.n
    for i in range(3):
        lists[p.w_index(i, 0)] = {1, 2, 3, 4, 5}
    rows = {(0, 0): 0, (2, 1): 0, (1, 2): 0, (1, 0): 1, (0, 1): 1, (2, 2): 1, (2, 0): 2, (1, 1): 2, (0, 2): 2}
    blocks = [{1, 2, 6, 7, 8}, {3, 4, 9, 10, 11}, {5, 12, 13, 14, 15}]
    for (i, j), blk in rows.items():
        lists[p.u_index(i, j)] = blocks[blk]
    return count_bad_colorings_for_copy(p, ListAssignment.from_lists(lists), require_disjoint=True)


def _random_agreement(seed: int, trials: int = 20) -> bool:
    rng = random.Random(seed)
    p = cartesian_product(complete(2), CompleteBipartite(1, 2))
    for _ in range(trials):
        lists = ListAssignment(tuple(frozenset(rng.sample(range(4), 2)) for _ in range(p.base.n)))
        by_copies = verify_noncolorable_by_bad_colorings(p, lists).noncolorable
        if by_copies == is_l_colorable(p.base, lists)[0]:
            return False
    return True


def run_checks(seed: int = 0) -> list[tuple[str, bool, str]]:
    checks = []

    def check(name, thunk, expected):
        try:
            got = thunk()
        except Exception as exc:  # report, don't abort the remaining checks
            checks.append((name, False, f"{type(exc).__name__}: {exc}"))
            return
        checks.append((name, got == expected, f"got {got!r}, expected {expected!r}"))

    check("chi_l(K_{2,3}) = 2", lambda: list_chromatic_number(complete_bipartite(2, 3)), 2)
    check("chi_l(K_{2,4}) = 3", lambda: list_chromatic_number(complete_bipartite(2, 4)), 3)
    check("P(C_5, 3) matches counting", lambda: chromatic_polynomial(cycle(5))(3), count_k_colorings(cycle(5), 3))
    check("P_l(C_4, 2) = 2 by search", lambda: list_color_function(cycle(4), 2, method="search").value, 2)
    check("join(K_2, C_5) strongly chromatic-choosable",
          lambda: is_strongly_chromatic_choosable(join(complete(2), cycle(5))).verdict, "strongly-cc")
    check("K_2 construction is non-colourable", lambda: verify_noncolorable_by_bad_colorings(
        *(lambda c: (c.product, c.assignment))(construct_bad_assignment(complete(2), 1))).verdict, "noncolorable")
    check("tightness instance has 4 bad colourings", _tightness_count, 4)
    check("bad-colouring verdict agrees with direct solver", lambda: _random_agreement(seed), True)
    return checks
