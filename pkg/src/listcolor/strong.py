"""Strong chromatic-choosability.

A graph M with chi(M) = k is *strongly k-chromatic-choosable* when every
(k-1)-assignment without a proper colouring gives the same list to every
vertex.  Constant (k-1)-assignments are never colourable, so the property
says those are the only obstructions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .choosability import (
    AssignmentEnumerator,
    DEFAULT_BUDGET,
    INCONCLUSIVE,
    NOT_CHOOSABLE,
    _solve,
    is_k_choosable,
)
from .errors import BudgetExceeded, InvalidParameter, PreconditionError
from .graph import Graph, chromatic_number, complete, join
from .lists import ListAssignment, is_l_colorable

STRONG = "strongly-cc"
NOT_STRONG = "not-strongly-cc"


@dataclass
class StrongCcCertificate:
    verdict: str
    chromatic_number: int
    counterexample: ListAssignment | None = None
    nodes_explored: int = 0
    method: str = "search"

    @property
    def strong(self) -> bool | None:
        return {STRONG: True, NOT_STRONG: False}.get(self.verdict)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "chromatic_number": self.chromatic_number,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "nodes_explored": self.nodes_explored,
            "method": self.method,
        }


def _check_counterexample(m: Graph, lists: ListAssignment, k: int) -> ListAssignment:
    assert lists.size == k - 1 and not lists.is_constant(), "counterexample has the wrong shape"
    assert not is_l_colorable(m, lists)[0], "counterexample failed independent verification"
    return lists


def _refute_by_deletion(m: Graph, k: int, budget, workers) -> tuple[StrongCcCertificate | None, int]:
    """If some M - v is not (k-1)-choosable, its bad assignment plus any list
    at v is a counterexample; pick the list at v so the result is not constant."""
    nodes = 0
    for v in range(m.n):
        rest = [u for u in range(m.n) if u != v]
        cert = is_k_choosable(m.induced_subgraph(rest), k - 1, budget, workers=workers)
        nodes += cert.nodes_explored
        if cert.verdict != NOT_CHOOSABLE:
            continue
        sub = cert.witness.lists
        if len(set(sub)) == 1:
            top = max(sub[0]) + 1
            at_v = frozenset(range(top, top + k - 1))
        else:
            at_v = sub[0]
        full = list(sub)
        full.insert(v, at_v)
        lists = _check_counterexample(m, ListAssignment(tuple(full)), k)
        return StrongCcCertificate(NOT_STRONG, k, lists, nodes, "vertex-deletion"), nodes
    return None, nodes


def _universal_vertex(m: Graph) -> int | None:
    for v in range(m.n):
        if m.degree(v) == m.n - 1:
            return v
    return None


def is_strongly_chromatic_choosable(m: Graph, budget: int | None = DEFAULT_BUDGET, *,
                                    reductions: bool = True,
                                    workers: int = 1) -> StrongCcCertificate:
    """Certify or refute strong chi(m)-chromatic-choosability of a connected graph.

    With ``reductions`` on, two shortcuts run before the direct search:

    * if some M - v is not (k-1)-choosable, M is refuted at once;
    * if v is adjacent to everything and M - v is connected and strongly
      (k-1)-chromatic-choosable, so is M (a non-colourable (k-1)-assignment
      on M must, for every colour a at v, leave M - v uncolourable from the
      lists with a removed, which forces every list to equal L(v)).

    Otherwise every canonical non-constant (k-1)-assignment is searched for
    one without a proper colouring.
    """
    if not m.is_connected():
        raise PreconditionError("strong chromatic-choosability is only checked on connected graphs")
    k = chromatic_number(m)
    if m.n == 1:
        return StrongCcCertificate(STRONG, 1, method="single-vertex")
    # a constant (k-1)-assignment is never colourable, so the property cannot hold vacuously
    assert not is_l_colorable(m, ListAssignment.constant(m.n, k - 1))[0]
    nodes = 0
    try:
        if reductions:
            refuted, nodes = _refute_by_deletion(m, k, budget, workers)
            if refuted is not None:
                return refuted
            v = _universal_vertex(m)
            if v is not None:
                sub = m.remove_vertex(v)
                if sub.is_connected():
                    inner = is_strongly_chromatic_choosable(sub, budget, reductions=True, workers=workers)
                    nodes += inner.nodes_explored
                    if inner.verdict == STRONG:
                        return StrongCcCertificate(STRONG, k, None, nodes, "universal-vertex")
        found, lists, searched, _ = _solve(m, k - 1, "exists", budget=budget,
                                           nonconstant=True, workers=workers)
    except BudgetExceeded as exc:
        return StrongCcCertificate(INCONCLUSIVE, k, None, nodes + exc.explored, "search")
    nodes += searched
    if not found:
        return StrongCcCertificate(STRONG, k, None, nodes, "search")
    witness = _check_counterexample(m, ListAssignment(tuple(lists)).canonical(), k)
    return StrongCcCertificate(NOT_STRONG, k, witness, nodes, "search")


@dataclass
class ExtensionCheck:
    holds: bool
    checked: int
    counterexample: tuple | None = None  # (assignment, vertex, colour)

    def __bool__(self):
        return self.holds


def _extends_everywhere(m: Graph, lists: ListAssignment):
    for v in range(m.n):
        for alpha in sorted(lists[v]):
            pinned = list(lists.lists)
            pinned[v] = frozenset((alpha,))
            if not is_l_colorable(m, ListAssignment(tuple(pinned)))[0]:
                return v, alpha
    return None


def check_extension_property(m: Graph, list_size: int, trials: int = 200, seed: int = 0, *,
                             exhaustive_limit: int = 2000,
                             budget: int | None = DEFAULT_BUDGET) -> ExtensionCheck:
    """Check that in every ``list_size``-assignment each (vertex, colour) pair
    extends to a proper colouring.

    The first ``exhaustive_limit`` canonical assignments are checked in order,
    then ``trials`` random assignments over a palette of ``list_size + n``
    colours drawn from ``random.Random(seed)``.
    """
    cert = is_strongly_chromatic_choosable(m, budget)
    if cert.verdict != STRONG:
        raise PreconditionError(f"graph is not certified strongly chromatic-choosable ({cert.verdict})")
    if list_size < cert.chromatic_number:
        raise InvalidParameter("list size must be at least the chromatic number")
    checked = 0
    for lists in AssignmentEnumerator(m, list_size):
        if checked >= exhaustive_limit:
            break
        checked += 1
        bad = _extends_everywhere(m, lists)
        if bad is not None:
            return ExtensionCheck(False, checked, (lists, *bad))
    rng = random.Random(seed)
    palette = range(list_size + m.n)
    for _ in range(trials):
        lists = ListAssignment(tuple(frozenset(rng.sample(palette, list_size)) for _ in range(m.n)))
        checked += 1
        bad = _extends_everywhere(m, lists)
        if bad is not None:
            return ExtensionCheck(False, checked, (lists, *bad))
    return ExtensionCheck(True, checked)


def join_preserves_strong_cc(m: Graph, p: int, budget: int | None = DEFAULT_BUDGET) -> bool | None:
    """Re-certify ``join(m, K_p)`` at chi(m) + p by direct search.

    Returns True when it is certified strongly chromatic-choosable with the
    expected chromatic number, False when refuted, None when out of budget.
    """
    if p < 1:
        raise InvalidParameter("p must be positive")
    base = is_strongly_chromatic_choosable(m, budget)
    if base.verdict != STRONG:
        raise PreconditionError(f"graph is not certified strongly chromatic-choosable ({base.verdict})")
    joined = is_strongly_chromatic_choosable(join(m, complete(p)), budget, reductions=False)
    if joined.verdict == INCONCLUSIVE:
        return None
    return joined.verdict == STRONG and joined.chromatic_number == base.chromatic_number + p
