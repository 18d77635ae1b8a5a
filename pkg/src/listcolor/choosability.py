"""Choosability, list chromatic number, and the list colour function P_l(G, k).

All searches range over k-assignments up to renaming of colours.  The
workhorse is :class:`listcolor._frontier.FrontierSearch`; the plain
restricted-growth enumerator :class:`AssignmentEnumerator` is kept as an
independent oracle and for exhaustive sampling.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import chain
from typing import Iterator

from ._frontier import FrontierSearch, _choices, frontier_order
from .chromatic import chromatic_polynomial, plq_equals_p_threshold
from .errors import BudgetExceeded, InvalidParameter
from .graph import Graph, chromatic_number, coloring_number, iter_bits
from .lists import ListAssignment, count_l_colorings, is_l_colorable

DEFAULT_BUDGET = 5_000_000

CHOOSABLE = "k-choosable"
NOT_CHOOSABLE = "not-k-choosable"
INCONCLUSIVE = "budget-exceeded"


@dataclass
class AssignmentEnumerator:
    """Canonical k-assignments of a graph: colours are introduced in first-use
    order, so every k-assignment is reached exactly once up to renaming.

    With the default ``palette_bound = k * n`` nothing is lost, since no
    k-assignment on n vertices needs more colours.
    """

    graph: Graph
    k: int
    palette_bound: int | None = None
    budget: int | None = None
    order: list | None = None
    explored: int = field(default=0, init=False)

    def __post_init__(self):
        if self.k < 1:
            raise InvalidParameter("list size must be positive")
        if self.palette_bound is None:
            self.palette_bound = self.k * self.graph.n
        if self.palette_bound < self.k:
            raise InvalidParameter("palette bound must be at least k")
        if self.order is None:
            self.order = list(range(self.graph.n))

    def __iter__(self) -> Iterator[ListAssignment]:
        n, k = self.graph.n, self.k
        lists: list = [None] * n
        self.explored = 0

        def rec(i: int, used: int):
            if i == n:
                self.explored += 1
                if self.budget is not None and self.explored > self.budget:
                    raise BudgetExceeded("assignment enumeration exceeded its budget",
                                         explored=self.explored - 1)
                yield ListAssignment(tuple(lists))
                return
            for combo in _choices(used, k, self.palette_bound - used):
                lists[self.order[i]] = frozenset(combo)
                yield from rec(i + 1, max(used, combo[-1] + 1))

        yield from rec(0, 0)


@dataclass
class ChoosabilityCertificate:
    verdict: str
    k: int
    witness: ListAssignment | None = None
    nodes_explored: int = 0

    @property
    def choosable(self) -> bool | None:
        return {CHOOSABLE: True, NOT_CHOOSABLE: False}.get(self.verdict)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "k": self.k,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "nodes_explored": self.nodes_explored,
        }


@dataclass
class ListColorResult:
    value: int
    assignment: ListAssignment
    path: str
    nodes_explored: int = 0

    def to_json(self) -> dict:
        return {"value": self.value, "assignment": self.assignment.to_json(),
                "path": self.path, "nodes_explored": self.nodes_explored}


def k_core(g: Graph, k: int) -> list[int]:
    """Vertices left after repeatedly deleting vertices of degree < k.

    A deleted vertex always has a free colour in any k-list once its
    surviving neighbours are coloured, so G is k-choosable iff its k-core is.
    """
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (g.adj[v] & alive).bit_count() < k:
                alive &= ~(1 << v)
                changed = True
    return list(iter_bits(alive))


def alon_tarsi_certifies(g: Graph, k: int, limit: int = 200_000) -> bool:
    """Sufficient test for k-choosability through the graph polynomial.

    Expands prod over edges uv (u < v) of (x_u - x_v), discarding monomials
    with an exponent above k - 1.  If some monomial survives with nonzero
    coefficient, the Combinatorial Nullstellensatz gives a proper colouring
    from any lists of size k.  Returns False when no such monomial exists or
    when more than ``limit`` monomials would have to be tracked.
    """
    edges = g.edges()
    if len(edges) > g.n * (k - 1):
        return False
    # process edges vertex by vertex so monomials stay few
    order = frontier_order(g)
    rank = {v: i for i, v in enumerate(order)}
    edges.sort(key=lambda e: max(rank[e[0]], rank[e[1]]))
    poly = {(0,) * g.n: 1}
    cap = k - 1
    for u, v in edges:
        nxt: dict = {}
        for mono, coeff in poly.items():
            if mono[u] < cap:
                m = mono[:u] + (mono[u] + 1,) + mono[u + 1:]
                nxt[m] = nxt.get(m, 0) + coeff
            if mono[v] < cap:
                m = mono[:v] + (mono[v] + 1,) + mono[v + 1:]
                nxt[m] = nxt.get(m, 0) - coeff
        poly = {m: c for m, c in nxt.items() if c}
        if not poly or len(poly) > limit:
            return False
    return True


# ---------------------------------------------------------------------------
# sharded execution


def _shard_job(args):
    g, k, order, palette_bound, budget, nonconstant, kind, shard, bound = args
    search = FrontierSearch(g, k, order=order, palette_bound=palette_bound, budget=budget,
                            nonconstant=nonconstant)
    return _run_shard(search, kind, shard, bound)


def _run_shard(search: FrontierSearch, kind: str, shard: int, bound=float("inf")):
    """Solve the subtree where the second vertex takes its ``shard``-th canonical list.

    For ``minimum`` only values below ``bound`` count; anything else comes
    back as ``bound`` with no witness.
    """
    lists, table, flag = search._root()
    level0 = list(search._children(0, lists, table, flag, kind == "minimum"))
    _, l1, t1, f1, _ = level0[0]
    children = list(search._children(1, l1, t1, f1, kind == "minimum"))
    _, cl, ct, cf, _ = children[shard]
    if kind == "minimum":
        value = search._min(2, cl, ct, bound)
        if value >= bound:
            return bound, search.nodes, None
    else:
        value = search._exists_from(2, cl, ct, cf)
    witness = None
    if kind == "minimum" or value:
        witness = search.witness(kind, value if kind == "minimum" else None, forced={1: shard})
    return value, search.nodes, witness


def _shard_count(search: FrontierSearch) -> int:
    lists, table, flag = search._root()
    _, l1, t1, f1, _ = next(search._children(0, lists, table, flag, False))
    return sum(1 for _ in search._children(1, l1, t1, f1, False))


def _solve(g: Graph, k: int, kind: str, *, budget, palette_bound=None, nonconstant=False,
           workers: int = 1):
    """Run a frontier query; returns (value, witness lists or None, nodes, search).

    Graphs on three or more vertices are always split into the same shards
    and the results folded in shard order, so the answer, the witness and
    the node count do not depend on ``workers``.  The budget caps the node
    total over the shards folded so far.
    """
    order = frontier_order(g)
    search = FrontierSearch(g, k, order=order, palette_bound=palette_bound, budget=budget,
                            nonconstant=nonconstant)
    if g.n < 3:
        value = search.minimum() if kind == "minimum" else search.exists()
        witness = None
        if kind == "minimum" or value:
            witness = search.witness(kind, value if kind == "minimum" else None)
        return value, witness, search.nodes, search
    job = (g, k, order, palette_bound, budget, nonconstant, kind)
    shards = _shard_count(search)
    head = []
    bound = float("inf")
    if kind == "minimum":
        # shard 0 runs alone so every later shard starts from the same bound
        head = [_shard_job((*job, 0, bound))]
        bound = head[0][0]
    jobs = [(*job, s, bound) for s in range(len(head), shards)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            value, witness, nodes = _fold(chain(head, pool.map(_shard_job, jobs)), kind, budget)
            pool.shutdown(cancel_futures=True)
    else:
        value, witness, nodes = _fold(chain(head, map(_shard_job, jobs)), kind, budget)
    return value, witness, nodes, search


def _fold(results, kind: str, budget):
    """Combine shard results in order; the lowest shard wins ties."""
    best, witness, nodes = None, None, 0
    results = iter(results)
    while True:
        try:
            value, used, shard_witness = next(results)
        except StopIteration:
            break
        except BudgetExceeded as exc:
            raise BudgetExceeded("assignment search exceeded its budget", explored=nodes + exc.explored) from None
        nodes += used
        if budget is not None and nodes > budget:
            raise BudgetExceeded("assignment search exceeded its budget", explored=nodes)
        if kind == "minimum":
            if best is None or value < best:
                best, witness = value, shard_witness
        elif value:
            return True, shard_witness, nodes
    return (best, witness, nodes) if kind == "minimum" else (False, None, nodes)


# ---------------------------------------------------------------------------
# public operations


def is_k_choosable(g: Graph, k: int, budget: int | None = DEFAULT_BUDGET, *,
                   palette_bound: int | None = None, workers: int = 1) -> ChoosabilityCertificate:
    """Decide whether every k-assignment of ``g`` admits a proper colouring.

    Running out of budget yields an ``INCONCLUSIVE`` certificate rather than
    an exception.
    """
    if k < 1:
        raise InvalidParameter("k must be positive")
    if k >= coloring_number(g):
        return ChoosabilityCertificate(CHOOSABLE, k)
    core = k_core(g, k)
    if not core:
        return ChoosabilityCertificate(CHOOSABLE, k)
    sub = g.induced_subgraph(core)
    if alon_tarsi_certifies(sub, k):
        return ChoosabilityCertificate(CHOOSABLE, k)
    try:
        found, lists, nodes, _ = _solve(sub, k, "exists", budget=budget,
                                        palette_bound=palette_bound, workers=workers)
    except BudgetExceeded as exc:
        return ChoosabilityCertificate(INCONCLUSIVE, k, nodes_explored=exc.explored)
    if not found:
        return ChoosabilityCertificate(CHOOSABLE, k, nodes_explored=nodes)
    full = [frozenset(range(k))] * g.n
    for v, L in zip(core, lists):
        full[v] = L
    witness = ListAssignment(tuple(full)).canonical()
    assert not is_l_colorable(g, witness)[0], "witness failed independent verification"
    return ChoosabilityCertificate(NOT_CHOOSABLE, k, witness, nodes)


def list_chromatic_number(g: Graph, budget: int | None = DEFAULT_BUDGET, *, workers: int = 1) -> int:
    """Smallest k for which ``g`` is k-choosable, scanning upward from chi(g)."""
    col = coloring_number(g)
    k = chromatic_number(g)
    while k < col:
        cert = is_k_choosable(g, k, budget, workers=workers)
        if cert.verdict == CHOOSABLE:
            return k
        if cert.verdict == INCONCLUSIVE:
            raise BudgetExceeded(f"could not decide {k}-choosability", explored=cert.nodes_explored,
                                 bracket=(k, col))
        k += 1
    return col


def find_noncolorable_assignment(g: Graph, k: int, budget: int | None = DEFAULT_BUDGET, *,
                                 workers: int = 1) -> ListAssignment | None:
    """A k-assignment with no proper colouring, or None when ``g`` is k-choosable."""
    if k < 0:
        raise InvalidParameter("k must be nonnegative")
    if k < chromatic_number(g):
        # constant lists below the chromatic number never colour g
        return ListAssignment.constant(g.n, k)
    cert = is_k_choosable(g, k, budget, workers=workers)
    if cert.verdict == INCONCLUSIVE:
        raise BudgetExceeded(f"could not decide {k}-choosability", explored=cert.nodes_explored)
    return cert.witness


def _closed_form(g: Graph, k: int) -> tuple[int, str] | None:
    if g.edge_count == 0:
        return k ** g.n, "closed-form-edgeless"
    if g.is_complete():
        return math.perm(k, g.n) if k >= g.n else 0, "closed-form-complete"
    if g.is_cycle():
        n = g.n
        return (k - 1) ** n + (-1) ** n * (k - 1), "closed-form-cycle"
    return None


def list_color_function(g: Graph, k: int, budget: int | None = DEFAULT_BUDGET, *,
                        method: str = "auto", palette_bound: int | None = None,
                        workers: int = 1) -> ListColorResult:
    """P_l(g, k), the fewest proper colourings over all k-assignments.

    ``method='auto'`` first tries the known closed forms (edgeless graphs,
    complete graphs, cycles) and the edge-count threshold above which
    P_l = P; these return the constant assignment as a minimiser.
    ``method='search'`` always runs the exhaustive search.
    """
    if k < 1:
        raise InvalidParameter("k must be positive")
    if method not in ("auto", "search"):
        raise InvalidParameter(f"unknown method {method!r}")
    constant = ListAssignment.constant(g.n, k)
    if method == "auto":
        closed = _closed_form(g, k)
        if closed is not None:
            return ListColorResult(closed[0], constant, closed[1])
        if g.is_connected() and plq_equals_p_threshold(g).admits(k):
            return ListColorResult(chromatic_polynomial(g)(k), constant, "wqy-threshold")
    value, lists, nodes, _ = _solve(g, k, "minimum", budget=budget, palette_bound=palette_bound,
                                    workers=workers)
    assignment = ListAssignment(tuple(lists))
    assert count_l_colorings(g, assignment) == value, "minimiser failed independent recount"
    return ListColorResult(value, assignment, "search", nodes)
