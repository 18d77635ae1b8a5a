"""Bad colourings and bad list assignments for G □ H with H bipartite.

Throughout, the product's A-side copies of G are u_1..u_a and the B-side
copies are w_1..w_b (see :class:`listcolor.graph.ProductGraph`).  Given a
proper colouring f of the u-side copies, a w-copy is *bad* for f when its
lists, minus the colours f puts on the same G-vertex in its H-neighbours,
admit no proper colouring.  The product is L-colourable exactly when some f
is bad for no w-copy.
"""
from __future__ import annotations

import math
from collections import Counter
import itertools
from dataclasses import dataclass, field

from .choosability import (
    DEFAULT_BUDGET,
    find_noncolorable_assignment,
    list_chromatic_number,
    list_color_function,
)
from .errors import BudgetExceeded, InvalidParameter, PreconditionError, SizeLimitError
from .graph import (
    CompleteBipartite,
    ExplicitBipartite,
    Graph,
    ProductGraph,
    cartesian_product,
    chromatic_number,
    coloring_number,
)
from .lists import Coloring, ListAssignment, enumerate_l_colorings, is_l_colorable
from .strong import STRONG, is_strongly_chromatic_choosable

DEFAULT_COPY_LIMIT = 10 ** 6


def _check_lists(p: ProductGraph, l: ListAssignment) -> None:
    if len(l) != p.base.n:
        raise InvalidParameter(f"assignment has {len(l)} lists, product has {p.base.n} vertices")


def _copy_lists(p: ProductGraph, l: ListAssignment, block: range) -> ListAssignment:
    return ListAssignment(tuple(l.lists[v] for v in block), reduced=True)


def _reduced(p: ProductGraph, l: ListAssignment, copies, w: int) -> ListAssignment:
    """Lists of copy w_w after removing the colours the adjacent u-copies use.

    ``copies[j]`` is the colouring (tuple indexed by G-vertex) of copy u_j.
    """
    start = p.w_copy(w).start
    js = p.w_neighbors(w)
    out = []
    for i in range(p.n):
        used = {copies[j][i] for j in js}
        out.append(l.lists[start + i] - used)
    return ListAssignment(tuple(out), reduced=True)


def _split(p: ProductGraph, f: Coloring) -> list[tuple]:
    return [tuple(f.colors[j * p.n:(j + 1) * p.n]) for j in range(p.a)]


def is_bad_coloring(p: ProductGraph, l: ListAssignment, f: Coloring, w_index: int) -> bool:
    """Whether the u-side colouring ``f`` leaves copy ``w_index`` uncolourable."""
    _check_lists(p, l)
    p.w_copy(w_index)  # range check
    if len(f) != p.a * p.n:
        raise InvalidParameter(f"expected a colouring of the {p.a * p.n} u-side vertices")
    u_graph = p.base.induced_subgraph(list(p.u_side()))
    if not f.is_proper_l_coloring(u_graph, l.restrict(list(p.u_side()))):
        raise PreconditionError("f is not a proper L-colouring of the u-side copies")
    return not is_l_colorable(p.factor_g, _reduced(p, l, _split(p, f), w_index))[0]


# ---------------------------------------------------------------------------
# verification through bad colourings


@dataclass
class BadColoringVerdict:
    """Outcome of checking every u-side colouring for a bad w-copy.

    ``bad_copy_of[d]`` is the w-copy found bad for the d-th u-side colouring
    (mixed radix, copy u_1 varying fastest).  When some colouring is bad for
    no copy, ``survivor`` is its index and ``witness`` a full proper colouring
    of the product extending it.
    """

    noncolorable: bool
    u_colorings: int
    bad_copy_of: list = field(default_factory=list)
    survivor: int | None = None
    witness: Coloring | None = None
    checks: int = 0

    @property
    def verdict(self) -> str:
        return "noncolorable" if self.noncolorable else "colorable-with-witness"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "u_colorings": self.u_colorings,
            "bad_copy_of": self.bad_copy_of,
            "survivor": self.survivor,
            "witness": None if self.witness is None else self.witness.to_json(),
            "checks": self.checks,
        }


def _per_copy_colorings(p: ProductGraph, l: ListAssignment, budget) -> list[list[tuple]]:
    out = []
    total = 1
    for j in range(p.a):
        cols = [c.colors for c in enumerate_l_colorings(p.factor_g, _copy_lists(p, l, p.u_copy(j)), budget)]
        total *= len(cols)
        if budget is not None and total > budget:
            raise BudgetExceeded("too many u-side colourings to enumerate", explored=total)
        out.append(cols)
    return out


def _tuple_of(d: int, per_copy: list[list[tuple]]) -> list[tuple]:
    out = []
    for cols in per_copy:
        d, r = divmod(d, len(cols))
        out.append(cols[r])
    return out


class _CopyIndex:
    """For each (G-vertex, colour), the w-copies listing that colour there."""

    def __init__(self, p: ProductGraph, l: ListAssignment):
        self.p = p
        self.where: dict = {}
        for w in range(p.b):
            start = p.w_copy(w).start
            for i in range(p.n):
                for c in l.lists[start + i]:
                    self.where.setdefault((i, c), []).append(w)
        self.neighbours = [frozenset(p.w_neighbors(w)) for w in range(p.b)]
        self.sizes = [[len(l.lists[p.w_copy(w).start + i]) for i in range(p.n)] for w in range(p.b)]
        self.degeneracy = coloring_number(p.factor_g) - 1
        self.short = [w for w in range(p.b) if min(self.sizes[w]) <= self.degeneracy]

    def candidates(self, copies: list[tuple]) -> list[int]:
        """w-copies that could be bad, most-hit first.

        If every reduced list still has more colours than the degeneracy of G,
        the copy colours greedily, so only copies with some short reduced list
        are returned.
        """
        p = self.p
        hits: dict = {}
        for j, col in enumerate(copies):
            for i, c in enumerate(col):
                for w in self.where.get((i, c), ()):
                    if j in self.neighbours[w]:
                        row = hits.setdefault(w, [0] * p.n)
                        row[i] += 1
        out = []
        for w, row in hits.items():
            sizes = self.sizes[w]
            if any(sizes[i] - row[i] <= self.degeneracy for i in range(p.n)):
                out.append((-sum(row), w))
        # copies no colour hits keep their full lists, which may already be too short
        for w in self.short:
            if w not in hits:
                out.append((0, w))
        out.sort()
        return [w for _, w in out]


def verify_noncolorable_by_bad_colorings(p: ProductGraph, l: ListAssignment,
                                         budget: int | None = DEFAULT_BUDGET) -> BadColoringVerdict:
    """Decide L-colourability of the product copy by copy.

    Every proper colouring of the u-side is a choice of one proper colouring
    per u-copy, so these are enumerated factorwise.  Each is matched with a
    w-copy it makes uncolourable; the first one with no such copy is extended
    to a full colouring of the product, which is checked before returning.
    """
    _check_lists(p, l)
    per_copy = _per_copy_colorings(p, l, budget)
    total = math.prod(len(c) for c in per_copy)
    index = _CopyIndex(p, l)
    bad_copy_of = []
    checks = 0
    for d in range(total):
        copies = _tuple_of(d, per_copy)
        found = None
        for w in index.candidates(copies):
            checks += 1
            if not is_l_colorable(p.factor_g, _reduced(p, l, copies, w))[0]:
                found = w
                break
        if found is None:
            witness = _extend(p, l, copies)
            return BadColoringVerdict(False, total, bad_copy_of, d, witness, checks)
        bad_copy_of.append(found)
    return BadColoringVerdict(True, total, bad_copy_of, None, None, checks)


def _extend(p: ProductGraph, l: ListAssignment, copies: list[tuple]) -> Coloring:
    colors = [c for col in copies for c in col]
    for w in range(p.b):
        ok, col = is_l_colorable(p.factor_g, _reduced(p, l, copies, w))
        if not ok:
            raise RuntimeError(f"u-side colouring unexpectedly bad for copy w{w + 1}")
        colors.extend(col.colors)
    witness = Coloring(tuple(colors))
    assert witness.is_proper_l_coloring(p.base, l), "extended colouring failed verification"
    return witness


# ---------------------------------------------------------------------------
# constructions


@dataclass
class BadAssignmentConstruction:
    """A list assignment on G □ H with no proper colouring.

    The u-copies carry shifted copies of ``base_minimizer`` (an s-assignment
    of G with exactly ``t`` proper colourings, s = k + delta - 1 with
    k = chi_l(G)); copy u_j's colours are offset by ``offsets[j]``.  Each
    w-copy gets ``critical`` (a non-colourable (k-1)-assignment of G, offset
    past every u-colour) plus, from each adjacent u_j, the colours of one of
    that copy's t colourings.  W-copy d is built to be bad for the d-th
    u-side colouring.
    """

    product: ProductGraph
    assignment: ListAssignment
    t: int
    k: int
    list_size: int
    base_minimizer: ListAssignment
    critical: ListAssignment
    offsets: tuple
    critical_offset: int
    trimmed_edges: tuple = ()

    @property
    def b(self) -> int:
        return self.product.b

    def to_json(self) -> dict:
        return {
            "product": self.product.to_json(),
            "assignment": self.assignment.to_json(),
            "t": self.t,
            "k": self.k,
            "list_size": self.list_size,
            "base_minimizer": self.base_minimizer.to_json(),
            "critical": self.critical.to_json(),
            "offsets": list(self.offsets),
            "critical_offset": self.critical_offset,
            "trimmed_edges": [list(e) for e in self.trimmed_edges],
        }


def _ingredients(g: Graph, delta: int, budget, workers):
    k = list_chromatic_number(g, budget, workers=workers)
    s = k + delta - 1
    res = list_color_function(g, s, budget, workers=workers)
    base = res.assignment.canonical()
    colorings = [c.colors for c in enumerate_l_colorings(g, base)]
    assert len(colorings) == res.value, "minimiser colouring count mismatch"
    critical = find_noncolorable_assignment(g, k - 1, budget, workers=workers)
    return k, s, res.value, base, colorings, critical


def _assemble(g: Graph, spec, k, s, t, base, colorings, critical, trimmed=()) -> BadAssignmentConstruction:
    product = cartesian_product(g, spec)
    a, b, n = product.a, product.b, g.n
    width = base.palette_size
    offsets = tuple(j * width for j in range(a))
    critical_offset = a * width
    lists = []
    for j in range(a):
        lists.extend(frozenset(c + offsets[j] for c in base[i]) for i in range(n))
    period = t ** a
    for w in range(b):
        d = w % period
        js = product.w_neighbors(w)
        pick = [(d // t ** j) % t for j in range(a)]
        for i in range(n):
            row = {c + critical_offset for c in critical[i]}
            row.update(colorings[pick[j]][i] + offsets[j] for j in js)
            lists.append(frozenset(row))
    assignment = ListAssignment(tuple(lists))
    assert assignment.size == s, "constructed lists have the wrong size"
    return BadAssignmentConstruction(product, assignment, t, k, s, base, critical, offsets,
                                     critical_offset, tuple(trimmed))


def construct_bad_assignment(g: Graph, a: int, budget: int | None = DEFAULT_BUDGET, *,
                             copy_limit: int = DEFAULT_COPY_LIMIT,
                             workers: int = 1) -> BadAssignmentConstruction:
    """Non-colourable (chi_l(g) + a - 1)-assignment of g □ K_{a, t^a}."""
    if a < 1:
        raise InvalidParameter("a must be positive")
    k, s, t, base, colorings, critical = _ingredients(g, a, budget, workers)
    b = t ** a
    if b > copy_limit:
        raise SizeLimitError(f"t = {t}, a = {a} needs b = {b} w-copies, above the limit {copy_limit}")
    return _assemble(g, CompleteBipartite(a, b), k, s, t, base, colorings, critical)


def construct_bipartite_bad_assignment(g: Graph, h: Graph, A, B, budget: int | None = DEFAULT_BUDGET, *,
                                       workers: int = 1) -> BadAssignmentConstruction:
    """Non-colourable (chi_l(g) + delta - 1)-assignment of g □ h, delta the least
    degree on side B.

    Each B-vertex keeps only edges to its delta lowest-positioned A-neighbours;
    the returned product uses this trimmed H.  Adding the deleted edges back
    only removes colourings, so the same lists are non-colourable on g □ h.
    """
    h, A, B = ExplicitBipartite(h, tuple(A), tuple(B)).graph()
    delta = min(h.degree(w) for w in B)
    if delta < 1:
        raise PreconditionError("every vertex of B needs at least one neighbour")
    k, s, t, base, colorings, critical = _ingredients(g, delta, budget, workers)
    required = t ** len(A)
    if len(B) < required:
        raise PreconditionError(f"|B| = {len(B)} is below the required {required} "
                                f"(t = {t}, |A| = {len(A)})")
    position = {x: j for j, x in enumerate(A)}
    edges, trimmed = [], []
    for w in B:
        nbrs = sorted(h.neighbors(w), key=position.__getitem__)
        edges.extend((x, w) for x in nbrs[:delta])
        trimmed.extend((x, w) for x in nbrs[delta:])
    kept = Graph.from_edges(h.n, edges, h.labels)
    return _assemble(g, ExplicitBipartite(kept, A, B), k, s, t, base, colorings, critical, trimmed)


# ---------------------------------------------------------------------------
# counting bad colourings for one w-copy


def count_bad_colorings_for_copy(p: ProductGraph, l: ListAssignment, require_disjoint: bool = False,
                                 w_index: int = 0, budget: int | None = DEFAULT_BUDGET) -> int:
    """Number of proper u-side colourings that are bad for copy ``w_index``.

    With ``require_disjoint`` the lists L(v_i, u_1), ..., L(v_i, u_a) must be
    pairwise disjoint for every i; this is checked.
    """
    _check_lists(p, l)
    p.w_copy(w_index)
    if l.size is None:
        raise PreconditionError("all lists must have the same size")
    if require_disjoint:
        for i in range(p.n):
            seen: set = set()
            for j in range(p.a):
                L = l.lists[p.u_index(i, j)]
                if seen & L:
                    raise PreconditionError(f"u-lists at G-vertex {i} are not pairwise disjoint")
                seen |= L
    # only the colours a u-copy puts inside the w-lists matter, so colourings
    # are grouped by that trace and each combination of traces is tested once
    start = p.w_copy(w_index).start
    w_lists = [l.lists[start + i] for i in range(p.n)]
    adjacent = set(p.w_neighbors(w_index))
    factor = 1
    traces = []
    for j in range(p.a):
        cols = enumerate_l_colorings(p.factor_g, _copy_lists(p, l, p.u_copy(j)), budget)
        if j not in adjacent:
            factor *= sum(1 for _ in cols)
            continue
        counter = Counter(tuple(c if c in w_lists[i] else None for i, c in enumerate(col.colors))
                          for col in cols)
        traces.append(sorted(counter.items(), key=lambda item: [(-1 if c is None else c) for c in item[0]]))
    count = 0
    for combo in itertools.product(*traces):
        reduced = ListAssignment(tuple(w_lists[i] - {trace[i] for trace, _ in combo}
                                       for i in range(p.n)), reduced=True)
        if not is_l_colorable(p.factor_g, reduced)[0]:
            count += math.prod(mult for _, mult in combo)
    return count * factor


# ---------------------------------------------------------------------------
# bounds on f_a


@dataclass
class FaReport:
    """Bounds on f_a(G), the least b with chi_l(G □ K_{a,b}) = chi_l(G) + a."""

    graph: dict
    a: int
    list_chromatic_number: int
    chromatic_number: int
    strong: str | None
    plq_value: int
    upper: int
    upper_tag: str
    lower: int
    lower_tag: str
    exact: int | None
    exact_tag: str | None
    borowiecki: int

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "a": self.a,
            "list_chromatic_number": self.list_chromatic_number,
            "chromatic_number": self.chromatic_number,
            "strong": self.strong,
            "plq_value": self.plq_value,
            "upper": {"value": self.upper, "tag": self.upper_tag},
            "lower": {"value": self.lower, "tag": self.lower_tag},
            "exact": None if self.exact is None else {"value": self.exact, "tag": self.exact_tag},
            "borowiecki": {"value": self.borowiecki, "tag": "borowiecki"},
        }


def fa_bounds(g: Graph, a: int, budget: int | None = DEFAULT_BUDGET, *, workers: int = 1) -> FaReport:
    if a < 1:
        raise InvalidParameter("a must be positive")
    k = list_chromatic_number(g, budget, workers=workers)
    t = list_color_function(g, k + a - 1, budget, workers=workers).value
    upper = t ** a
    strong = None
    chi = k
    if g.is_connected():
        cert = is_strongly_chromatic_choosable(g, budget, workers=workers)
        strong, chi = cert.verdict, cert.chromatic_number
    else:
        chi = chromatic_number(g)
    exact = exact_tag = None
    if g.n == 1:
        exact, exact_tag = a ** a, "k1-folklore"
    elif strong == STRONG and a == 1:
        exact, exact_tag = t, "star-thm"
    elif strong == STRONG and chi >= a + 1:
        exact, exact_tag = upper, "scc-exact-thm"
    if strong == STRONG:
        lower, lower_tag = max(1, -(-upper // 2 ** (k - 1))), "scc-lower-thm"
    else:
        lower, lower_tag = 1, "trivial-1"
    report = FaReport(g.to_json(), a, k, chi, strong, t, upper, "plq-power-thm", lower, lower_tag,
                      exact, exact_tag, (k + a - 1) ** (a * g.n))
    assert 1 <= report.lower <= report.upper
    assert report.exact is None or report.lower <= report.exact <= report.upper
    return report


def borowiecki_product_bound(g: Graph, h: Graph, budget: int | None = DEFAULT_BUDGET) -> int:
    """Upper bound min(chi_l(g) + col(h), col(g) + chi_l(h)) - 1 on chi_l(g □ h)."""
    return min(list_chromatic_number(g, budget) + coloring_number(h),
               coloring_number(g) + list_chromatic_number(h, budget)) - 1
