"""Chromatic polynomials and proper k-colouring counts."""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Sequence

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, iter_bits

_DEBUG = bool(os.environ.get("LISTCOLOR_DEBUG"))


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with exact integer coefficients; ``coeffs[d]`` multiplies k**d."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c) or (0,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntegerPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def falling_factorial(cls, n: int) -> "IntegerPolynomial":
        """k (k-1) ... (k-n+1)."""
        p = cls((1,))
        for i in range(n):
            p = p * cls((-i, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, k: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntegerPolynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)))

    def __neg__(self):
        return IntegerPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntegerPolynomial(tuple(out))

    def __pow__(self, e: int):
        out = IntegerPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def has_chromatic_shape(self, n: int) -> bool:
        """Degree n, monic, zero constant term, signs alternating from the top."""
        c = self.coeffs
        if self.degree != n or c[n] != 1 or c[0] != 0:
            return False
        return all(c[d] * (-1) ** (n - d) >= 0 for d in range(n + 1))

    def to_json(self) -> list:
        return list(self.coeffs)

    def __str__(self):
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "" if d == 0 else ("k" if d == 1 else f"k^{d}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# deletion-contraction on bitmask graphs

_memo: dict = {}
_memo_lock = threading.Lock()


def _canonical_key(adj: Sequence[int]) -> tuple:
    """Relabel vertices by refined degree classes (ties by index) and encode.

    Equal keys imply equal relabelled graphs, so this is safe as a memo key;
    it is not a complete isomorphism invariant and may miss some hits.
    """
    n = len(adj)
    colour = [a.bit_count() for a in adj]
    for _ in range(3):
        sig = [(colour[v], tuple(sorted(colour[u] for u in iter_bits(adj[v])))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    order = sorted(range(n), key=lambda v: (colour[v], v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _components(adj: Sequence[int]) -> list[list[int]]:
    n = len(adj)
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def _induced(adj: Sequence[int], vertices: Sequence[int]) -> tuple:
    pos = {v: i for i, v in enumerate(vertices)}
    out = []
    for v in vertices:
        row = 0
        for u in iter_bits(adj[v]):
            if u in pos:
                row |= 1 << pos[u]
        out.append(row)
    return tuple(out)


def _contract(adj: Sequence[int], u: int, v: int) -> tuple:
    """Merge v into u, dropping the loop and any parallel edges."""
    merged = list(adj)
    merged[u] = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    for w in iter_bits(adj[v]):
        if w != u:
            merged[w] = (merged[w] & ~(1 << v)) | (1 << u)
    keep = [x for x in range(len(adj)) if x != v]
    return _induced(merged, keep)


class _Counter:
    def __init__(self, budget):
        self.budget = budget
        self.calls = 0

    def tick(self):
        self.calls += 1
        if self.budget is not None and self.calls > self.budget:
            raise BudgetExceeded("deletion-contraction exceeded its budget", explored=self.calls)


def _poly(adj: tuple, counter: _Counter) -> IntegerPolynomial:
    n = len(adj)
    m = sum(a.bit_count() for a in adj) // 2
    if m == 0:
        return IntegerPolynomial.monomial(n)
    if m == n * (n - 1) // 2:
        return IntegerPolynomial.falling_factorial(n)
    comps = _components(adj)
    if len(comps) > 1:
        out = IntegerPolynomial((1,))
        for comp in comps:
            out = out * _poly(_induced(adj, comp), counter)
        return out
    if m == n - 1:  # tree
        return IntegerPolynomial((0, 1)) * IntegerPolynomial((-1, 1)) ** (n - 1)
    key = _canonical_key(adj)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    counter.tick()
    best = None
    for x in range(n):
        for y in iter_bits(adj[x] >> (x + 1) << (x + 1)):
            score = adj[x].bit_count() + adj[y].bit_count()
            if best is None or score > best[0]:
                best = (score, x, y)
    _, x, y = best
    deleted = list(adj)
    deleted[x] &= ~(1 << y)
    deleted[y] &= ~(1 << x)
    result = _poly(tuple(deleted), counter) - _poly(_contract(adj, x, y), counter)
    if _DEBUG and n <= 6:
        g = Graph(n, adj)
        for k in range(4):
            assert result(k) == count_k_colorings(g, k), "deletion-contraction identity violated"
    with _memo_lock:
        _memo.setdefault(key, result)
    return result


def chromatic_polynomial(g: Graph, budget: int | None = None) -> IntegerPolynomial:
    """P(G, k) by deletion-contraction with a memo keyed on a relabelled encoding.

    ``budget`` bounds the number of non-trivial recursive expansions.
    """
    return _poly(tuple(g.adj), _Counter(budget))


def count_k_colorings(g: Graph, k: int) -> int:
    """Number of proper colourings from {0..k-1}, by plain backtracking.

    Deliberately independent of :func:`chromatic_polynomial` so it can act
    as its oracle.
    """
    if k <= 0:
        return 0
    n = g.n
    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(n)]
    color = [0] * n

    def rec(v: int) -> int:
        used = {color[u] for u in earlier[v]}
        if v == n - 1:
            return k - len(used)
        total = 0
        for c in range(k):
            if c not in used:
                color[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


# ---------------------------------------------------------------------------
# list colour function = chromatic polynomial above a threshold


def _ln_one_plus_sqrt2() -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 60
        return (Decimal(1) + Decimal(2).sqrt()).ln()


LN_ONE_PLUS_SQRT2 = _ln_one_plus_sqrt2()


@dataclass(frozen=True)
class PlqThreshold:
    """P_l(G, k) = P(G, k) for every integer k with k > (m - 1) / ln(1 + sqrt 2).

    Stored as the exact integer ``m - 1``; comparisons are done as
    ``k * ln(1 + sqrt 2) > m - 1`` at 60 significant digits.  The constant is
    irrational, so equality never occurs for integer k >= 1.
    """

    m_minus_one: int

    @property
    def value(self) -> float:
        return float(Decimal(self.m_minus_one) / LN_ONE_PLUS_SQRT2)

    def admits(self, k: int) -> bool:
        with localcontext() as ctx:
            ctx.prec = 60
            return Decimal(k) * LN_ONE_PLUS_SQRT2 > Decimal(self.m_minus_one)

    def smallest_admitted(self) -> int:
        k = max(1, int(self.value))
        while not self.admits(k):
            k += 1
        while k > 1 and self.admits(k - 1):
            k -= 1
        return k


def plq_equals_p_threshold(g: Graph) -> PlqThreshold:
    if not g.is_connected():
        raise PreconditionError("the threshold is only known for connected graphs")
    return PlqThreshold(max(g.edge_count - 1, 0))
