"""Simple undirected graphs, standard families, joins and Cartesian products.

Graphs store one neighbour bitmask per vertex (``adj[v]`` has bit ``u`` set
iff ``uv`` is an edge).  They are immutable; every operation that "changes"
a graph returns a new one.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import InvalidBipartition, InvalidParameter


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter("graphs must have at least one vertex")
        if len(self.adj) != self.n:
            raise InvalidParameter("adjacency has wrong number of rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidParameter(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise InvalidParameter(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidParameter(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise InvalidParameter("labels must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        if n < 1:
            raise InvalidParameter("graphs must have at least one vertex")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    # -- basic queries -------------------------------------------------
    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    # -- derived graphs ------------------------------------------------
    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, renumbered in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        labels = tuple(self.label(v) for v in vertices) if self.labels is not None else None
        return Graph(len(vertices), tuple(adj), labels)

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced_subgraph([u for u in range(self.n) if u != v])

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def is_cycle(self) -> bool:
        return self.n >= 3 and all(row.bit_count() == 2 for row in self.adj) and self.is_connected()

    # -- serialisation ---------------------------------------------------
    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls.from_edges(int(data["n"]), data["edges"], data.get("labels"))
        except (KeyError, TypeError) as exc:
            raise InvalidParameter(f"malformed graph JSON: {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json())


# ---------------------------------------------------------------------------
# standard families


def _require_positive(**sizes):
    for name, value in sizes.items():
        if not isinstance(value, int) or value < 1:
            raise InvalidParameter(f"{name} must be a positive integer, got {value!r}")


def complete(n: int) -> Graph:
    _require_positive(n=n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    _require_positive(n=n)
    if n < 3:
        raise InvalidParameter("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _require_positive(n=n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the ``a`` side numbered first."""
    _require_positive(a=a, b=b)
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty(n: int) -> Graph:
    _require_positive(n=n)
    return Graph(n, (0,) * n)


_FAMILIES = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "complete_bipartite": complete_bipartite,
    "empty": empty,
}


def build_family(kind: str, *sizes: int) -> Graph:
    try:
        builder = _FAMILIES[kind]
    except KeyError:
        raise InvalidParameter(f"unknown graph family {kind!r}") from None
    try:
        return builder(*sizes)
    except TypeError:
        raise InvalidParameter(f"wrong number of size parameters for {kind!r}") from None


def join(g: Graph, h: Graph) -> Graph:
    """G ∨ H: disjoint union plus every edge between the two vertex sets."""
    n = g.n + h.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj] + [(row << g.n) | g_mask for row in h.adj]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(f"g{g.label(v)}" for v in range(g.n)) + tuple(f"h{h.label(v)}" for v in range(h.n))
    return Graph(n, tuple(adj), labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, tuple(g.adj) + tuple(row << g.n for row in h.adj))


# ---------------------------------------------------------------------------
# Cartesian products with a bipartite factor


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    def graph(self) -> tuple[Graph, tuple, tuple]:
        return complete_bipartite(self.a, self.b), tuple(range(self.a)), tuple(range(self.a, self.a + self.b))


@dataclass(frozen=True)
class ExplicitBipartite:
    h: Graph
    A: tuple
    B: tuple

    def graph(self) -> tuple[Graph, tuple, tuple]:
        A, B = tuple(self.A), tuple(self.B)
        if not A or not B:
            raise InvalidBipartition("both partite sets must be nonempty")
        if sorted(A + B) != list(range(self.h.n)):
            raise InvalidBipartition("partite sets must partition the vertices of H")
        for side in (A, B):
            mask = sum(1 << v for v in side)
            if any(self.h.adj[v] & mask for v in side):
                raise InvalidBipartition("declared partite set is not independent")
        return self.h, A, B


BipartiteSpec = Union[CompleteBipartite, ExplicitBipartite]


@dataclass(frozen=True)
class ProductGraph:
    """G □ H for a bipartite H with sides A = (u_1..u_a), B = (w_1..w_b).

    Vertex ``(v_i, x)`` of the product has index ``pos(x) * n + i`` where
    ``pos`` lists A before B, so every copy of G is a contiguous block.
    """

    base: Graph
    factor_g: Graph
    factor_h: Graph
    a_side: tuple
    b_side: tuple
    spec: BipartiteSpec

    @property
    def n(self) -> int:
        return self.factor_g.n

    @property
    def a(self) -> int:
        return len(self.a_side)

    @property
    def b(self) -> int:
        return len(self.b_side)

    def index(self, i: int, block: int) -> int:
        """Index of (v_i, x) where ``block`` is x's position in A + B."""
        return block * self.n + i

    def u_index(self, i: int, j: int) -> int:
        return j * self.n + i

    def w_index(self, i: int, l: int) -> int:
        return (self.a + l) * self.n + i

    def coord_of(self, v: int) -> tuple[int, int]:
        """(index in G, vertex of H) for product vertex ``v``."""
        block, i = divmod(v, self.n)
        return i, (self.a_side + self.b_side)[block]

    def u_copy(self, j: int) -> range:
        return range(j * self.n, (j + 1) * self.n)

    def w_copy(self, l: int) -> range:
        if not 0 <= l < self.b:
            raise InvalidParameter(f"w index {l} out of range for b={self.b}")
        start = (self.a + l) * self.n
        return range(start, start + self.n)

    def u_side(self) -> range:
        return range(0, self.a * self.n)

    def w_neighbors(self, l: int) -> list[int]:
        """Positions j (in A) of the u_j adjacent to w_l in H."""
        w = self.b_side[l]
        pos = {x: j for j, x in enumerate(self.a_side)}
        return sorted(pos[x] for x in iter_bits(self.factor_h.adj[w]))

    def truncate(self, b: int) -> "ProductGraph":
        """Keep only the first ``b`` w-copies."""
        if not isinstance(self.spec, CompleteBipartite):
            raise InvalidParameter("truncation is only defined for K_{a,b} factors")
        return cartesian_product(self.factor_g, CompleteBipartite(self.a, b))

    def to_json(self) -> dict:
        out = {"factor_g": self.factor_g.to_json(), "a": self.a, "b": self.b}
        if isinstance(self.spec, ExplicitBipartite):
            out["h"] = self.factor_h.to_json()
            out["A"] = list(self.a_side)
            out["B"] = list(self.b_side)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ProductGraph":
        g = Graph.from_json(data["factor_g"])
        if "h" in data:
            spec = ExplicitBipartite(Graph.from_json(data["h"]), tuple(data["A"]), tuple(data["B"]))
        else:
            spec = CompleteBipartite(int(data["a"]), int(data["b"]))
        return cartesian_product(g, spec)


def cartesian_product(g: Graph, spec: BipartiteSpec) -> ProductGraph:
    if isinstance(spec, CompleteBipartite):
        _require_positive(a=spec.a, b=spec.b)
    h, A, B = spec.graph()
    order = list(A) + list(B)
    n = g.n
    adj = []
    block_of = {x: blk for blk, x in enumerate(order)}
    for block, x in enumerate(order):
        cross = 0
        for y in iter_bits(h.adj[x]):
            cross |= 1 << (block_of[y] * n)
        for i in range(n):
            adj.append((g.adj[i] << (block * n)) | (cross << i))
    labels = tuple(f"({g.label(i)},{'u' if blk < len(A) else 'w'}{(blk if blk < len(A) else blk - len(A)) + 1})"
                   for blk in range(len(order)) for i in range(n))
    base = Graph(n * len(order), tuple(adj), labels)
    return ProductGraph(base, g, h, tuple(A), tuple(B), spec)


# ---------------------------------------------------------------------------
# cheap invariants


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Repeatedly strip a minimum-degree vertex.

    Returns the removal order and the degeneracy (largest degree seen at
    removal time).  Colouring greedily in *reverse* removal order sees at
    most ``degeneracy`` coloured neighbours at every step.
    """
    alive = (1 << g.n) - 1
    order = []
    degen = 0
    while alive:
        best, best_deg = -1, g.n + 1
        for v in iter_bits(alive):
            d = (g.adj[v] & alive).bit_count()
            if d < best_deg:
                best, best_deg = v, d
        degen = max(degen, best_deg)
        order.append(best)
        alive &= ~(1 << best)
    return order, degen


def coloring_number(g: Graph) -> int:
    return degeneracy_order(g)[1] + 1


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def chromatic_number(g: Graph, budget: int | None = None) -> int:
    """Exact chromatic number: smallest k with a proper colouring from constant k-lists."""
    from .lists import ListAssignment, is_l_colorable

    if g.edge_count == 0:
        return 1
    if is_bipartite(g):
        return 2
    k = 3
    while True:
        if is_l_colorable(g, ListAssignment.constant(g.n, k), budget=budget)[0]:
            return k
        k += 1
