"""List assignments, colourings, and the exact backtracking list-colouring solver."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InvalidParameter
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class ListAssignment:
    """One set of allowed colours (nonnegative ints) per vertex.

    Lists must be nonempty unless ``reduced`` is set; reduced lists arise
    after subtracting colours already used by neighbours, and a 0-assignment
    is represented the same way.
    """

    lists: tuple
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self):
        lists = tuple(frozenset(int(c) for c in L) for L in self.lists)
        object.__setattr__(self, "lists", lists)
        for v, L in enumerate(lists):
            if any(c < 0 for c in L):
                raise InvalidParameter(f"negative colour in list of vertex {v}")
            if not L and not self.reduced:
                raise InvalidParameter(f"empty list at vertex {v}; pass reduced=True to allow it")

    @classmethod
    def constant(cls, n: int, k: int, start: int = 0) -> "ListAssignment":
        return cls((frozenset(range(start, start + k)),) * n, reduced=(k == 0))

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[int]]) -> "ListAssignment":
        lists = [frozenset(L) for L in lists]
        return cls(tuple(lists), reduced=any(not L for L in lists))

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset:
        return self.lists[v]

    @property
    def palette(self) -> frozenset:
        return frozenset().union(*self.lists)

    @property
    def palette_size(self) -> int:
        return max(self.palette, default=-1) + 1

    @property
    def size(self) -> int | None:
        """Common list size, or None if sizes differ."""
        sizes = {len(L) for L in self.lists}
        return sizes.pop() if len(sizes) == 1 else None

    def is_constant(self) -> bool:
        return len(set(self.lists)) <= 1

    def relabel(self, mapping) -> "ListAssignment":
        return ListAssignment(tuple(frozenset(mapping[c] for c in L) for L in self.lists), self.reduced)

    def shift(self, offset: int) -> "ListAssignment":
        return ListAssignment(tuple(frozenset(c + offset for c in L) for L in self.lists), self.reduced)

    def canonical(self, order: Sequence[int] | None = None) -> "ListAssignment":
        """Relabel colours by first use along ``order`` (default vertex order)."""
        mapping = {}
        for v in order if order is not None else range(len(self.lists)):
            for c in sorted(self.lists[v]):
                if c not in mapping:
                    mapping[c] = len(mapping)
        return self.relabel(mapping)

    def restrict(self, vertices: Sequence[int]) -> "ListAssignment":
        return ListAssignment(tuple(self.lists[v] for v in vertices), self.reduced)

    def to_json(self) -> dict:
        return {"lists": [sorted(L) for L in self.lists]}

    @classmethod
    def from_json(cls, data: dict) -> "ListAssignment":
        try:
            return cls.from_lists(data["lists"])
        except (KeyError, TypeError) as exc:
            raise InvalidParameter(f"malformed list-assignment JSON: {exc}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class Coloring:
    colors: tuple

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    def is_proper(self, g: Graph) -> bool:
        return len(self.colors) == g.n and all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def respects(self, lists: ListAssignment) -> bool:
        return len(self.colors) == len(lists) and all(c in L for c, L in zip(self.colors, lists.lists))

    def is_proper_l_coloring(self, g: Graph, lists: ListAssignment) -> bool:
        return self.is_proper(g) and self.respects(lists)

    def to_json(self) -> list:
        return list(self.colors)


def _check_lists(g: Graph, lists: ListAssignment) -> None:
    if len(lists) != g.n:
        raise InvalidParameter(f"list assignment has {len(lists)} lists for a graph on {g.n} vertices")


def _domains(lists: ListAssignment) -> list[int]:
    return [sum(1 << c for c in L) for L in lists.lists]


def is_l_colorable(g: Graph, lists: ListAssignment, budget: int | None = None) -> tuple[bool, Coloring | None]:
    """Decide L-colourability; returns ``(True, witness)`` or ``(False, None)``.

    Backtracking with forward checking; the next vertex is always an
    uncoloured one with the fewest remaining candidates (ties by index).
    ``budget`` caps the number of colour trials.
    """
    _check_lists(g, lists)
    n = g.n
    dom = _domains(lists)
    if any(d == 0 for d in dom):
        return False, None
    color = [-1] * n
    uncolored = set(range(n))
    adj = g.adj
    trials = 0
    # each frame: [vertex, untried candidates, trail of (neighbour, old domain)]
    stack: list[list] = []

    def pick():
        return min(uncolored, key=lambda v: (dom[v].bit_count(), v))

    v = pick()
    stack.append([v, dom[v], []])
    uncolored.discard(v)
    while stack:
        frame = stack[-1]
        v, cands, trail = frame
        for u, old in reversed(trail):
            dom[u] = old
        trail.clear()
        if not cands:
            stack.pop()
            color[v] = -1
            uncolored.add(v)
            continue
        low = cands & -cands
        frame[1] = cands ^ low
        c = low.bit_length() - 1
        trials += 1
        if budget is not None and trials > budget:
            raise BudgetExceeded("list-colouring search exceeded its budget", explored=trials)
        color[v] = c
        ok = True
        for u in iter_bits(adj[v]):
            if color[u] < 0 and dom[u] & low:
                trail.append((u, dom[u]))
                dom[u] ^= low
                if not dom[u]:
                    ok = False
                    break
        if not ok:
            continue
        if not uncolored:
            return True, Coloring(tuple(color))
        w = pick()
        uncolored.discard(w)
        stack.append([w, dom[w], []])
    return False, None


def count_l_colorings(g: Graph, lists: ListAssignment, budget: int | None = None) -> int:
    """Exact number P(G, L) of proper L-colourings.

    Full backtracking in fewest-candidates-first order.  Once the uncoloured
    vertices form an independent set, the remaining count is the product of
    their domain sizes.
    """
    _check_lists(g, lists)
    dom = _domains(lists)
    adj = g.adj
    nodes = [0]

    def rec(alive: int) -> int:
        if not alive:
            return 1
        if all(not (adj[v] & alive) for v in iter_bits(alive)):
            prod = 1
            for v in iter_bits(alive):
                prod *= dom[v].bit_count()
            return prod
        v = min(iter_bits(alive), key=lambda x: (dom[x].bit_count(), x))
        rest = alive & ~(1 << v)
        nbrs = adj[v] & rest
        total = 0
        cands = dom[v]
        while cands:
            low = cands & -cands
            cands ^= low
            nodes[0] += 1
            if budget is not None and nodes[0] > budget:
                raise BudgetExceeded("counting exceeded its budget", explored=nodes[0])
            trail = []
            dead = False
            for u in iter_bits(nbrs):
                if dom[u] & low:
                    trail.append((u, dom[u]))
                    dom[u] ^= low
                    if not dom[u]:
                        dead = True
            if not dead:
                total += rec(rest)
            for u, old in trail:
                dom[u] = old
        return total

    return rec((1 << g.n) - 1)


def enumerate_l_colorings(g: Graph, lists: ListAssignment, budget: int | None = None) -> Iterator[Coloring]:
    """Yield every proper L-colouring once, in lexicographic order of the colour tuple.

    Raises ``BudgetExceeded`` (with the number already yielded) when more
    than ``budget`` colourings exist.
    """
    _check_lists(g, lists)
    n = g.n
    options = [sorted(L) for L in lists.lists]
    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(n)]
    color = [0] * n
    produced = 0

    def rec(v: int):
        nonlocal produced
        if v == n:
            produced += 1
            if budget is not None and produced > budget:
                raise BudgetExceeded("too many colourings to enumerate", explored=produced - 1)
            yield Coloring(tuple(color))
            return
        used = {color[u] for u in earlier[v]}
        for c in options[v]:
            if c not in used:
                color[v] = c
                yield from rec(v + 1)

    yield from rec(0)
