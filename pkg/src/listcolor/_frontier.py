"""Search over k-assignments, one vertex at a time, with state merging.

Vertices are processed in a fixed order.  After a prefix has received its
lists, only two things matter for the rest of the search: the lists on the
*frontier* (processed vertices with an unprocessed neighbour) and, for each
colouring of the frontier, how many proper colourings of the processed part
extend it.  States are relabelled so that equal states reached along
different prefixes share one memo entry.  Colours that no longer appear on
the frontier are interchangeable with brand-new colours, so new lists only
ever choose among live colours plus the first few fresh ones: exhaustive up
to renaming of colours.

Two queries are supported:

* ``minimum``: the least number of proper colourings over all completions
  (branch and bound on a greedy lower bound);
* ``exists``: whether some completion is not colourable at all (optionally
  requiring the final assignment to be non-constant).
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, iter_bits


def frontier_order(g: Graph) -> list[int]:
    """Greedy vertex order keeping the frontier small.

    ``open_deg[u]`` counts the unplaced neighbours of a placed vertex u, so
    the frontier size after placing v changes by ``[v has unplaced
    neighbours] - #{placed neighbours whose last unplaced neighbour is v}``.
    """
    n = g.n
    adj = g.adj
    start = max(range(n), key=lambda v: (g.degree(v), -v))
    open_deg = [0] * n
    placed = 0
    remaining = set(range(n))
    order = []
    size = 0
    nxt = start
    while True:
        order.append(nxt)
        placed |= 1 << nxt
        remaining.discard(nxt)
        closing = sum(1 for u in iter_bits(adj[nxt] & placed) if open_deg[u] == 1)
        for u in iter_bits(adj[nxt] & placed):
            open_deg[u] -= 1
        open_deg[nxt] = (adj[nxt] & ~placed).bit_count()
        size += (1 if open_deg[nxt] else 0) - closing
        if not remaining:
            return order

        def key(v):
            back = adj[v] & placed
            closes = sum(1 for u in iter_bits(back) if open_deg[u] == 1)
            opens = 1 if adj[v] & ~placed & ~(1 << v) else 0
            return (size + opens - closes, -back.bit_count(), -g.degree(v), v)

        nxt = min(remaining, key=key)


@lru_cache(maxsize=None)
def _choices(live: int, k: int, fresh_cap: int) -> tuple:
    """Canonical new lists: k-subsets of live colours 0..live-1 plus fresh colours
    live, live+1, ... taken as a prefix; lexicographic order."""
    out = []
    top = live + min(k, fresh_cap)
    for combo in combinations(range(top), k):
        fresh = [c for c in combo if c >= live]
        if fresh == list(range(live, live + len(fresh))):
            out.append(combo)
    return tuple(out)


class FrontierSearch:
    def __init__(self, g: Graph, k: int, *, order=None, palette_bound=None, budget=None,
                 nonconstant=False):
        if k < 1:
            raise PreconditionError("list size must be at least 1")
        if nonconstant and not g.is_connected():
            raise PreconditionError("non-constant search requires a connected graph")
        self.g = g
        self.k = k
        self.n = g.n
        self.order = list(order) if order is not None else frontier_order(g)
        self.palette_bound = palette_bound
        self.budget = budget
        self.nonconstant = nonconstant
        self.nodes = 0
        self._exact: dict = {}
        self._lower: dict = {}
        self._exists: dict = {}
        self._prepare()

    # -- static structure ---------------------------------------------
    def _prepare(self):
        g, order, n = self.g, self.order, self.n
        pos = {v: i for i, v in enumerate(order)}
        self.frontiers = [()]
        later = (1 << n) - 1
        for i in range(n):
            later &= ~(1 << order[i])
            self.frontiers.append(tuple(v for v in order[:i + 1] if g.adj[v] & later))
        self.steps = []
        for i in range(n):
            v = order[i]
            F = self.frontiers[i]
            nbr_idx = tuple(idx for idx, u in enumerate(F) if g.has_edge(u, v))
            combined = F + (v,)
            nxt = set(self.frontiers[i + 1])
            keep = tuple(idx for idx, u in enumerate(combined) if u in nxt)
            self.steps.append((nbr_idx, keep))
        self._rest: dict = {}
        self.pos = pos

    def rest(self, level):
        """For each unprocessed vertex: (frontier neighbour indices, earlier unprocessed neighbours)."""
        info = self._rest.get(level)
        if info is None:
            g, order = self.g, self.order
            F = self.frontiers[level]
            info = []
            seen = 0
            for j in range(level, self.n):
                u = order[j]
                fidx = tuple(idx for idx, w in enumerate(F) if g.has_edge(u, w))
                info.append((fidx, (g.adj[u] & seen).bit_count()))
                seen |= 1 << u
            info = self._rest[level] = tuple(info)
        return info

    # -- state handling -------------------------------------------------
    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded("assignment search exceeded its budget", explored=self.nodes)

    def _fresh_cap(self, live: int) -> int:
        if self.palette_bound is None:
            return self.k
        return max(0, self.palette_bound - live)

    def _advance(self, level, lists, table, new_list, counting):
        nbr_idx, keep = self.steps[level]
        out: dict = {}
        for entry, cnt in table.items():
            blocked = {entry[idx] for idx in nbr_idx}
            for c in new_list:
                if c in blocked:
                    continue
                ext = entry + (c,)
                key = tuple(ext[idx] for idx in keep)
                out[key] = out.get(key, 0) + cnt if counting else 1
        combined = lists + (new_list,)
        return tuple(combined[idx] for idx in keep), out

    @staticmethod
    def _canonical(lists, table):
        """Relabel live colours; returns (lists, table, mapping old->new)."""
        live = sorted(set().union(*lists)) if lists else []
        if not live:
            return lists, table, {}
        weight: dict = {}
        for entry, cnt in table.items():
            for p, c in enumerate(entry):
                weight[(p, c)] = weight.get((p, c), 0) + cnt

        def signature(c):
            member = tuple(p for p, L in enumerate(lists) if c in L)
            return (member, tuple(weight.get((p, c), 0) for p in member), c)

        mapping = {c: i for i, c in enumerate(sorted(live, key=signature))}
        new_lists = tuple(tuple(sorted(mapping[c] for c in L)) for L in lists)
        new_table = {tuple(mapping[c] for c in e): cnt for e, cnt in table.items()}
        return new_lists, new_table, mapping

    @staticmethod
    def _key(level, flag, lists, table):
        return (level, flag, lists, tuple(sorted(table.items())))

    def _children(self, level, lists, table, flag, counting):
        """Yield (new_list, child_lists, child_table, child_flag, mapping) in canonical order."""
        live = len(set().union(*lists)) if lists else 0
        for combo in _choices(live, self.k, self._fresh_cap(live)):
            self._tick()
            child_lists, child_table = self._advance(level, lists, table, combo, counting)
            child_flag = flag and (not lists or combo == lists[0])
            cl, ct, mapping = self._canonical(child_lists, child_table)
            yield combo, cl, ct, child_flag, mapping

    def _root(self):
        return (), {(): 1}, self.nonconstant

    # -- minimum number of colourings ---------------------------------
    def _lower_bound(self, level, table):
        info = self.rest(level)
        k = self.k
        total = 0
        for entry, cnt in table.items():
            prod = cnt
            for fidx, back in info:
                avail = k - len({entry[i] for i in fidx}) - back
                if avail <= 0:
                    prod = 0
                    break
                prod *= avail
            total += prod
        return total

    def _min(self, level, lists, table, cutoff):
        if level == self.n:
            return sum(table.values())
        if not table:
            return 0
        key = self._key(level, True, lists, table)
        hit = self._exact.get(key)
        if hit is not None:
            return hit
        lb = self._lower.get(key, 0)
        if lb >= cutoff:
            return lb
        floor = self._lower_bound(level, table)
        if floor >= cutoff:
            self._lower[key] = max(lb, floor)
            return floor
        best = None
        lowest = None
        for _, cl, ct, _, _ in self._children(level, lists, table, True, True):
            bound = cutoff if best is None else min(cutoff, best)
            val = self._min(level + 1, cl, ct, bound)
            if val < bound:
                best = val
                if best <= floor:
                    break
            elif lowest is None or val < lowest:
                lowest = val
        if best is not None:
            self._exact[key] = best
            return best
        self._lower[key] = max(lb, lowest)
        return lowest

    def minimum(self) -> int:
        lists, table, _ = self._root()
        return self._min(0, lists, table, float("inf"))

    # -- existence of a non-colourable completion -----------------------
    def _safe(self, level, table):
        """Some frontier colouring extends greedily whatever the remaining lists are."""
        info = self.rest(level)
        k = self.k
        for entry in table:
            if all(k - len({entry[i] for i in fidx}) - back > 0 for fidx, back in info):
                return True
        return False

    def _exists_from(self, level, lists, table, flag):
        if not table:
            # already uncolourable; a later vertex can always break constancy
            return not (self.nonconstant and flag and level == self.n)
        if level == self.n:
            return False
        key = self._key(level, flag, lists, table)
        hit = self._exists.get(key)
        if hit is not None:
            return hit
        result = False
        if not self._safe(level, table):
            for _, cl, ct, cf, _ in self._children(level, lists, table, flag, False):
                if self._exists_from(level + 1, cl, ct, cf):
                    result = True
                    break
        self._exists[key] = result
        return result

    def exists(self) -> bool:
        lists, table, flag = self._root()
        return self._exists_from(0, lists, table, flag)

    # -- witness reconstruction -----------------------------------------
    def witness(self, kind: str, target=None, forced=None) -> list[frozenset]:
        """Lists (indexed by vertex) of the first assignment in canonical order
        achieving ``target`` colourings (kind='minimum') or non-colourability
        (kind='exists').  ``forced`` maps a level to the index of the child
        that must be taken there (used to stay inside one shard)."""
        forced = forced or {}
        # levels above a forced choice are taken blindly: the search has a
        # single root child, and shards only ever force level 1
        blind = max(forced, default=0)
        lists, table, flag = self._root()
        counting = kind == "minimum"
        actual: dict = {}
        assigned: dict = {}
        for level in range(self.n):
            v = self.order[level]
            chosen = None
            for idx, (combo, cl, ct, cf, mapping) in enumerate(
                    self._children(level, lists, table, flag, counting)):
                if level in forced:
                    if idx != forced[level]:
                        continue
                    ok = True
                elif level < blind:
                    ok = True
                elif kind == "minimum":
                    ok = self._min(level + 1, cl, ct, target + 1) == target
                else:
                    ok = self._exists_from(level + 1, cl, ct, cf)
                if ok:
                    chosen = (combo, cl, ct, cf, mapping)
                    break
            if chosen is None:
                raise RuntimeError("witness walk lost its target; search state inconsistent")
            combo, cl, ct, cf, mapping = chosen
            in_use = set(actual.values())
            step_actual = dict(actual)
            spare = (c for c in range(len(in_use) + self.k + 1) if c not in in_use)
            for c in combo:
                if c not in step_actual:
                    step_actual[c] = next(spare)
            assigned[v] = frozenset(step_actual[c] for c in combo)
            actual = {mapping[c]: step_actual[c] for c in mapping}
            lists, table, flag = cl, ct, cf
        return [assigned[v] for v in range(self.n)]
