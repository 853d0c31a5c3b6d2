"""Exact solvers with uniqueness detection.

Open packings, 2-packings and independent sets are all conflict-free sets in
a derived *conflict graph*:

* independent set: ``u`` and ``v`` conflict when adjacent;
* 2-packing: when ``1 <= d(u, v) <= 2``;
* open packing: when they share a neighbor (every vertex may see at most one
  member, so choosing ``v`` forbids everything else around each neighbor of
  ``v``).

One branch-and-bound over bitmasks therefore serves all three. The bound is a
greedy clique partition of the remaining candidates in the conflict graph;
for open packings the neighborhoods ``N(w)`` are such cliques.

Uniqueness is decided without enumeration: once a maximum set ``W`` of size
``k`` is known, any other maximum set misses some member of ``W``. Searching
"exclude w1", "take w1, exclude w2", ... partitions those sets, and each
branch only needs *some* size-``k`` solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .graph_core import Graph, GraphError, has_isolated_vertex, iter_bits


class DomainError(ValueError):
    """Invariant is undefined for this input."""


@dataclass(frozen=True)
class SolverResult:
    value: int
    witness: tuple
    unique: Optional[bool]
    all_witnesses: Optional[tuple] = None

    def to_json(self) -> dict:
        out = {"value": self.value, "witness": [list(w) if isinstance(w, tuple) else w
                                                for w in self.witness],
               "unique": self.unique}
        if self.all_witnesses is not None:
            out["witnesses"] = [[list(x) if isinstance(x, tuple) else x for x in w]
                                for w in self.all_witnesses]
        return out


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _sorted_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


# -- conflict graphs ----------------------------------------------------------


def independence_conflicts(g: Graph) -> list[int]:
    return list(g.masks)


def two_packing_conflicts(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        reach = g.masks[v]
        for w in g.adj[v]:
            reach |= g.masks[w]
        out.append(reach & ~(1 << v))
    return out


def open_packing_conflicts(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        reach = 0
        for w in g.adj[v]:
            reach |= g.masks[w]
        out.append(reach & ~(1 << v))
    return out


# -- generic conflict-free set search ------------------------------------------


def _clique_cover_bound(cand: int, conflict: list[int]) -> int:
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        grow = cand & conflict[v]
        while grow:
            b = grow & -grow
            u = b.bit_length() - 1
            cand &= ~b
            grow &= conflict[u] & ~b
        count += 1
    return count


class _SetSearch:
    """Branch and bound for maximum conflict-free sets."""

    def __init__(self, conflict: list[int]):
        self.conflict = conflict
        self.n = len(conflict)

    def _pick(self, cand: int) -> tuple[int, int]:
        """Return (mask of conflict-free candidates, branching vertex or -1)."""
        free = 0
        best, best_deg = -1, -1
        c = cand
        conflict = self.conflict
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            d = _popcount(conflict[v] & cand)
            if d == 0:
                free |= low
            elif d > best_deg:
                best, best_deg = v, d
        return free, best

    def maximum(self) -> int:
        """Size of a maximum conflict-free set."""
        best = [-1]
        conflict = self.conflict

        def rec(size: int, cand: int) -> None:
            if size + _clique_cover_bound(cand, conflict) <= best[0]:
                return
            free, v = self._pick(cand)
            if free:
                size += _popcount(free)
                cand &= ~free
            if v < 0:
                best[0] = max(best[0], size)
                return
            bit = 1 << v
            rec(size + 1, cand & ~conflict[v] & ~bit)
            rec(size, cand & ~bit)

        rec(0, (1 << self.n) - 1)
        return best[0]

    def find(self, target: int, forced: int = 0, forbidden: int = 0) -> Optional[int]:
        """Any conflict-free set of size >= target containing ``forced`` and avoiding ``forbidden``."""
        conflict = self.conflict
        cand = (1 << self.n) - 1
        cand &= ~forbidden & ~forced
        for v in iter_bits(forced):
            if conflict[v] & forced:
                return None
            cand &= ~conflict[v]
        found: list[int] = []

        def rec(chosen: int, size: int, cand: int) -> bool:
            if size >= target:
                found.append(chosen)
                return True
            if size + _popcount(cand) < target:
                return False
            if size + _clique_cover_bound(cand, conflict) < target:
                return False
            free, v = self._pick(cand)
            if free:
                chosen |= free
                size += _popcount(free)
                cand &= ~free
                if size >= target:
                    found.append(chosen)
                    return True
            if v < 0:
                return False
            bit = 1 << v
            return rec(chosen | bit, size + 1, cand & ~conflict[v] & ~bit) or rec(
                chosen, size, cand & ~bit)

        rec(forced, _popcount(forced), cand)
        return found[0] if found else None

    def enumerate_maximum(self, k: int) -> list[int]:
        """Every conflict-free set of size exactly ``k``, where ``k`` is the maximum."""
        conflict = self.conflict
        out: list[int] = []

        def rec(chosen: int, size: int, cand: int) -> None:
            if size + _clique_cover_bound(cand, conflict) < k:
                return
            free, v = self._pick(cand)
            if free:
                chosen |= free
                size += _popcount(free)
                cand &= ~free
            if v < 0:
                if size == k:
                    out.append(chosen)
                return
            bit = 1 << v
            rec(chosen | bit, size + 1, cand & ~conflict[v] & ~bit)
            rec(chosen, size, cand & ~bit)

        rec(0, 0, (1 << self.n) - 1)
        return out


def _lex_smallest(n: int, find: Callable[[int, int], Optional[int]]) -> tuple[int, ...]:
    """Lexicographically smallest solution: greedily force in each vertex that still admits one."""
    forced = forbidden = 0
    for v in range(n):
        if find(forced | 1 << v, forbidden) is not None:
            forced |= 1 << v
        else:
            forbidden |= 1 << v
    return _sorted_tuple(forced)


def _other_solution(find: Callable[[int, int], Optional[int]], witness: tuple[int, ...]) -> Optional[int]:
    """Search for a same-size solution different from ``witness``.

    Branch i forces witness[:i] in and witness[i] out; together the branches
    cover every same-size set that is not ``witness``.
    """
    forced = 0
    for w in witness:
        hit = find(forced, 1 << w)
        if hit is not None:
            return hit
        forced |= 1 << w
    return None


def _solve_conflict_free(conflict: list[int], enumerate: bool) -> SolverResult:
    n = len(conflict)
    if n == 0:
        return SolverResult(0, (), True, ((),) if enumerate else None)
    search = _SetSearch(conflict)
    k = search.maximum()
    if enumerate:
        sets = sorted(_sorted_tuple(m) for m in search.enumerate_maximum(k))
        return SolverResult(k, sets[0], len(sets) == 1, tuple(sets))

    def find(forced: int, forbidden: int) -> Optional[int]:
        return search.find(k, forced, forbidden)

    witness = _lex_smallest(n, find)
    return SolverResult(k, witness, _other_solution(find, witness) is None)


def max_open_packing(g: Graph, enumerate: bool = False) -> SolverResult:
    """Maximum open packing; ``unique`` tells whether it is the only one."""
    return _solve_conflict_free(open_packing_conflicts(g), enumerate)


def max_two_packing(g: Graph, enumerate: bool = False) -> SolverResult:
    return _solve_conflict_free(two_packing_conflicts(g), enumerate)


def max_independent_set(g: Graph, enumerate: bool = False) -> SolverResult:
    return _solve_conflict_free(independence_conflicts(g), enumerate)


def unique_max_open_packing(g: Graph) -> Optional[frozenset[int]]:
    """U(g) when g has exactly one maximum open packing, else None."""
    res = max_open_packing(g)
    return frozenset(res.witness) if res.unique else None


# -- restricted packings ----------------------------------------------------------


def count_open_packings_avoiding(g: Graph, k: int, x: int,
                                 limit: Optional[int] = None) -> tuple[int, Optional[list]]:
    """Number of open packings of size ``k`` that do not contain ``x``.

    The list of those packings is returned alongside when there are at most
    two of them. With ``limit`` the count stops early at ``limit``.
    """
    g._check(x)
    if k < 0:
        raise GraphError("packing size must be non-negative")
    conflict = open_packing_conflicts(g)
    start = ((1 << g.n) - 1) & ~(1 << x)

    @lru_cache(maxsize=None)
    def count(cand: int, need: int) -> int:
        if need == 0:
            return 1
        if _popcount(cand) < need:
            return 0
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        total = count(rest & ~conflict[v], need - 1)
        if limit is not None and total >= limit:
            return total
        return total + count(rest, need)

    total = count(start, k)
    if limit is not None:
        total = min(total, limit)
    listing = None
    if total <= 2:
        listing = []

        def collect(chosen: int, cand: int, need: int) -> None:
            if need == 0:
                listing.append(_sorted_tuple(chosen))
                return
            if count(cand, need) == 0:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            rest = cand ^ low
            collect(chosen | low, rest & ~conflict[v], need - 1)
            collect(chosen, rest, need)

        collect(0, start, k)
        listing.sort()
    return total, listing


def unique_restricted_open_packing(g: Graph, k: int, x: int) -> bool:
    """Exactly one open packing of size ``k`` avoids ``x``."""
    return count_open_packings_avoiding(g, k, x, limit=2)[0] == 1


# -- matching -------------------------------------------------------------------


def max_matching(g: Graph, enumerate: bool = False) -> SolverResult:
    """Maximum matching by memoised branching on the lowest unmatched vertex.

    ``unique`` reports whether the maximum matching is unique. Witnesses are
    tuples of ``(u, v)`` edges with ``u < v``.
    """
    masks = g.masks

    def lowest_live(alive: int) -> tuple[int, int]:
        # drop vertices without a live neighbour; return (alive, lowest live vertex or -1)
        while alive:
            low = alive & -alive
            v = low.bit_length() - 1
            if masks[v] & alive:
                return alive, v
            alive ^= low
        return 0, -1

    @lru_cache(maxsize=None)
    def best(alive: int) -> tuple[int, tuple, int]:
        # (size, lexicographically smallest matching, number of optima capped at 2)
        alive, v = lowest_live(alive)
        if v < 0:
            return 0, (), 1
        low = 1 << v
        rest = alive ^ low
        size, edges, count = best(rest)
        options = [(size, edges, count)]
        for u in iter_bits(masks[v] & rest):
            s, e, c = best(rest & ~(1 << u))
            options.append((s + 1, ((v, u),) + e, c))
        top = max(o[0] for o in options)
        winners = [o for o in options if o[0] == top]
        edges = min(tuple(sorted(o[1])) for o in winners)
        return top, edges, min(2, sum(o[2] for o in winners))

    @lru_cache(maxsize=None)
    def every(alive: int) -> tuple[tuple, ...]:
        alive, v = lowest_live(alive)
        if v < 0:
            return ((),)
        rest = alive ^ (1 << v)
        top = best(alive)[0]
        out = list(every(rest)) if best(rest)[0] == top else []
        for u in iter_bits(masks[v] & rest):
            if best(rest & ~(1 << u))[0] + 1 == top:
                out += [((v, u),) + e for e in every(rest & ~(1 << u))]
        return tuple(out)

    full = (1 << g.n) - 1
    size, edges, count = best(full)
    listing = None
    if enumerate:
        listing = tuple(sorted(tuple(sorted(e)) for e in every(full)))
    best.cache_clear()
    return SolverResult(size, tuple(sorted(edges)), count == 1, listing)


# -- total domination -------------------------------------------------------------


class _TdsSearch:
    def __init__(self, g: Graph):
        self.masks = g.masks
        self.n = g.n
        self.full = (1 << g.n) - 1

    def _lower_bound(self, undominated: int, allowed: int) -> int:
        if not undominated:
            return 0
        cover = max((_popcount(self.masks[u] & undominated) for u in iter_bits(allowed)), default=0)
        if cover == 0:
            return self.n + 1
        return -(-_popcount(undominated) // cover)

    def search(self, limit: int, forced: int = 0, forbidden: int = 0,
               collect: Optional[list] = None) -> Optional[int]:
        """Smallest TDS of size <= limit under constraints, or all of size == limit if collecting."""
        masks = self.masks
        undominated = self.full
        for v in iter_bits(forced):
            undominated &= ~masks[v]
        best = [limit + 1, None]

        def rec(chosen: int, size: int, undominated: int, allowed: int) -> None:
            bound = best[0] if collect is None else limit + 1
            if size + self._lower_bound(undominated, allowed) >= bound:
                return
            if not undominated:
                if collect is not None:
                    collect.append(chosen)
                else:
                    best[0], best[1] = size, chosen
                return
            # undominated vertex with the fewest allowed dominators
            pick, options = -1, -1
            for v in iter_bits(undominated):
                c = masks[v] & allowed
                k = _popcount(c)
                if pick < 0 or k < _popcount(options):
                    pick, options = v, c
                    if k <= 1:
                        break
            for u in iter_bits(options):
                rec(chosen | 1 << u, size + 1, undominated & ~masks[u], allowed & ~(1 << u))
                allowed &= ~(1 << u)

        rec(forced, _popcount(forced), undominated, self.full & ~forced & ~forbidden)
        return best[1]


def total_domination_number(g: Graph, enumerate: bool = False) -> SolverResult:
    """Minimum total dominating set; requires a graph without isolated vertices."""
    if g.n == 0:
        return SolverResult(0, (), True, ((),) if enumerate else None)
    if has_isolated_vertex(g):
        raise DomainError("total domination is undefined for graphs with isolated vertices")
    search = _TdsSearch(g)
    k = _popcount(search.search(g.n))
    if enumerate:
        found: list[int] = []
        search.search(k, collect=found)
        sets = sorted(_sorted_tuple(m) for m in found)
        return SolverResult(k, sets[0], len(sets) == 1, tuple(sets))

    def find(forced: int, forbidden: int) -> Optional[int]:
        return search.search(k, forced, forbidden)

    witness = _lex_smallest(g.n, find)
    return SolverResult(k, witness, _other_solution(find, witness) is None)
