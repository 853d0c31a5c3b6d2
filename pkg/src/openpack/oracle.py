"""Exhaustive subset scans used as the reference for the branch-and-bound solvers.

Every subset of ``V`` (or, for matchings, every matching) is visited; nothing
is pruned. Practical up to about 20 vertices.
"""

from __future__ import annotations

from .graph_core import Graph, iter_bits
from .solvers import DomainError, SolverResult

MAX_ORACLE_N = 20


def _scan(g: Graph, compatible: list[int], maximize: bool = True) -> SolverResult:
    """Best subsets where every pair (u, v) satisfies ``v in compatible[u]``."""
    if g.n > MAX_ORACLE_N:
        raise ValueError(f"exhaustive scan limited to n <= {MAX_ORACLE_N}")
    valid = bytearray(1 << g.n)
    valid[0] = 1
    best, winners = 0, [0]
    for s in range(1, 1 << g.n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        if valid[rest] and not (rest & ~compatible[v]):
            valid[s] = 1
            size = bin(s).count("1")
            if size > best:
                best, winners = size, [s]
            elif size == best:
                winners.append(s)
    sets = sorted(tuple(iter_bits(s)) for s in winners)
    return SolverResult(best, sets[0], len(sets) == 1, tuple(sets))


def brute_open_packing(g: Graph) -> SolverResult:
    comp = [sum(1 << u for u in range(g.n) if not (g.masks[u] & g.masks[v]))
            for v in range(g.n)]
    return _scan(g, comp)


def brute_two_packing(g: Graph) -> SolverResult:
    closed = [g.masks[v] | 1 << v for v in range(g.n)]
    comp = [sum(1 << u for u in range(g.n) if not (closed[u] & closed[v]))
            for v in range(g.n)]
    return _scan(g, comp)


def brute_independent_set(g: Graph) -> SolverResult:
    comp = [((1 << g.n) - 1) & ~g.masks[v] for v in range(g.n)]
    return _scan(g, comp)


def brute_matching(g: Graph) -> SolverResult:
    """All matchings by include/exclude over the sorted edge list."""
    edges = g.edges()
    best: list = [0, []]

    def rec(i: int, used: int, chosen: list) -> None:
        if i == len(edges):
            if len(chosen) > best[0]:
                best[0], best[1] = len(chosen), [tuple(chosen)]
            elif len(chosen) == best[0]:
                best[1].append(tuple(chosen))
            return
        u, v = edges[i]
        if not (used >> u) & 1 and not (used >> v) & 1:
            chosen.append((u, v))
            rec(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()
        rec(i + 1, used, chosen)

    rec(0, 0, [])
    sets = sorted(best[1]) or [()]
    return SolverResult(best[0], sets[0], len(sets) == 1, tuple(sets))


def brute_total_domination(g: Graph) -> SolverResult:
    if g.n == 0:
        return SolverResult(0, (), True, ((),))
    if any(m == 0 for m in g.masks):
        raise DomainError("total domination is undefined for graphs with isolated vertices")
    full = (1 << g.n) - 1
    dominated = [0] * (1 << g.n)
    best, winners = g.n + 1, []
    for s in range(1, 1 << g.n):
        low = s & -s
        dominated[s] = dominated[s ^ low] | g.masks[low.bit_length() - 1]
        if dominated[s] == full:
            size = bin(s).count("1")
            if size < best:
                best, winners = size, [s]
            elif size == best:
                winners.append(s)
    sets = sorted(tuple(iter_bits(s)) for s in winners)
    return SolverResult(best, sets[0], len(sets) == 1, tuple(sets))


def brute_count_open_packings_avoiding(g: Graph, k: int, x: int) -> int:
    count = 0
    for s in range(1 << g.n):
        if (s >> x) & 1 or bin(s).count("1") != k:
            continue
        members = list(iter_bits(s))
        if all(not (g.masks[a] & g.masks[b]) for i, a in enumerate(members) for b in members[i + 1:]):
            count += 1
    return count
