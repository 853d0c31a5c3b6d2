"""Exhaustive enumeration of small trees and graphs up to isomorphism."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional, Union

from .graph_core import Graph, canonical_tree_code, is_connected, read_graph6_stream

MAX_EXHAUSTIVE_N = 7

# Free trees by order (OEIS A000055), n = 0..20.
FREE_TREE_COUNTS = (1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159,
                    7741, 19320, 48629, 123867, 317955, 823065)
# All graphs (A000088) and connected graphs (A001349) by order, n = 0..7.
GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044)
CONNECTED_GRAPH_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853)


class CapacityError(ValueError):
    """Exhaustive generation requested beyond its cap without a corpus file."""


# -- isomorphism -------------------------------------------------------------------


def _vertex_invariants(g: Graph) -> list[tuple]:
    deg = [len(a) for a in g.adj]
    out = []
    for v in range(g.n):
        tri = sum(1 for a, b in combinations(sorted(g.adj[v]), 2) if b in g.adj[a])
        out.append((deg[v], tuple(sorted(deg[w] for w in g.adj[v])), tri))
    return out


def graph_invariant(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint (equal for isomorphic graphs)."""
    return (g.n, g.m, tuple(sorted(_vertex_invariants(g))))


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """A bijection ``phi`` with ``uv`` in E(g) iff ``phi[u]phi[v]`` in E(h), or None.

    Plain backtracking over vertices, candidates restricted to equal local invariants.
    """
    if g.n != h.n or g.m != h.m:
        return None
    ig, ih = _vertex_invariants(g), _vertex_invariants(h)
    if sorted(ig) != sorted(ih):
        return None
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    phi = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or ih[w] != ig[v]:
                continue
            if all((u in g.adj[v]) == (phi[u] in h.adj[w]) for u in order[:i]):
                phi[v], used[w] = w, True
                if extend(i + 1):
                    return True
                phi[v], used[w] = -1, False
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


# -- trees -----------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen: dict[bytes, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            grown = t.add_vertices(1, [(v, t.n)])
            code = canonical_tree_code(grown)
            if code not in seen:
                seen[code] = grown
    return tuple(seen[c] for c in sorted(seen))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices (leaf extension, canonical dedup)."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    yield from _trees(n)


def enumerate_trees_brute(n: int) -> list[Graph]:
    """Same classes as :func:`enumerate_trees`, deduplicated by explicit isomorphism search."""
    if n == 1:
        return [Graph(1)]
    reps: dict[tuple, list[Graph]] = {}
    for t in enumerate_trees_brute(n - 1):
        for v in range(t.n):
            grown = t.add_vertices(1, [(v, t.n)])
            bucket = reps.setdefault(graph_invariant(grown), [])
            if not any(are_isomorphic(grown, r) for r in bucket):
                bucket.append(grown)
    return [g for bucket in reps.values() for g in bucket]


# -- general graphs ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, by one-vertex augmentation."""
    if n == 0:
        return (Graph(0),)
    reps: dict[tuple, list[Graph]] = {}
    for g in _graphs(n - 1):
        for mask in range(1 << (n - 1)):
            grown = g.add_vertices(1, [(v, n - 1) for v in range(n - 1) if (mask >> v) & 1])
            bucket = reps.setdefault(graph_invariant(grown), [])
            if not any(are_isomorphic(grown, r) for r in bucket):
                bucket.append(grown)
    out = [g for bucket in reps.values() for g in bucket]
    out.sort(key=lambda g: (g.m, g.edges()))
    return tuple(out)


def enumerate_graphs(n: int, corpus: Optional[Union[str, Path]] = None) -> Iterator[Graph]:
    """All graphs of order ``n`` up to isomorphism (exhaustive for n <= 7, else from a corpus file)."""
    if corpus is not None:
        yield from (g for g in load_corpus(corpus) if g.n == n)
        return
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > MAX_EXHAUSTIVE_N:
        raise CapacityError(f"exhaustive generation is capped at n = {MAX_EXHAUSTIVE_N}; "
                            "supply a graph6 corpus file")
    yield from _graphs(n)


def enumerate_connected_graphs(n: int, corpus: Optional[Union[str, Path]] = None) -> Iterator[Graph]:
    if corpus is None and n < 1:
        raise ValueError("connected graphs need at least one vertex")
    yield from (g for g in enumerate_graphs(n, corpus) if is_connected(g))


def load_corpus(path: Union[str, Path]) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6_stream(fh))
