"""Graph model, neighborhood primitives, set predicates and graph I/O.

Vertices are the integers ``0..n-1``. A :class:`Graph` is immutable; every
operation that changes structure returns a new graph. Adjacency is kept both
as frozensets (for readable code) and as integer bitmasks (for the solvers).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Invalid vertex, edge or graph for the requested operation."""


class ParseError(GraphError):
    """Malformed serialized graph; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(_to_mask(s) for s in nbrs)
        self._edges = tuple(sorted((u, v) for u in range(n) for v in nbrs[u] if u < v))

    # -- constructors -----------------------------------------------------

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((i, j) for i in range(n) for j in range(i + 1, n)))

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """K_{1,leaves} with center 0."""
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")

    # -- derived graphs ---------------------------------------------------

    def add_vertices(self, count: int, edges: Iterable[Sequence[int]] = ()) -> "Graph":
        """New graph with ``count`` fresh vertices ``n..n+count-1`` and extra edges."""
        return Graph(self.n + count, list(self._edges) + [tuple(e) for e in edges])

    def add_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self._edges) + [tuple(e) for e in edges])

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"{u}-{v} is not an edge")
        e = (min(u, v), max(u, v))
        return Graph(self.n, (f for f in self._edges if f != e))

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph on ``keep`` relabelled to ``0..k-1`` in increasing order.

        Returns the graph and the map old id -> new id.
        """
        kept = sorted(set(keep))
        for v in kept:
            self._check(v)
        index = {v: i for i, v in enumerate(kept)}
        edges = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(kept), edges), index

    def remove_vertices(self, drop: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        dropped = set(drop)
        return self.induced_subgraph(v for v in range(self.n) if v not in dropped)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of 0..n-1")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self._edges))

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def _to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _validate_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    members = frozenset(s)
    for v in members:
        g._check(v)
    return members


# -- neighborhoods and set predicates ---------------------------------------


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return g.adj[v] | {v}


def is_open_packing(g: Graph, s: Iterable[int]) -> bool:
    """True iff the open neighborhoods of distinct members are pairwise disjoint."""
    members = sorted(_validate_set(g, s))
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if g.masks[u] & g.masks[v]:
                return False
    return True


def is_two_packing(g: Graph, s: Iterable[int]) -> bool:
    """True iff the closed neighborhoods of distinct members are pairwise disjoint."""
    members = sorted(_validate_set(g, s))
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if (g.masks[u] | 1 << u) & (g.masks[v] | 1 << v):
                return False
    return True


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = _validate_set(g, s)
    return all(not (g.adj[v] & members) for v in members)


def is_matching(g: Graph, edges: Iterable[Sequence[int]]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_total_dominating(g: Graph, s: Iterable[int]) -> bool:
    """Every vertex has a neighbor in ``s``; always False if ``g`` has an isolated vertex."""
    members = _validate_set(g, s)
    return all(g.adj[v] & members for v in range(g.n))


def has_isolated_vertex(g: Graph) -> bool:
    return any(not a for a in g.adj)


# -- connectivity, distance, trees --------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    g._check(source)
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length, or ``None`` when ``u`` and ``v`` lie in different components."""
    g._check(v)
    return bfs_distances(g, u)[v]


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d is not None]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or all(d is not None for d in bfs_distances(g, 0))


def diameter(g: Graph) -> Optional[int]:
    """Largest distance, ``None`` for disconnected graphs, 0 for n <= 1."""
    best = 0
    for s in range(g.n):
        for d in bfs_distances(g, s):
            if d is None:
                return None
            best = max(best, d)
    return best


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_cut_edge(g: Graph, u: int, v: int) -> bool:
    """True iff removing ``uv`` disconnects ``u`` from ``v``."""
    return distance(g.remove_edge(u, v), u, v) is None


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if len(g.adj[v]) == 1)


def support_vertices(g: Graph) -> frozenset[int]:
    return frozenset(next(iter(g.adj[v])) for v in leaves(g))


def strong_support_vertices(g: Graph) -> frozenset[int]:
    """Vertices adjacent to at least two leaves."""
    lv = leaves(g)
    return frozenset(v for v in range(g.n) if len(g.adj[v] & lv) >= 2)


def tree_centers(g: Graph) -> list[int]:
    if not is_tree(g):
        raise GraphError("tree centers requested for a non-tree")
    if g.n <= 2:
        return list(range(g.n))
    deg = [len(a) for a in g.adj]
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def canonical_tree_code(g: Graph) -> bytes:
    """AHU encoding rooted at the center; equal codes iff the trees are isomorphic.

    Bicentral trees take the smaller of the two rooted encodings.
    """
    if not is_tree(g):
        raise GraphError("canonical_tree_code requires a tree")
    return min(_rooted_code(g, c) for c in tree_centers(g))


def _rooted_code(g: Graph, root: int) -> bytes:
    parent = [-1] * g.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in g.adj[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    codes: list[list[bytes]] = [[] for _ in range(g.n)]
    code = b""
    for u in reversed(order):
        code = b"1" + b"".join(sorted(codes[u])) + b"0"
        if u != root:
            codes[parent[u]].append(code)
    return code


# -- serialization -------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph6 supports at most 258047 vertices in this implementation")


def to_graph6(g: Graph) -> str:
    """graph6 string: size header, then the upper triangle column-wise, 6 bits per byte."""
    bits = []
    for j in range(1, g.n):
        mj = g.masks[j]
        for i in range(j):
            bits.append((mj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _g6_encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    base = 0
    if text.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
    data = text[base:]
    if not data:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", base + i)
    if data[0] == "~":
        if len(data) >= 2 and data[1] == "~":
            raise ParseError("graph6 sizes above 258047 are not supported", base + 1)
        if len(data) < 4:
            raise ParseError("truncated graph6 size header", base + len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(data[0]) - 63
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"graph6 body too short: need {nbytes} bytes", base + len(data))
    if len(body) > nbytes:
        raise ParseError("trailing data after graph6 body", base + pos + nbytes)
    value = 0
    for ch in body:
        value = (value << 6) | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise ParseError("non-zero padding bits in graph6 body", base + len(data) - 1)
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (value >> k) & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    """``n`` on the first line, then one ``u v`` line per edge (``u < v``, sorted)."""
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def from_edge_list(text: str) -> Graph:
    lines = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((offset, content))
        offset += len(raw.encode())
    if not lines:
        raise ParseError("edge list is empty", 0)
    off, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected vertex count, got {head!r}", off) from None
    if n < 0:
        raise ParseError("negative vertex count", off)
    edges = []
    for off, content in lines[1:]:
        parts = content.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {content!r}", off)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {content!r}", off) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} references a vertex >= n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        edges.append((u, v))
    return Graph(n, edges)


FORMATS = ("graph6", "edge-list")


def parse_graph(text: str, format: str = "graph6") -> Graph:
    if format == "graph6":
        return from_graph6(text.strip())
    if format == "edge-list":
        return from_edge_list(text)
    raise ValueError(f"unknown graph format {format!r}")


def write_graph(g: Graph, format: str = "graph6") -> str:
    if format == "graph6":
        return to_graph6(g)
    if format == "edge-list":
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {format!r}")


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from newline-delimited graph6 text; blank lines are skipped."""
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph]) -> str:
    return "".join(to_graph6(g) + "\n" for g in graphs)
