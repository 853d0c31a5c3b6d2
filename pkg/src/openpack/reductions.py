"""Graph constructions relating open packings, 2-packings and independent sets.

Vertex numbering is fixed so outputs are deterministic and diffable:
original vertices keep their ids and come first; added vertices follow,
grouped per original vertex (or per edge, in sorted edge order) in the order
the construction names them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .graph_core import Graph, GraphError, bfs_distances, is_connected
from .solvers import max_independent_set, max_matching, max_open_packing

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionOutput:
    """Constructed graph plus the role of every vertex.

    Roles are tuples: ``("original", u)``, ``("edge", u, v)``,
    ``("gadget", u, name)`` with name in u1..u3' , ``("product", i, j)``,
    ``("b", i, j)``, ``("c", i, j)`` and ``("join", k)``.
    """

    graph: Graph
    vertex_map: dict[int, tuple]

    def vertex_map_json(self) -> dict[str, list]:
        return {str(v): list(role) for v, role in sorted(self.vertex_map.items())}


def _originals(g: Graph) -> dict[int, tuple]:
    return {v: ("original", v) for v in range(g.n)}


def subdivision(g: Graph) -> ReductionOutput:
    """S(g): every edge ``uv`` replaced by a path ``u - v_e - v``."""
    roles = _originals(g)
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        ve = g.n + k
        roles[ve] = ("edge", u, v)
        edges += [(u, ve), (ve, v)]
    return ReductionOutput(Graph(g.n + g.m, edges), roles)


def clique_extension(g: Graph) -> ReductionOutput:
    """g': one vertex per edge, adjacent to the edge's ends, all edge-vertices forming a clique."""
    if not is_connected(g):
        raise GraphError("clique_extension requires a connected graph")
    out = subdivision(g)
    clique = range(g.n, g.n + g.m)
    extra = [(a, b) for a in clique for b in clique if a < b]
    return ReductionOutput(out.graph.add_edges(list(g.edges()) + extra), out.vertex_map)


_GADGET_NAMES = ("u1", "u2", "u3", "u1'", "u2'", "u3'")


def gadget_plus(g: Graph) -> ReductionOutput:
    """g+: six gadget vertices per original vertex (ids ``n + 6u + 0..5``)."""
    n = g.n
    roles = _originals(g)

    def gid(u: int, k: int) -> int:
        return n + 6 * u + k

    edges = list(g.edges())
    for u in range(n):
        for k, name in enumerate(_GADGET_NAMES):
            roles[gid(u, k)] = ("gadget", u, name)
        for i in range(3):
            edges.append((gid(u, i), u))
            edges.append((gid(u, i), gid(u, i + 3)))
            for j in range(i + 1, 3):
                edges.append((gid(u, i), gid(u, j)))
    for u, v in g.edges():
        edges.append((gid(u, 3), v))
        edges.append((gid(v, 3), u))
    return ReductionOutput(Graph(7 * n, edges), roles)


def product_gadget(g: Graph) -> ReductionOutput:
    """g*: the Cartesian product with K_n, plus a pendant ``b_ij - c_ij`` at each off-diagonal cell.

    ``(a_i, v_j)`` has id ``i*n + j``. Then for each ``i`` and each ``j != i``
    in increasing order come ``b_ij`` and ``c_ij``. The ``b_ij`` sharing
    ``i`` form a clique.
    """
    n = g.n
    if n < 2:
        raise GraphError("product_gadget requires at least 2 vertices")
    roles: dict[int, tuple] = {}
    edges = []
    for i in range(n):
        for j in range(n):
            roles[i * n + j] = ("product", i, j)
    for k in range(n):
        for a, b in g.edges():
            edges.append((a * n + k, b * n + k))
    for i in range(n):
        for k in range(n):
            for l in range(k + 1, n):
                edges.append((i * n + k, i * n + l))
    nxt = n * n
    for i in range(n):
        bs = []
        for j in range(n):
            if j == i:
                continue
            b, c = nxt, nxt + 1
            nxt += 2
            roles[b] = ("b", i, j)
            roles[c] = ("c", i, j)
            edges += [(b, c), (b, i * n + j)]
            bs.append(b)
        edges += [(p, q) for p in bs for q in bs if p < q]
    return ReductionOutput(Graph(nxt, edges), roles)


def square(g: Graph) -> ReductionOutput:
    """g^2: edges between every pair at distance 1 or 2."""
    edges = []
    for u in range(g.n):
        for v, d in enumerate(bfs_distances(g, u)):
            if v > u and d is not None and d <= 2:
                edges.append((u, v))
    return ReductionOutput(Graph(g.n, edges), _originals(g))


def join_empty(g: Graph, r: int) -> Graph:
    """g joined with r new independent vertices (ids ``n..n+r-1``), each adjacent to all of g."""
    if r < 0:
        raise GraphError("r must be non-negative")
    return g.add_vertices(r, [(u, g.n + k) for k in range(r) for u in range(g.n)])


def join_empty_output(g: Graph, r: int) -> ReductionOutput:
    roles = _originals(g)
    roles.update({g.n + k: ("join", k) for k in range(r)})
    return ReductionOutput(join_empty(g, r), roles)


def alpha_via_uniqueness_oracle(g: Graph) -> int:
    """Independence number from uniqueness queries alone.

    Descends ``r = n, n-1, ...`` and returns the first ``r`` for which the
    join with r independent vertices does not have a unique maximum
    independent set.
    """
    if g.n < 1:
        raise GraphError("alpha_via_uniqueness_oracle requires at least one vertex")
    if g.m == 0:
        log.info("edgeless input: returning n without descent")
        return g.n
    for r in range(g.n, 0, -1):
        if not max_independent_set(join_empty(g, r)).unique:
            return r
    raise AssertionError("descent passed r = 1 on a graph with an edge")


def check_subdivision_identity(g: Graph) -> bool:
    """rho_o(S(g)) == alpha(g) + alpha'(g), both sides by exact solvers."""
    lhs = max_open_packing(subdivision(g).graph).value
    return lhs == max_independent_set(g).value + max_matching(g).value
