"""Operations that grow graphs with a unique maximum open packing, and the tree recognizer.

Fresh vertices are numbered right after the existing ones, in the order
``a, b, c, d`` for Op1, ``a, b, c`` for Op2, ``a, b, c, a', b', c'`` for Op3.
Op4 adds the new leaf ``a`` first and the subdivision vertex ``b`` second.
Replaying a trace therefore reproduces the same labelled graph every time.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph_core import (
    Graph,
    GraphError,
    canonical_tree_code,
    is_cut_edge,
    is_tree,
    leaves,
    strong_support_vertices,
)
from .solvers import SolverResult, max_open_packing, unique_restricted_open_packing

Anchor = Union[int, tuple[int, int]]

ADDED_VERTICES = {1: 4, 2: 3, 3: 6, 4: 2}
PACKING_INCREASE = {1: 2, 2: 2, 3: 3, 4: 1}


class PreconditionError(ValueError):
    """An operation was requested where its precondition fails."""

    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


@dataclass(frozen=True)
class OperationStep:
    kind: int
    anchor: Anchor
    new_vertices: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ADDED_VERTICES:
            raise ValueError(f"unknown operation {self.kind}")
        if len(self.new_vertices) != ADDED_VERTICES[self.kind]:
            raise ValueError(f"Op{self.kind} adds {ADDED_VERTICES[self.kind]} vertices")

    def to_line(self) -> str:
        if self.kind == 4:
            anchor = f"{self.anchor[0]}-{self.anchor[1]}"
        else:
            anchor = str(self.anchor)
        return f"OP{self.kind} anchor={anchor} new={','.join(map(str, self.new_vertices))}"

    @classmethod
    def from_line(cls, line: str) -> "OperationStep":
        try:
            op, anchor, new = line.split()
            if not (op.startswith("OP") and anchor.startswith("anchor=") and new.startswith("new=")):
                raise ValueError
            kind = int(op[2:])
            a = anchor[len("anchor="):]
            parsed: Anchor = tuple(int(p) for p in a.split("-")) if kind == 4 else int(a)
            ids = tuple(int(p) for p in new[len("new="):].split(","))
        except ValueError:
            raise ValueError(f"malformed trace line {line!r}") from None
        return cls(kind, parsed, ids)

    def to_json(self) -> dict:
        anchor = list(self.anchor) if isinstance(self.anchor, tuple) else self.anchor
        return {"op": self.kind, "anchor": anchor, "new": list(self.new_vertices)}


@dataclass(frozen=True)
class ConstructionTrace:
    """Steps building a tree from the base path P1 or P2."""

    steps: tuple[OperationStep, ...] = ()
    base: int = 2

    def replay(self, check: bool = True) -> Graph:
        """Rebuild the tree; with ``check`` every step's precondition is verified by the solver."""
        g = Graph.path(self.base)
        if self.base == 1 and self.steps:
            raise PreconditionError("no operation applies to P1")
        for step in self.steps:
            g, done = apply_step(g, step.kind, step.anchor, check=check)
            if done.new_vertices != step.new_vertices:
                raise ValueError(f"step {step.to_line()} expected new ids {done.new_vertices}")
        return g

    def to_text(self) -> str:
        return "\n".join([f"BASE P{self.base}"] + [s.to_line() for s in self.steps])

    @classmethod
    def from_text(cls, text: str) -> "ConstructionTrace":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        base = 2
        if lines and lines[0].startswith("BASE"):
            base = {"BASE P1": 1, "BASE P2": 2}.get(lines[0])
            if base is None:
                raise ValueError(f"bad base line {lines[0]!r}")
            lines = lines[1:]
        return cls(tuple(OperationStep.from_line(ln) for ln in lines), base)

    def to_json(self) -> dict:
        return {"base": f"P{self.base}", "steps": [s.to_json() for s in self.steps]}


# -- operations ---------------------------------------------------------------------


def _certify(g: Graph, certificate: Optional[SolverResult]) -> frozenset[int]:
    res = certificate if certificate is not None else max_open_packing(g)
    if not res.unique:
        raise PreconditionError("graph does not have a unique maximum open packing")
    return frozenset(res.witness)


def _touches(g: Graph, x: int, u: frozenset[int]) -> bool:
    return bool(g.adj[x] & u)


def _normalize_edge(anchor: Anchor) -> tuple[int, int]:
    x, y = anchor
    return (min(x, y), max(x, y))


def check_step(g: Graph, kind: int, anchor: Anchor,
               certificate: Optional[SolverResult] = None) -> None:
    """Raise :class:`PreconditionError` naming the first failed clause."""
    u = _certify(g, certificate)
    if kind in (1, 2, 3):
        if not isinstance(anchor, int):
            raise PreconditionError(f"Op{kind} is anchored at a vertex")
        g._check(anchor)
        x = anchor
        if kind == 2:
            if x in u:
                raise PreconditionError(f"Op2: vertex {x} belongs to U(G)")
        elif x not in u:
            raise PreconditionError(f"Op{kind}: vertex {x} does not belong to U(G)")
        if not _touches(g, x, u):
            raise PreconditionError(f"Op{kind}: no neighbor of {x} belongs to U(G)")
        if kind == 3 and not unique_restricted_open_packing(g, len(u) - 1, x):
            raise PreconditionError(
                f"Op3: G does not have exactly one open packing of size {len(u) - 1} avoiding {x}")
    elif kind == 4:
        if isinstance(anchor, int) or len(anchor) != 2:
            raise PreconditionError("Op4 is anchored at an edge")
        x, y = anchor
        if not g.has_edge(x, y):
            raise PreconditionError(f"Op4: {x}-{y} is not an edge")
        if not is_cut_edge(g, x, y):
            raise PreconditionError(f"Op4: {x}-{y} is not a cut edge")
        for w in (x, y):
            if w in u:
                raise PreconditionError(f"Op4: vertex {w} belongs to U(G)")
            if not _touches(g, w, u):
                raise PreconditionError(f"Op4: no neighbor of {w} belongs to U(G)")
    else:
        raise PreconditionError(f"unknown operation {kind}")


def build_step(g: Graph, kind: int, anchor: Anchor) -> tuple[Graph, OperationStep]:
    """Apply the operation's construction without checking preconditions."""
    n = g.n
    new = tuple(range(n, n + ADDED_VERTICES[kind]))
    if kind == 1:
        a, b, c, d = new
        out = g.add_vertices(4, [(anchor, a), (a, b), (b, c), (c, d)])
    elif kind == 2:
        a, b, c = new
        out = g.add_vertices(3, [(anchor, a), (a, b), (b, c)])
    elif kind == 3:
        a, b, c, a2, b2, c2 = new
        out = g.add_vertices(6, [(anchor, a), (a, b), (b, c), (anchor, a2), (a2, b2), (b2, c2)])
    elif kind == 4:
        x, y = anchor = _normalize_edge(anchor)
        a, b = new
        out = g.remove_edge(x, y).add_vertices(2, [(x, b), (b, y), (b, a)])
    else:
        raise PreconditionError(f"unknown operation {kind}")
    return out, OperationStep(kind, anchor, new)


def apply_step(g: Graph, kind: int, anchor: Anchor,
               certificate: Optional[SolverResult] = None,
               check: bool = True) -> tuple[Graph, OperationStep]:
    if check:
        check_step(g, kind, anchor, certificate)
    return build_step(g, kind, anchor)


def apply_op1(g: Graph, x: int, certificate: Optional[SolverResult] = None) -> Graph:
    """Append a P4 at ``x``; needs ``x`` and one of its neighbors in U(g)."""
    return apply_step(g, 1, x, certificate)[0]


def apply_op2(g: Graph, x: int, certificate: Optional[SolverResult] = None) -> Graph:
    """Append a P3 at ``x``; needs ``x`` outside U(g) with a neighbor inside."""
    return apply_step(g, 2, x, certificate)[0]


def apply_op3(g: Graph, x: int, certificate: Optional[SolverResult] = None) -> Graph:
    """Append two P3s at ``x``.

    Needs ``x`` and a neighbor in U(g) and exactly one open packing of size
    ``rho_o(g) - 1`` that avoids ``x``.
    """
    return apply_step(g, 3, x, certificate)[0]


def apply_op4(g: Graph, edge: tuple[int, int], certificate: Optional[SolverResult] = None) -> Graph:
    """Subdivide the cut edge ``xy`` and hang a leaf on the new vertex."""
    return apply_step(g, 4, edge, certificate)[0]


def expected_unique_set(kind: int, u: frozenset[int], step: OperationStep) -> frozenset[int]:
    """U of the grown graph as each operation's soundness argument predicts."""
    new = step.new_vertices
    if kind == 1:
        return u | {new[2], new[3]}
    if kind == 2:
        return u | {new[1], new[2]}
    if kind == 3:
        return (u - {step.anchor}) | {new[1], new[2], new[4], new[5]}
    return u | {new[0]}


def eligible_steps(g: Graph, certificate: Optional[SolverResult] = None) -> list[tuple[int, Anchor]]:
    """Every (operation, anchor) whose preconditions hold on ``g``."""
    u = _certify(g, certificate)
    k = len(u)
    out: list[tuple[int, Anchor]] = []
    touched = [v for v in range(g.n) if _touches(g, v, u)]
    for x in touched:
        if x in u:
            out.append((1, x))
    for x in touched:
        if x not in u:
            out.append((2, x))
    for x in touched:
        if x in u and unique_restricted_open_packing(g, k - 1, x):
            out.append((3, x))
    for x, y in g.edges():
        if x in u or y in u or not (_touches(g, x, u) and _touches(g, y, u)):
            continue
        if is_cut_edge(g, x, y):
            out.append((4, (x, y)))
    return out


# -- class O ----------------------------------------------------------------------


@dataclass(frozen=True)
class ClassMember:
    graph: Graph
    trace: ConstructionTrace
    code: bytes = field(repr=False)


def generate_class_O(max_n: int) -> list[ClassMember]:
    """Closure of P2 under Operations 1-4 up to ``max_n`` vertices, plus P1.

    One representative per isomorphism class (the first one discovered),
    sorted by order and then canonical code.
    """
    if max_n < 1:
        raise ValueError("max_n must be positive")
    members: dict[bytes, ClassMember] = {}
    p1 = Graph.path(1)
    members[canonical_tree_code(p1)] = ClassMember(p1, ConstructionTrace((), 1), canonical_tree_code(p1))
    if max_n >= 2:
        p2 = Graph.path(2)
        code = canonical_tree_code(p2)
        members[code] = ClassMember(p2, ConstructionTrace((), 2), code)
        buckets: dict[int, list[ClassMember]] = defaultdict(list)
        buckets[2].append(members[code])
        for n in range(2, max_n + 1):
            for m in buckets.pop(n, []):
                cert = max_open_packing(m.graph)
                for kind, anchor in eligible_steps(m.graph, cert):
                    if n + ADDED_VERTICES[kind] > max_n:
                        continue
                    grown, step = build_step(m.graph, kind, anchor)
                    c = canonical_tree_code(grown)
                    if c not in members:
                        child = ClassMember(grown, ConstructionTrace(m.trace.steps + (step,), 2), c)
                        members[c] = child
                        buckets[grown.n].append(child)
    return sorted(members.values(), key=lambda m: (m.graph.n, m.code))


# -- structural obstructions -----------------------------------------------------------


def has_strong_support(g: Graph) -> bool:
    return bool(strong_support_vertices(g))


def no21_configurations(g: Graph) -> list[tuple[int, int, int, int]]:
    """Tuples (leaf l, its support x, leaf z, its support y) with N(y) = {z, x}."""
    lv = leaves(g)
    found = []
    for z in sorted(lv):
        (y,) = g.adj[z]
        if len(g.adj[y]) != 2:
            continue
        (x,) = g.adj[y] - {z}
        for ell in sorted(g.adj[x] & lv):
            found.append((ell, x, z, y))
    return found


def no22_configurations(g: Graph) -> list[tuple[int, int, int, int, int]]:
    """Tuples (l1, y1, l2, y2, x) with N(y1) = {l1, x} and N(y2) = {l2, x}."""
    lv = leaves(g)
    arms: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for ell in sorted(lv):
        (y,) = g.adj[ell]
        if len(g.adj[y]) == 2:
            (x,) = g.adj[y] - {ell}
            arms[x].append((ell, y))
    found = []
    for x, items in sorted(arms.items()):
        for i, (l1, y1) in enumerate(items):
            for l2, y2 in items[i + 1:]:
                if y1 != y2:
                    found.append((l1, y1, l2, y2, x))
    return found


def forbidden_configuration(g: Graph) -> Optional[str]:
    """Name of a local structure that rules out a unique maximum open packing, if present."""
    if has_strong_support(g):
        return "strong-support"
    if no21_configurations(g):
        return "forbidden-21"
    if no22_configurations(g):
        return "forbidden-22"
    return None


# -- recognizer ------------------------------------------------------------------------


def l_graph(t: Graph) -> tuple[Graph, list[int]]:
    """Tree on the vertices of degree >= 3, joined when linked through degree-2 vertices only.

    Returns the tree and, for each of its vertices, the original vertex.
    """
    if not is_tree(t):
        raise GraphError("l_graph requires a tree")
    branch = [v for v in range(t.n) if len(t.adj[v]) >= 3]
    if not branch:
        raise GraphError("l_graph requires maximum degree at least 3")
    index = {v: i for i, v in enumerate(branch)}
    edges = set()
    for p in branch:
        for w in t.adj[p]:
            prev, cur = p, w
            while len(t.adj[cur]) == 2:
                (nxt,) = t.adj[cur] - {prev}
                prev, cur = cur, nxt
            if len(t.adj[cur]) >= 3:
                edges.add((min(index[p], index[cur]), max(index[p], index[cur])))
    return Graph(len(branch), edges), branch


def _branches(t: Graph, x: int) -> tuple[list[list[int]], list[int]]:
    """Pendant paths at ``x`` (vertex lists walking away from x) and the non-path neighbors."""
    paths, others = [], []
    for w in sorted(t.adj[x]):
        prev, cur, walk = x, w, [w]
        while len(t.adj[cur]) == 2:
            (nxt,) = t.adj[cur] - {prev}
            prev, cur = cur, nxt
            walk.append(cur)
        if len(t.adj[cur]) == 1:
            paths.append(walk)
        else:
            others.append(w)
    return paths, others


@dataclass
class _Built:
    steps: list[OperationStep]
    base: int
    graph: Graph
    phi: list[int]  # input-tree vertex -> vertex of ``graph``


class _Recognizer:
    def __init__(self, stats: Optional[dict]):
        self.stats = stats if stats is not None else {}
        self.stats.setdefault("solver_calls", 0)

    def _extend(self, built: _Built, kind: int, anchor: Anchor) -> Optional[tuple[Graph, OperationStep]]:
        """Apply an operation to the replayed smaller tree if its preconditions hold."""
        cert = max_open_packing(built.graph)
        self.stats["solver_calls"] += 1 + (kind == 3)
        try:
            return apply_step(built.graph, kind, anchor, cert)
        except PreconditionError:
            return None

    def run(self, t: Graph) -> Optional[_Built]:
        n = t.n
        if n <= 2:
            return _Built([], n, Graph.path(n), list(range(n)))
        if forbidden_configuration(t) is not None:
            return None
        if t.max_degree() <= 2:
            return self._path(t)
        lt, lmap = l_graph(t)
        x = lmap[0] if lt.n == 1 else min(lmap[i] for i in range(lt.n) if len(lt.adj[i]) == 1)
        paths, others = _branches(t, x)
        long = [p for p in paths if len(p) >= 4]
        if long:
            return self._claim0(t, long[0])
        threes = [p for p in paths if len(p) == 3]
        if len(threes) >= 2:
            return self._claim33(t, x, threes[0], threes[1])
        shorts = [p for p in paths if len(p) < 3]
        if len(threes) == 1 and len(shorts) == 1 and len(others) == 1 and len(t.adj[x]) == 3:
            if len(shorts[0]) == 1:
                return self._claim31(t, x, threes[0], shorts[0][0], others[0])
            return self._claim32(t, x, threes[0])
        return None

    def _grow(self, t: Graph, drop: list[int], kind: int, anchor_in_t: Anchor,
              roles: dict[int, int], extra_edge: Optional[tuple[int, int]] = None) -> Optional[_Built]:
        """Recognize the reduced tree, then redo ``kind`` on its replay.

        ``roles`` maps each dropped vertex of ``t`` to its position among the
        operation's fresh vertices, which yields the isomorphism onto the replay.
        """
        smaller, index = t.remove_vertices(drop)
        if extra_edge is not None:
            smaller = smaller.add_edges([(index[extra_edge[0]], index[extra_edge[1]])])
        built = self.run(smaller)
        if built is None:
            return None
        if kind == 4:
            anchor: Anchor = tuple(built.phi[index[a]] for a in anchor_in_t)
        else:
            anchor = built.phi[index[anchor_in_t]]
        done = self._extend(built, kind, anchor)
        if done is None:
            return None
        grown, step = done
        phi = [0] * t.n
        for v, i in index.items():
            phi[v] = built.phi[i]
        for v, pos in roles.items():
            phi[v] = step.new_vertices[pos]
        return _Built(built.steps + [step], built.base, grown, phi)

    def _path(self, t: Graph) -> Optional[_Built]:
        if t.n % 4 != 2:
            return None
        end = min(leaves(t))
        walk, _ = _branches(t, end)
        return self._claim0(t, walk[0])

    def _claim0(self, t: Graph, path: list[int]) -> Optional[_Built]:
        # path = u1..uk away from x (or from a path end); strip u_{k-3}..u_k, Op1 at u_{k-4}
        k = len(path)
        drop = path[k - 4:]
        anchor = path[k - 5] if k >= 5 else self._root_of(t, path)
        return self._grow(t, drop, 1, anchor, {v: i for i, v in enumerate(drop)})

    @staticmethod
    def _root_of(t: Graph, path: list[int]) -> int:
        (root,) = t.adj[path[0]] - ({path[1]} if len(path) > 1 else set())
        return root

    def _claim33(self, t: Graph, x: int, p1: list[int], p2: list[int]) -> Optional[_Built]:
        via_op2 = self._grow(t, p1, 2, x, {v: i for i, v in enumerate(p1)})
        if via_op2 is not None:
            return via_op2
        drop = p1 + p2
        return self._grow(t, drop, 3, x, {v: i for i, v in enumerate(drop)})

    def _claim31(self, t: Graph, x: int, p3: list[int], e: int, y: int) -> Optional[_Built]:
        a = p3[0]
        # new leaf takes the role of e, subdivision vertex the role of x
        return self._grow(t, [x, e], 4, (a, y), {e: 0, x: 1}, extra_edge=(a, y))

    def _claim32(self, t: Graph, x: int, p3: list[int]) -> Optional[_Built]:
        return self._grow(t, p3, 2, x, {v: i for i, v in enumerate(p3)})


def recognize_tree(t: Graph, stats: Optional[dict] = None) -> Optional[ConstructionTrace]:
    """Construction trace from P1/P2 when ``t`` has a unique maximum open packing, else None.

    Uniqueness questions that arise along the way (operation preconditions)
    are settled with the exact solver. ``stats['solver_calls']`` counts them.
    """
    return recognize_tree_with_map(t, stats)[0]


def recognize_tree_with_map(t: Graph, stats: Optional[dict] = None
                            ) -> tuple[Optional[ConstructionTrace], Optional[list[int]]]:
    """Like :func:`recognize_tree`, also returning the map from ``t`` onto the replayed tree."""
    if not is_tree(t):
        raise GraphError("recognize_tree requires a tree")
    built = _Recognizer(stats).run(t)
    if built is None:
        return None, None
    return ConstructionTrace(tuple(built.steps), built.base), built.phi
