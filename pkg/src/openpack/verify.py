"""Exhaustive checks of the structural results over small-graph corpora.

Each check is one registry entry: an id, the corpus it runs on by default,
and a predicate applied to every graph of the corpus. A predicate returns
``(instances, failures)`` where every failure is an ``(expected, actual)``
pair of JSON-serialisable values. Reports are emitted as JSON lines.
"""

from __future__ import annotations

import json
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Iterable, Optional

from . import oracle
from .enumeration import enumerate_connected_graphs, enumerate_graphs, enumerate_trees, load_corpus
from .graph_core import (
    Graph,
    canonical_tree_code,
    from_graph6,
    has_isolated_vertex,
    is_connected,
    is_tree,
    leaves,
    strong_support_vertices,
    to_graph6,
)
from .reductions import (
    alpha_via_uniqueness_oracle,
    clique_extension,
    gadget_plus,
    product_gadget,
    square,
    subdivision,
)
from .solvers import (
    max_independent_set,
    max_matching,
    max_open_packing,
    max_two_packing,
    total_domination_number,
)
from .tree_ops import (
    PACKING_INCREASE,
    build_step,
    eligible_steps,
    expected_unique_set,
    generate_class_O,
    no21_configurations,
    no22_configurations,
    recognize_tree_with_map,
)

Failure = tuple[Any, Any]
Outcome = tuple[int, list[Failure]]


# -- corpora ---------------------------------------------------------------------------

CORPUS_KINDS = ("trees", "graphs", "connected", "paths", "class-O", "file")

_CORPUS_RE = re.compile(
    r"^\s*(?P<kind>trees|graphs|connected graphs|connected|paths|class-O)\s+"
    r"(?:(?P<lo>\d+)\s*(?:<=|≤)\s*)?n\s*(?:<=|≤)\s*(?P<hi>\d+)\s*$")


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    max_n: int = 0
    min_n: int = 1
    path: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> "CorpusSpec":
        """Accepts e.g. ``trees n<=14``, ``graphs 2<=n<=4``, ``connected graphs n ≤ 7``, ``file:corpus.g6``."""
        if text.startswith("file:"):
            return cls("file", path=text[len("file:"):])
        m = _CORPUS_RE.match(text)
        if not m:
            raise ValueError(f"unrecognised corpus description {text!r}")
        kind = "connected" if m["kind"].startswith("connected") else m["kind"]
        return cls(kind, int(m["hi"]), int(m["lo"]) if m["lo"] else 1)

    def __str__(self) -> str:
        if self.kind == "file":
            return f"file:{self.path}"
        name = "connected graphs" if self.kind == "connected" else self.kind
        lo = f"{self.min_n}<=" if self.min_n > 1 else ""
        return f"{name} {lo}n<={self.max_n}"

    def graphs(self) -> Iterable[Graph]:
        if self.kind == "file":
            yield from load_corpus(self.path)
            return
        for n in range(self.min_n, self.max_n + 1):
            if self.kind == "trees":
                yield from enumerate_trees(n)
            elif self.kind == "graphs":
                yield from enumerate_graphs(n)
            elif self.kind == "connected":
                yield from enumerate_connected_graphs(n)
            elif self.kind == "paths":
                yield Graph.path(n)
        if self.kind == "class-O":
            yield from (m.graph for m in generate_class_O(self.max_n) if m.graph.n >= self.min_n)


# -- report ----------------------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem_id: str
    corpus_spec: str
    instances_checked: int = 0
    failures: list[tuple[str, Any, Any]] = field(default_factory=list)
    wall_time: float = 0.0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.failures

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "corpus_spec": self.corpus_spec,
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "failures": [list(f) for f in self.failures],
            "wall_time": round(self.wall_time, 3),
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# -- predicates ------------------------------------------------------------------------


def _check_oracle_equivalence(g: Graph, ctx: Any = None) -> Outcome:
    if g.n > oracle.MAX_ORACLE_N:
        return 0, []
    failures = []
    pairs = [
        ("rho-o", max_open_packing, oracle.brute_open_packing),
        ("rho", max_two_packing, oracle.brute_two_packing),
        ("alpha", max_independent_set, oracle.brute_independent_set),
        ("alpha-prime", max_matching, oracle.brute_matching),
    ]
    if not has_isolated_vertex(g):
        pairs.append(("gamma-t", total_domination_number, oracle.brute_total_domination))
    for name, fast, slow in pairs:
        a, b = fast(g), slow(g)
        got = [name, a.value, a.unique]
        want = [name, b.value, b.unique]
        if got != want or a.witness not in b.all_witnesses:
            failures.append((want, got + [[list(w) if isinstance(w, tuple) else w for w in a.witness]]))
    return 1, failures


def _check_rall(g: Graph, ctx: Any = None) -> Outcome:
    if not is_tree(g) or g.n < 2:
        return 0, []
    a, b = max_open_packing(g).value, total_domination_number(g).value
    return 1, [] if a == b else [(["gamma_t == rho_o"], [b, a])]


def _check_tdom_bound(g: Graph, ctx: Any = None) -> Outcome:
    if g.n == 0 or has_isolated_vertex(g):
        return 0, []
    a, b = max_open_packing(g).value, total_domination_number(g).value
    return 1, [] if b >= a else [(["gamma_t >= rho_o"], [b, a])]


def _check_leaf_lemma(g: Graph, ctx: Any = None) -> Outcome:
    res = max_open_packing(g)
    if not res.unique:
        return 1, []
    missing = sorted(leaves(g) - set(res.witness))
    return 1, [] if not missing else [("leaves in U(G)", missing)]


def _check_no_strong_support(g: Graph, ctx: Any = None) -> Outcome:
    res = max_open_packing(g)
    bad = sorted(strong_support_vertices(g)) if res.unique else []
    return 1, [] if not bad else [("no strong support vertex", bad)]


def _check_forbidden(finder: Callable, g: Graph, ctx: Any = None) -> Outcome:
    configs = finder(g)
    if not configs:
        return 0, []
    unique = max_open_packing(g).unique
    return 1, [] if not unique else [("not unique", ["unique", list(configs[0])])]


def _check_forbidden21(g: Graph, ctx: Any = None) -> Outcome:
    return _check_forbidden(no21_configurations, g)


def _check_forbidden22(g: Graph, ctx: Any = None) -> Outcome:
    return _check_forbidden(no22_configurations, g)


def _check_op_sound(kind: int, g: Graph, ctx: Any = None) -> Outcome:
    cert = max_open_packing(g)
    if not cert.unique:
        return 1, [("member of C_rho_o", "not unique")]
    u = frozenset(cert.witness)
    instances, failures = 0, []
    for k, anchor in eligible_steps(g, cert):
        if k != kind:
            continue
        instances += 1
        grown, step = build_step(g, k, anchor)
        res = max_open_packing(grown)
        want = [cert.value + PACKING_INCREASE[kind], True, sorted(expected_unique_set(kind, u, step))]
        got = [res.value, res.unique, list(res.witness)]
        if got != want:
            failures.append(([step.to_line()] + want, got))
    return instances, failures


def _check_path_law(g: Graph, ctx: Any = None) -> Outcome:
    n = g.n
    expected = n == 1 or n % 4 == 2
    unique = max_open_packing(g).unique
    recognized = recognize_tree_with_map(g)[0] is not None
    if unique == expected == recognized:
        return 1, []
    return 1, [(expected, {"solver": unique, "recognizer": recognized})]


def _check_main_theorem(g: Graph, ctx: Any) -> Outcome:
    if not is_tree(g):
        return 0, []
    unique = max_open_packing(g).unique
    generated = canonical_tree_code(g) in ctx
    return 1, [] if unique == generated else [({"unique": unique}, {"generated": generated})]


def _check_recognizer(g: Graph, ctx: Any = None) -> Outcome:
    if not is_tree(g):
        return 0, []
    unique = max_open_packing(g).unique
    trace, phi = recognize_tree_with_map(g)
    if (trace is not None) != unique:
        return 1, [({"unique": unique}, {"recognized": trace is not None})]
    if trace is not None:
        try:
            replayed = trace.replay(check=True)
        except ValueError as exc:
            return 1, [("replay with preconditions", str(exc))]
        same = replayed.n == g.n and all(replayed.has_edge(phi[a], phi[b]) for a, b in g.edges())
        if not same:
            return 1, [("isomorphic replay", trace.to_text())]
    return 1, []


def _check_subdivision(g: Graph, ctx: Any = None) -> Outcome:
    lhs = max_open_packing(subdivision(g).graph).value
    rhs = max_independent_set(g).value + max_matching(g).value
    return 1, [] if lhs == rhs else [(rhs, lhs)]


def _check_gprime(g: Graph, ctx: Any = None) -> Outcome:
    if not is_connected(g) or g.n == 0:
        return 0, []
    lhs = max_open_packing(clique_extension(g).graph).value
    rhs = max_two_packing(g).value
    return 1, [] if lhs == rhs else [(rhs, lhs)]


def _check_gplus(g: Graph, ctx: Any = None) -> Outcome:
    lhs = max_two_packing(gadget_plus(g).graph).value
    rhs = 2 * g.n + max_open_packing(g).value
    return 1, [] if lhs == rhs else [(rhs, lhs)]


def _check_gstar(g: Graph, ctx: Any = None) -> Outcome:
    if g.n < 2:
        return 0, []
    lhs = max_two_packing(product_gadget(g).graph).value
    rhs = g.n * (g.n - 1) + max_independent_set(g).value
    return 1, [] if lhs == rhs else [(rhs, lhs)]


def _check_square(g: Graph, ctx: Any = None) -> Outcome:
    lhs = max_independent_set(square(g).graph).value
    rhs = max_two_packing(g).value
    return 1, [] if lhs == rhs else [(rhs, lhs)]


# hard caps for the transfer clauses (constructed graphs grow quadratically)
TRANSFER_CAPS = {"gprime": 6, "gplus": 4, "gstar": 4, "square": 7}


def _check_transfers(g: Graph, ctx: Any = None) -> Outcome:
    instances, failures = 0, []

    def clause(name: str, left: bool, right: bool) -> None:
        nonlocal instances
        instances += 1
        if left != right:
            failures.append((name, {"g": left, "constructed": right}))

    n = g.n
    if 1 <= n <= TRANSFER_CAPS["gprime"] and is_connected(g):
        clause("C_rho(g) <=> C_rho_o(g')", max_two_packing(g).unique,
               max_open_packing(clique_extension(g).graph).unique)
    if n <= TRANSFER_CAPS["gplus"]:
        clause("C_rho_o(g) <=> C_rho(g+)", max_open_packing(g).unique,
               max_two_packing(gadget_plus(g).graph).unique)
    if 2 <= n <= TRANSFER_CAPS["gstar"]:
        clause("C_alpha(g) <=> C_rho(g*)", max_independent_set(g).unique,
               max_two_packing(product_gadget(g).graph).unique)
    if n <= TRANSFER_CAPS["square"]:
        clause("C_rho(g) <=> C_alpha(g^2)", max_two_packing(g).unique,
               max_independent_set(square(g).graph).unique)
    return instances, failures


def _check_join_alpha(g: Graph, ctx: Any = None) -> Outcome:
    if g.m == 0:
        return 0, []
    got, want = alpha_via_uniqueness_oracle(g), max_independent_set(g).value
    return 1, [] if got == want else [(want, got)]


def _check_roundtrip(g: Graph, ctx: Any = None) -> Outcome:
    text = to_graph6(g)
    back = from_graph6(text)
    ok = back.adj == g.adj and to_graph6(back) == text
    return 1, [] if ok else [(text, to_graph6(back))]


# -- registry ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    id: str
    predicate: Callable[..., Outcome]
    corpora: Callable[[int, int], list[CorpusSpec]]
    max_n: Optional[int] = None
    min_n: int = 1
    context: Optional[Callable[[CorpusSpec], Any]] = None


def _trees(lo: int = 1, cap: Optional[int] = None):
    return lambda t, g: [CorpusSpec("trees", min(t, cap) if cap else t, lo)]


def _graphs(kind: str = "graphs", lo: int = 1, cap: Optional[int] = None):
    return lambda t, g: [CorpusSpec(kind, min(g, cap) if cap else g, lo)]


def _generated_codes(spec: CorpusSpec) -> frozenset[bytes]:
    return frozenset(m.code for m in generate_class_O(spec.max_n))


CHECKS: dict[str, Check] = {}


def register(check: Check) -> Check:
    CHECKS[check.id] = check
    return check


for _c in [
    Check("oracle-equivalence", _check_oracle_equivalence,
          lambda t, g: [CorpusSpec("connected", g), CorpusSpec("trees", min(t, 12))]),
    Check("graph6-roundtrip", _check_roundtrip, _graphs(lo=0)),
    Check("rall-theorem", _check_rall, _trees(lo=2, cap=12)),
    Check("total-domination-bound", _check_tdom_bound, _graphs()),
    Check("leaf-lemma", _check_leaf_lemma, _graphs()),
    Check("no-strong-support", _check_no_strong_support, _graphs()),
    Check("forbidden-21", _check_forbidden21, _graphs()),
    Check("forbidden-22", _check_forbidden22, _graphs()),
    Check("op1-sound", partial(_check_op_sound, 1), lambda t, g: [CorpusSpec("class-O", min(t, 10), 2)]),
    Check("op2-sound", partial(_check_op_sound, 2), lambda t, g: [CorpusSpec("class-O", min(t, 10), 2)]),
    Check("op3-sound", partial(_check_op_sound, 3), lambda t, g: [CorpusSpec("class-O", min(t, 10), 2)]),
    Check("op4-sound", partial(_check_op_sound, 4), lambda t, g: [CorpusSpec("class-O", min(t, 10), 2)]),
    Check("path-law", _check_path_law, lambda t, g: [CorpusSpec("paths", 30, 2)]),
    Check("main-theorem", _check_main_theorem, _trees(), context=_generated_codes),
    Check("recognizer", _check_recognizer, _trees()),
    Check("subdivision-identity", _check_subdivision, _graphs()),
    Check("gprime-identity", _check_gprime, _graphs("connected", cap=6), max_n=6),
    Check("gplus-identity", _check_gplus, _graphs(cap=4), max_n=4),
    Check("gstar-identity", _check_gstar, _graphs(lo=2, cap=4), max_n=4, min_n=2),
    Check("square-identity", _check_square, _graphs()),
    Check("uniqueness-transfers", _check_transfers, _graphs()),
    Check("join-alpha", _check_join_alpha, _graphs(cap=6), max_n=6),
]:
    register(_c)


def _clamp(check: Check, spec: CorpusSpec) -> CorpusSpec:
    if spec.kind == "file":
        return spec
    hi = spec.max_n if check.max_n is None else min(spec.max_n, check.max_n)
    return CorpusSpec(spec.kind, hi, max(spec.min_n, check.min_n), spec.path)


def _evaluate(predicate: Callable[..., Outcome], ctx: Any, g: Graph) -> tuple[str, Outcome]:
    return to_graph6(g), predicate(g, ctx)


def run_check(theorem_id: str, corpus_spec: Optional[Any] = None, jobs: int = 1,
              max_tree_n: int = 14, max_graph_n: int = 7) -> VerificationReport:
    """Run one registered check; ``corpus_spec`` may be a :class:`CorpusSpec` or its text form."""
    if theorem_id not in CHECKS:
        raise KeyError(f"unknown check {theorem_id!r}")
    check = CHECKS[theorem_id]
    if corpus_spec is None:
        spec = check.corpora(max_tree_n, max_graph_n)[0]
    elif isinstance(corpus_spec, str):
        spec = CorpusSpec.parse(corpus_spec)
    else:
        spec = corpus_spec
    spec = _clamp(check, spec)
    start = time.perf_counter()
    ctx = check.context(spec) if check.context else None
    task = partial(_evaluate, check.predicate, ctx)
    graphs = list(spec.graphs())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(task, graphs, chunksize=max(1, len(graphs) // (4 * jobs))))
    else:
        results = [task(g) for g in graphs]
    report = VerificationReport(theorem_id, str(spec))
    for g6, (instances, failures) in results:
        report.instances_checked += instances
        report.failures.extend((g6, _jsonable(e), _jsonable(a)) for e, a in failures)
    report.failures.sort(key=lambda f: (f[0], json.dumps(f[1:], sort_keys=True)))
    report.wall_time = time.perf_counter() - start
    return report


def _jsonable(x: Any) -> Any:
    return json.loads(json.dumps(x, default=list))


def run_all(max_tree_n: int = 14, max_graph_n: int = 7, ids: Optional[Iterable[str]] = None,
            jobs: int = 1) -> list[VerificationReport]:
    """Every registered check (or those in ``ids``) on its default corpora within the caps.

    Unknown ids produce a report carrying an error instead of aborting the run.
    """
    if max_tree_n < 1 or max_graph_n < 1:
        raise ValueError("corpus caps must be positive")
    reports = []
    for cid in (list(ids) if ids is not None else list(CHECKS)):
        if cid not in CHECKS:
            reports.append(VerificationReport(cid, "", error=f"unknown check {cid!r}"))
            continue
        for spec in CHECKS[cid].corpora(max_tree_n, max_graph_n):
            reports.append(run_check(cid, spec, jobs=jobs))
    return reports


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports)
