"""Command-line front end: ``opl solve|recognize|generate|reduce|verify``.

stdout carries only machine-readable output (JSON lines or graph6); all
diagnostics go to stderr. Exit codes: 0 success, 1 domain error,
2 usage or parse error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from .graph_core import FORMATS, Graph, GraphError, parse_graph, to_graph6
from .reductions import (
    ReductionOutput,
    clique_extension,
    gadget_plus,
    join_empty_output,
    product_gadget,
    square,
    subdivision,
)
from .solvers import (
    DomainError,
    max_independent_set,
    max_matching,
    max_open_packing,
    max_two_packing,
    total_domination_number,
)
from .tree_ops import PreconditionError, generate_class_O, recognize_tree
from .verify import CHECKS, CorpusSpec, all_passed, run_all, run_check

SCHEMA = 1
EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

SOLVERS = {
    "rho-o": max_open_packing,
    "rho": max_two_packing,
    "alpha": max_independent_set,
    "alpha-prime": max_matching,
    "gamma-t": total_domination_number,
}

REDUCTIONS: dict[str, Callable[[Graph], ReductionOutput]] = {
    "subdivision": subdivision,
    "clique-ext": clique_extension,
    "gadget-plus": gadget_plus,
    "product-gadget": product_gadget,
    "square": square,
}


class UsageError(Exception):
    """Bad arguments or unreadable input (exit 2)."""


def _emit(obj: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True))


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_graphs(path: Optional[str], fmt: str) -> list[Graph]:
    """One graph per non-empty line for graph6, a single graph for edge lists."""
    text = _read_text(path)
    try:
        if fmt == "graph6":
            graphs = [parse_graph(line, fmt) for line in text.splitlines() if line.strip()]
        else:
            graphs = [parse_graph(text, fmt)]
    except GraphError as exc:
        raise UsageError(f"parse error: {exc}") from None
    if not graphs:
        raise UsageError("no graph on input")
    return graphs


def _witness_json(witness: tuple) -> list:
    return [list(w) if isinstance(w, tuple) else w for w in witness]


# -- subcommands -------------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    solve = SOLVERS[args.invariant]
    for g in _read_graphs(args.file, args.format):
        res = solve(g, enumerate=args.enumerate)
        out = {"invariant": args.invariant, "value": res.value, "unique": res.unique}
        if not args.unique:
            out["witness"] = _witness_json(res.witness)
            if res.all_witnesses is not None:
                out["witnesses"] = [_witness_json(w) for w in res.all_witnesses]
        _emit(out)
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    texts = []
    for g in _read_graphs(args.file, args.format):
        stats: dict = {}
        trace = recognize_tree(g, stats)
        out = {"member": trace is not None, "n": g.n, "solver_calls": stats.get("solver_calls", 0)}
        if trace is not None:
            out["trace"] = trace.to_json()
            texts.append(trace.to_text())
        _emit(out)
    if args.trace_out and texts:
        with open(args.trace_out, "w") as fh:
            fh.write("\n\n".join(texts) + "\n")
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    members = generate_class_O(args.max_n)
    sys.stdout.write("".join(to_graph6(m.graph) + "\n" for m in members))
    if args.traces:
        with open(args.traces, "w") as fh:
            for m in members:
                fh.write(json.dumps({"graph6": to_graph6(m.graph), **m.trace.to_json()},
                                    sort_keys=True) + "\n")
    print(f"{len(members)} trees", file=sys.stderr)
    return EXIT_OK


def _reduction(kind: str) -> Callable[[Graph], ReductionOutput]:
    if kind in REDUCTIONS:
        return REDUCTIONS[kind]
    if kind.startswith("join:"):
        try:
            r = int(kind[len("join:"):])
        except ValueError:
            raise UsageError(f"bad join size in {kind!r}") from None
        if r < 0:
            raise UsageError("join size must be non-negative")
        return lambda g: join_empty_output(g, r)
    raise UsageError(f"unknown reduction {kind!r}")


def cmd_reduce(args: argparse.Namespace) -> int:
    build = _reduction(args.kind)
    for g in _read_graphs(args.file, args.format):
        out = build(g)
        print(to_graph6(out.graph))
        _emit({"kind": args.kind, "n": out.graph.n, "vertex_map": out.vertex_map_json()})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suites = args.suite or ["all"]
    ids = list(CHECKS) if "all" in suites else suites
    unknown = [s for s in ids if s not in CHECKS]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    if args.max_tree_n < 1 or args.max_graph_n < 1:
        raise UsageError("corpus caps must be positive")
    if args.corpus:
        reports = [run_check(cid, CorpusSpec("file", path=args.corpus), jobs=args.jobs) for cid in ids]
    else:
        reports = run_all(args.max_tree_n, args.max_graph_n, ids=ids, jobs=args.jobs)
    for r in reports:
        _emit(r.to_dict())
        status = "ok" if r.passed else f"FAILED ({len(r.failures)})"
        print(f"{r.theorem_id} [{r.corpus_spec}] {r.instances_checked} instances: {status}", file=sys.stderr)
    return EXIT_OK if all_passed(reports) else EXIT_VERIFY


# -- parser ------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("OPL_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="opl", description="Exact open packing solvers and tree recognition.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", nargs="?", help="input file (default: stdin)")
        p.add_argument("--format", choices=FORMATS, default="graph6")

    p = sub.add_parser("solve", help="compute an invariant with a witness")
    p.add_argument("invariant", choices=sorted(SOLVERS))
    graph_input(p)
    p.add_argument("--enumerate", action="store_true", help="list every optimal witness")
    p.add_argument("--unique", action="store_true", help="report value and uniqueness only")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("recognize", help="decide unique maximum open packing for a tree")
    graph_input(p)
    p.add_argument("--trace-out", help="write construction traces in text form to this file")
    p.set_defaults(run=cmd_recognize)

    p = sub.add_parser("generate", help="emit the constructible trees up to an order")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--traces", help="sidecar file for construction traces (JSON lines)")
    p.set_defaults(run=cmd_generate)

    p = sub.add_parser("reduce", help="build a reduction graph")
    p.add_argument("kind", help="subdivision, clique-ext, gadget-plus, product-gadget, square or join:R")
    graph_input(p)
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("verify", help="run exhaustive verification checks")
    p.add_argument("--suite", action="append", help="check id or 'all' (repeatable)")
    p.add_argument("--max-tree-n", type=int, default=14)
    p.add_argument("--max-graph-n", type=int, default=7)
    p.add_argument("--corpus", help="newline-delimited graph6 file used instead of the built-in corpora")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.run(args)
    except UsageError as exc:
        print(f"opl: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, PreconditionError, GraphError) as exc:
        print(f"opl: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
