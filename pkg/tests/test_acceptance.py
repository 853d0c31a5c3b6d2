"""Acceptance criteria, one test each, at the stated corpus sizes and time targets.

Every test records a one-line verdict that the terminal summary prints
(see ``conftest.py``), and prints it directly when run with ``-s``.
"""

import time

from openpack.enumeration import GRAPH_COUNTS, enumerate_trees
from openpack.graph_core import canonical_tree_code, to_graph6
from openpack.solvers import max_open_packing
from openpack.tree_ops import generate_class_O
from openpack.verify import run_check

VERDICTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    VERDICTS[number] = line
    print(line)


def _run(checks: list[tuple[str, str]]) -> tuple[list, float]:
    start = time.perf_counter()
    reports = [run_check(cid, corpus) for cid, corpus in checks]
    return reports, time.perf_counter() - start


def _summary(reports) -> str:
    return "; ".join(f"{r.theorem_id} [{r.corpus_spec}] {r.instances_checked} checked, "
                     f"{len(r.failures)} failed" for r in reports)


def _failures(reports) -> list:
    return [(r.theorem_id,) + tuple(f) for r in reports for f in r.failures]


def test_criterion_01_oracle_equivalence():
    reports, elapsed = _run([("oracle-equivalence", "connected graphs n<=7"),
                             ("oracle-equivalence", "trees n<=12")])
    ok = not _failures(reports) and elapsed < 300
    record(1, "solvers match exhaustive oracle", ok, f"{_summary(reports)}; {elapsed:.1f}s (target 300s)")
    assert not _failures(reports)
    assert elapsed < 300


def test_criterion_02_path_law():
    reports, elapsed = _run([("path-law", "paths 2<=n<=30")])
    ok = reports[0].passed and reports[0].instances_checked == 29 and elapsed < 60
    record(2, "P_n unique iff n = 2 mod 4, 2 <= n <= 30", ok, f"{_summary(reports)}; {elapsed:.1f}s (target 60s)")
    assert reports[0].failures == []
    assert reports[0].instances_checked == 29
    assert elapsed < 60


def test_criterion_03_main_theorem():
    start = time.perf_counter()
    generated = {m.code: m.graph for m in generate_class_O(14)}
    unique = {}
    for n in range(1, 15):
        for t in enumerate_trees(n):
            if max_open_packing(t).unique:
                unique[canonical_tree_code(t)] = t
    elapsed = time.perf_counter() - start
    only_generated = sorted(to_graph6(generated[c]) for c in generated.keys() - unique.keys())
    only_unique = sorted(to_graph6(unique[c]) for c in unique.keys() - generated.keys())
    ok = not only_generated and not only_unique and elapsed < 1800
    record(3, "class O(14) equals trees with a unique maximum open packing", ok,
           f"{len(generated)} generated, {len(unique)} unique; generated-only {only_generated}, "
           f"unique-only {only_unique}; {elapsed:.1f}s (target 1800s)")
    assert only_generated == []
    assert only_unique == []
    assert elapsed < 1800


def test_criterion_04_recognizer():
    reports, elapsed = _run([("recognizer", "trees n<=14")])
    failures = _failures(reports)
    record(4, "recognizer agrees with solver and traces replay", not failures,
           f"{_summary(reports)}; failing {[f[1] for f in failures]}; {elapsed:.1f}s")
    assert failures == []


def test_criterion_05_operation_soundness():
    reports, elapsed = _run([(f"op{k}-sound", "class-O n<=10") for k in (1, 2, 3, 4)])
    failures = _failures(reports)
    pairs = sum(r.instances_checked for r in reports)
    ok = not failures and all(r.instances_checked > 0 for r in reports)
    record(5, "operations keep a unique maximum with the stated U", ok,
           f"{pairs} (member, step) pairs; {_summary(reports)}; {elapsed:.1f}s")
    assert failures == []
    assert all(r.instances_checked > 0 for r in reports)


def test_criterion_06_structural_conditions():
    ids = ["leaf-lemma", "no-strong-support", "forbidden-21", "forbidden-22"]
    reports, elapsed = _run([(cid, "graphs n<=7") for cid in ids])
    failures = _failures(reports)
    record(6, "leaves in U, no strong support, forbidden configurations", not failures,
           f"{_summary(reports)}; {elapsed:.1f}s")
    assert failures == []


def test_criterion_07_identities():
    reports, elapsed = _run([
        ("subdivision-identity", "graphs n<=7"),
        ("gprime-identity", "connected graphs n<=6"),
        ("gplus-identity", "graphs n<=4"),
        ("gstar-identity", "graphs 2<=n<=4"),
        ("square-identity", "graphs n<=7"),
    ])
    failures = _failures(reports)
    ok = not failures and elapsed < 1800
    record(7, "reduction identities", ok, f"{_summary(reports)}; {elapsed:.1f}s (target 1800s)")
    assert failures == []
    assert elapsed < 1800


def test_criterion_08_uniqueness_transfers():
    reports, elapsed = _run([("uniqueness-transfers", "graphs n<=7")])
    failures = _failures(reports)
    record(8, "uniqueness transfers through the reductions", not failures,
           f"{_summary(reports)}; {elapsed:.1f}s")
    assert failures == []


def test_criterion_09_join_oracle():
    reports, elapsed = _run([("join-alpha", "graphs n<=6")])
    failures = _failures(reports)
    ok = not failures and reports[0].instances_checked > 0
    record(9, "independence number from join uniqueness", ok, f"{_summary(reports)}; {elapsed:.1f}s")
    assert failures == []
    assert reports[0].instances_checked > 0


def test_criterion_10_total_domination():
    reports, elapsed = _run([("rall-theorem", "trees 2<=n<=12"),
                             ("total-domination-bound", "graphs n<=7")])
    failures = _failures(reports)
    record(10, "rho_o = gamma_t on trees, gamma_t >= rho_o in general", not failures,
           f"{_summary(reports)}; {elapsed:.1f}s")
    assert failures == []


def test_criterion_11_graph6_fidelity():
    reports, elapsed = _run([("graph6-roundtrip", "graphs n<=7")])
    failures = _failures(reports)
    ok = not failures and reports[0].instances_checked == sum(GRAPH_COUNTS[1:8])
    record(11, "graph6 round trip", ok, f"{_summary(reports)}; {elapsed:.1f}s")
    assert failures == []
    assert reports[0].instances_checked == sum(GRAPH_COUNTS[1:8])

