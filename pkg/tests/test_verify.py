import json

import pytest

from openpack.graph_core import Graph, to_graph6
from openpack.verify import (
    CHECKS,
    CorpusSpec,
    VerificationReport,
    all_passed,
    run_all,
    run_check,
)

REQUIRED_IDS = [
    "rall-theorem", "leaf-lemma", "no-strong-support", "forbidden-21", "forbidden-22",
    "op1-sound", "op2-sound", "op3-sound", "op4-sound", "path-law", "main-theorem",
    "subdivision-identity", "gprime-identity", "gplus-identity", "gstar-identity",
    "square-identity", "uniqueness-transfers", "join-alpha",
]


class TestCorpusSpec:
    @pytest.mark.parametrize("text, spec", [
        ("trees n<=14", CorpusSpec("trees", 14)),
        ("trees n ≤ 14", CorpusSpec("trees", 14)),
        ("connected graphs n<=7", CorpusSpec("connected", 7)),
        ("graphs 2<=n<=4", CorpusSpec("graphs", 4, 2)),
        ("paths n ≤ 30", CorpusSpec("paths", 30)),
        ("class-O n<=10", CorpusSpec("class-O", 10)),
        ("file:/tmp/x.g6", CorpusSpec("file", path="/tmp/x.g6")),
    ])
    def test_parse(self, text, spec):
        assert CorpusSpec.parse(text) == spec

    def test_round_trip_text(self):
        for text in ("trees n<=14", "connected graphs n<=7", "graphs 2<=n<=4", "file:a.g6"):
            assert str(CorpusSpec.parse(text)) == text

    @pytest.mark.parametrize("text", ["forests n<=3", "trees", "trees n<=x"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            CorpusSpec.parse(text)

    def test_sizes(self):
        assert len(list(CorpusSpec("trees", 7).graphs())) == 1 + 1 + 1 + 2 + 3 + 6 + 11
        assert [g.n for g in CorpusSpec("paths", 5, 3).graphs()] == [3, 4, 5]


class TestRegistry:
    def test_required_ids_registered(self):
        assert set(REQUIRED_IDS) <= set(CHECKS)

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            run_check("bogus", "trees n<=3")


class TestRunCheck:
    def test_path_law(self):
        rep = run_check("path-law", "paths n ≤ 30")
        assert rep.passed and rep.instances_checked == 30 and rep.failures == []

    def test_subdivision_identity(self):
        rep = run_check("subdivision-identity", "connected graphs n ≤ 7")
        assert rep.passed and rep.instances_checked == sum((1, 1, 2, 6, 21, 112, 853))

    def test_main_theorem_up_to_12(self):
        assert run_check("main-theorem", "trees n<=12").passed

    def test_caps_are_clamped(self):
        rep = run_check("gplus-identity", "graphs n<=7")
        assert rep.corpus_spec == "graphs n<=4"
        rep = run_check("gstar-identity", "graphs n<=3")
        assert rep.corpus_spec == "graphs 2<=n<=3"

    def test_failures_are_replayable(self, tmp_path):
        rep = run_check("main-theorem", "trees n<=13")
        assert [f[0] for f in rep.failures] == ["LsO_OOC?_AA??C"]
        corpus = tmp_path / "one.g6"
        corpus.write_text(rep.failures[0][0] + "\n")
        again = run_check("recognizer", f"file:{corpus}")
        assert again.instances_checked == 1 and len(again.failures) == 1

    def test_deterministic(self):
        a = run_check("leaf-lemma", "graphs n<=6").to_dict()
        b = run_check("leaf-lemma", "graphs n<=6").to_dict()
        a.pop("wall_time"), b.pop("wall_time")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_worker_pool_matches_serial(self):
        serial = run_check("uniqueness-transfers", "graphs n<=5")
        pooled = run_check("uniqueness-transfers", "graphs n<=5", jobs=2)
        assert (serial.instances_checked, serial.failures) == (pooled.instances_checked, pooled.failures)

    def test_file_corpus_skips_non_trees_for_tree_checks(self, tmp_path):
        corpus = tmp_path / "mixed.g6"
        corpus.write_text(to_graph6(Graph.cycle(5)) + "\n" + to_graph6(Graph.path(6)) + "\n")
        rep = run_check("rall-theorem", f"file:{corpus}")
        assert rep.instances_checked == 1 and rep.passed


class TestRunAll:
    def test_small_caps_all_pass(self):
        reports = run_all(6, 3)
        assert {r.theorem_id for r in reports} == set(CHECKS)
        assert all_passed(reports), [r.to_dict() for r in reports if not r.passed]

    def test_unknown_id_is_reported(self):
        reports = run_all(6, 3, ids=["bogus", "path-law"])
        assert reports[0].error and not reports[0].passed
        assert reports[1].theorem_id == "path-law" and reports[1].passed
        assert not all_passed(reports)

    def test_caps_must_be_positive(self):
        with pytest.raises(ValueError):
            run_all(0, 3)

    def test_json_lines(self):
        rep = VerificationReport("x", "trees n<=3", 2, [("A_", 1, 2)], 0.5)
        obj = json.loads(rep.to_json())
        assert obj["failures"] == [["A_", 1, 2]] and obj["passed"] is False
