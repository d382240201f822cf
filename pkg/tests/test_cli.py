from __future__ import annotations

import io
import json

import pytest

from edgegraceful import EdgeLabeling, fan, make_graph, verify
from edgegraceful.cli import (
    graph_from_doc,
    graph_to_doc,
    labeling_from_doc,
    labeling_to_doc,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_with_stdin(capsys, monkeypatch, text, *argv):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    return run(capsys, *argv)


class TestDocuments:
    def test_graph_round_trip(self):
        g = fan(1, 3)
        assert graph_from_doc(graph_to_doc(g)) == g

    def test_labeling_round_trip(self):
        lab = EdgeLabeling(fan(1, 2), (3, 1, 2))
        assert labeling_from_doc(labeling_to_doc(lab)) == lab

    def test_labeling_graph_by_file_reference(self, tmp_path):
        g = fan(1, 2)
        gpath = tmp_path / "g.json"
        gpath.write_text(json.dumps(graph_to_doc(g)))
        doc = {"graph": str(gpath), "labels": [1, 2, 3]}
        assert labeling_from_doc(doc) == EdgeLabeling(g, (1, 2, 3))

    def test_rejects_missing_fields(self):
        with pytest.raises(ValueError):
            graph_from_doc({"p": 3})
        with pytest.raises(ValueError):
            labeling_from_doc({"labels": [1]})


class TestGen:
    def test_fan(self, capsys):
        code, out, _ = run(capsys, "gen", "fan", "--m", "1", "--n", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["p"] == 4
        assert len(doc["edges"]) == 5

    def test_cycle(self, capsys):
        code, out, _ = run(capsys, "gen", "cycle", "--n", "5")
        doc = json.loads(out)
        assert code == 0
        assert (doc["p"], len(doc["edges"])) == (5, 5)

    def test_path(self, capsys):
        code, out, _ = run(capsys, "gen", "path", "--n", "4")
        doc = json.loads(out)
        assert (doc["p"], len(doc["edges"])) == (4, 3)

    def test_invalid_params_exit_nonzero(self, capsys):
        code, _, err = run(capsys, "gen", "fan", "--m", "1", "--n", "0")
        assert code == 2
        assert "error" in err

    def test_round_trip_through_parse(self, capsys):
        code, out, _ = run(capsys, "gen", "fan", "--m", "2", "--n", "3")
        assert graph_from_doc(json.loads(out)) == fan(2, 3)


class TestLo:
    def test_pq_pass(self, capsys):
        code, out, _ = run(capsys, "lo", "--p", "12", "--q", "21")
        assert code == 0
        assert "396" in out
        assert "pass" in out

    def test_pq_fail(self, capsys):
        code, out, _ = run(capsys, "lo", "--p", "5", "--q", "7")
        assert code == 1
        assert "46" in out

    def test_piped_graph_document(self, capsys, monkeypatch):
        doc = json.dumps(graph_to_doc(fan(1, 3)))
        code, out, _ = run_with_stdin(capsys, monkeypatch, doc, "lo", "-")
        assert code == 0
        assert "residual = 24" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "lo", "--p", "3", "--q", "3", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"p": 3, "q": 3, "residual": 9, "divides": True}

    def test_malformed_document(self, capsys, monkeypatch):
        code, _, err = run_with_stdin(capsys, monkeypatch, '{"nope": 1}', "lo", "-")
        assert code == 2

    def test_invalid_json(self, capsys, monkeypatch):
        code, _, _ = run_with_stdin(capsys, monkeypatch, "p=2 edges", "lo", "-")
        assert code == 2


class TestDioph:
    def test_fan_solutions(self, capsys):
        code, out, _ = run(capsys, "dioph", "7", "-2", "0", "-5", "-2", "0")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 8
        assert "(11, 33)" in out
        assert "(-13, -52)" in out

    def test_positive_x_filter(self, capsys):
        code, out, _ = run(
            capsys, "dioph", "7", "-2", "0", "-5", "-2", "0", "--positive-x"
        )
        lines = [l for l in out.splitlines() if l.strip()]
        assert lines == ["(2, 3)", "(3, 6)", "(11, 33)"]

    def test_trace_table(self, capsys):
        code, out, _ = run(capsys, "dioph", "7", "-2", "0", "-5", "-2", "0", "--trace")
        assert code == 0
        lines = out.splitlines()
        assert "X^2 - 4*Y^2 = 1344" in lines[0]
        # header + 56 rows
        assert len(lines) == 58
        assert "672.5" in out and "335.75" in out
        assert "41/7" in out  # non-terminating rationals stay exact

    def test_trace_json(self, capsys):
        code, out, _ = run(
            capsys, "dioph", "7", "-2", "0", "-5", "-2", "0", "--trace",
            "--format", "json",
        )
        doc = json.loads(out)
        assert doc["N"] == 1344
        assert len(doc["rows"]) == 56
        assert doc["rows"][0] == {
            "N1": 1, "N2": 1344, "X": "672.5", "Y": "335.75",
            "x": "47", "y": "158.625", "integral": False,
        }

    def test_restriction_violation_named(self, capsys):
        code, _, err = run(capsys, "dioph", "1", "0", "0", "0", "1", "0")
        assert code == 2
        assert "b != 0" in err

    def test_c_nonzero_rejected(self, capsys):
        code, _, err = run(capsys, "dioph", "1", "1", "1", "0", "0", "-3")
        assert code == 2
        assert "c = 0" in err

    def test_solutions_json(self, capsys):
        code, out, _ = run(
            capsys, "dioph", "7", "-2", "0", "-5", "-2", "0", "--format", "json"
        )
        doc = json.loads(out)
        assert [11, 33] in doc["solutions"]
        assert len(doc["solutions"]) == 8


class TestSearch:
    def graph_doc(self, g):
        return json.dumps(graph_to_doc(g))

    def test_first_on_fan3(self, capsys, monkeypatch):
        code, out, _ = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 3)), "search", "-"
        )
        assert code == 0
        lab = labeling_from_doc(json.loads(out))
        assert verify(lab).edge_graceful

    def test_all_on_fan4_exhausts_empty(self, capsys, monkeypatch):
        code, out, _ = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 4)), "search", "-",
            "--mode", "all",
        )
        assert code == 1
        assert out.strip() == ""

    def test_count_mode(self, capsys, monkeypatch):
        code, out, _ = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 2)), "search", "-",
            "--mode", "count",
        )
        assert code == 0
        assert out.strip() == "solutions = 6"

    def test_dot_output(self, capsys, monkeypatch):
        code, out, _ = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 2)), "search", "-",
            "--format", "dot",
        )
        assert code == 0
        assert out.startswith("graph {")
        assert "--" in out and "[label=" in out

    def test_no_prune_flag(self, capsys, monkeypatch):
        code, out, _ = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 2)), "search", "-",
            "--mode", "count", "--no-prune",
        )
        assert out.strip() == "solutions = 6"

    def test_malformed_input(self, capsys, monkeypatch):
        code, _, _ = run_with_stdin(capsys, monkeypatch, "{}", "search", "-")
        assert code == 2

    def test_warns_when_screen_fails_but_still_searches(self, capsys, monkeypatch):
        code, out, err = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 4)), "search", "-",
            "--mode", "all",
        )
        assert code == 1
        assert "divisibility" in err

    def test_no_warning_when_screen_passes(self, capsys, monkeypatch):
        code, _, err = run_with_stdin(
            capsys, monkeypatch, self.graph_doc(fan(1, 3)), "search", "-"
        )
        assert code == 0
        assert err == ""


class TestVerify:
    def test_cycle5_sequential_valid(self, capsys, monkeypatch):
        from edgegraceful import cycle

        doc = json.dumps(
            {"graph": graph_to_doc(cycle(5)), "labels": [1, 2, 3, 4, 5]}
        )
        code, out, _ = run_with_stdin(capsys, monkeypatch, doc, "verify", "-")
        assert code == 0
        assert "edge-graceful: yes" in out
        assert "[1, 3, 0, 2, 4]" in out

    def test_single_edge_invalid(self, capsys, monkeypatch):
        from edgegraceful import path

        doc = json.dumps({"graph": graph_to_doc(path(2)), "labels": [1]})
        code, out, _ = run_with_stdin(capsys, monkeypatch, doc, "verify", "-")
        assert code == 1
        assert "edge-graceful: no" in out

    def test_non_permutation_is_malformed(self, capsys, monkeypatch):
        from edgegraceful import cycle

        doc = json.dumps(
            {"graph": graph_to_doc(cycle(5)), "labels": [1, 1, 2, 3, 4]}
        )
        code, _, err = run_with_stdin(capsys, monkeypatch, doc, "verify", "-")
        assert code == 2
        assert "permutation" in err

    def test_json_format(self, capsys, monkeypatch):
        doc = json.dumps({"graph": graph_to_doc(fan(1, 2)), "labels": [1, 2, 3]})
        code, out, _ = run_with_stdin(
            capsys, monkeypatch, doc, "verify", "-", "--format", "json"
        )
        got = json.loads(out)
        assert got["edge_graceful"] is True
        assert got["residues"] == [0, 1, 2]


class TestClassifyFans:
    def test_max_1000(self, capsys):
        code, out, _ = run(capsys, "classify-fans", "--max", "1000")
        assert code == 0
        assert "2 3 11" in out

    def test_max_1_empty(self, capsys):
        code, out, _ = run(capsys, "classify-fans", "--max", "1")
        assert code == 0
        assert "(none)" in out

    def test_confirm_search_reports_witnesses(self, capsys):
        code, out, _ = run(
            capsys, "classify-fans", "--max", "100", "--confirm-search",
            "--format", "json",
        )
        doc = json.loads(out)
        assert doc["passing"] == [2, 3, 11]
        for n in (2, 3, 11):
            lab = labeling_from_doc(doc["witnesses"][str(n)])
            assert lab.graph == fan(1, n)
            assert verify(lab).edge_graceful


class TestPipeline:
    def test_gen_search_verify_composition(self, capsys, monkeypatch):
        code, gen_out, _ = run(capsys, "gen", "fan", "--m", "1", "--n", "3")
        assert code == 0
        code, search_out, _ = run_with_stdin(
            capsys, monkeypatch, gen_out, "search", "-"
        )
        assert code == 0
        code, verify_out, _ = run_with_stdin(
            capsys, monkeypatch, search_out, "verify", "-"
        )
        assert code == 0
        assert "edge-graceful: yes" in verify_out

    def test_file_input(self, capsys, tmp_path):
        gpath = tmp_path / "graph.json"
        gpath.write_text(json.dumps(graph_to_doc(make_graph(3, [(0, 1), (1, 2), (2, 0)]))))
        code, out, _ = run(capsys, "lo", str(gpath))
        assert code == 0
