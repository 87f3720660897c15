"""Command line behavior: exit codes, payload schemas, pinned outputs."""
from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from compedge.cli import run

FIXTURES = Path(__file__).parent / "fixtures"


def schema(name: str) -> dict:
    text = resources.files("compedge").joinpath(f"schemas/{name}.schema.json").read_text()
    return json.loads(text)


def check(payload: str, schema_name: str) -> dict | str:
    obj = json.loads(payload)
    jsonschema.validate(obj, schema(schema_name))
    return obj


class TestAnalyze:
    def test_tree_payload(self):
        outcome = run(["analyze", str(FIXTURES / "p4.json")])
        assert outcome.exit_code == 0
        payload = check(outcome.payload, "analyze")
        assert payload["graph_class"] == "tree"
        assert payload["height"] == 2
        assert payload["cohen_macaulay"] is True
        assert payload["pd_ideal"] == 1
        assert payload["reg_ideal"] == 2
        assert payload["licci"] is True
        assert payload["licci_reason"] == "forest"
        assert payload["notes"] == []
        assert "oracle" not in payload

    def test_triangle_with_oracle_agrees(self):
        outcome = run(["analyze", str(FIXTURES / "k3.json"), "--oracle"])
        assert outcome.exit_code == 0
        payload = check(outcome.payload, "analyze")
        assert payload["graph_class"] == "complete"
        assert payload["licci_reason"] == "K3"
        assert payload["notes"] == ["complete_pd_adjusted"]
        assert payload["oracle"]["height"] == 3
        assert payload["oracle"]["pd_ideal"] == 2
        assert payload["mismatches"] == []

    def test_cycle_payload(self):
        outcome = run(["analyze", str(FIXTURES / "c4.json"), "--oracle", "--field", "q"])
        assert outcome.exit_code == 0
        payload = check(outcome.payload, "analyze")
        assert payload["graph_class"] == "other"
        assert payload["cohen_macaulay"] is False
        assert payload["reg_ideal"] == [2, 3]
        assert payload["oracle"]["field"] == "q"
        assert payload["mismatches"] == []

    def test_isolated_vertex_mismatch_sets_exit_code_one(self, tmp_path):
        path = tmp_path / "lonely.json"
        path.write_text('{"n": 4, "edges": [[1, 2]]}')
        outcome = run(["analyze", str(path), "--oracle"])
        assert outcome.exit_code == 1
        payload = check(outcome.payload, "analyze")
        assert payload["notes"] == ["isolated_vertices_outside_hypotheses"]
        mismatched = {m["invariant"] for m in payload["mismatches"]}
        assert mismatched == {"height", "pd_ideal", "reg_ideal"}

    def test_compact_json_flag(self):
        outcome = run(["analyze", str(FIXTURES / "p4.json"), "--json"])
        assert "\n" not in outcome.payload.strip()
        check(outcome.payload, "analyze")

    def test_missing_file(self):
        outcome = run(["analyze", "does-not-exist.json"])
        assert outcome.exit_code == 2
        assert "cannot read graph file" in outcome.diagnostics

    def test_malformed_file_reports_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("3 1\n1 1\n")
        outcome = run(["analyze", str(path)])
        assert outcome.exit_code == 2
        assert "line 2" in outcome.diagnostics
        assert "self-loop" in outcome.diagnostics

    def test_degenerate_ambient(self, tmp_path):
        path = tmp_path / "k2.txt"
        path.write_text("2 1\n1 2\n")
        outcome = run(["analyze", str(path)])
        assert outcome.exit_code == 2
        assert "degenerate ambient" in outcome.diagnostics

    def test_edgeless_graph(self, tmp_path):
        path = tmp_path / "edgeless.json"
        path.write_text('{"n": 4, "edges": []}')
        outcome = run(["analyze", str(path)])
        assert outcome.exit_code == 2
        assert "edgeless" in outcome.diagnostics


class TestBetti:
    def test_path_table(self):
        outcome = run(["betti", str(FIXTURES / "p4.json")])
        assert outcome.exit_code == 0
        payload = check(outcome.payload, "betti")
        assert payload == {
            "n": 4, "field": "gf2",
            "betti": [{"i": 0, "j": 0, "value": 1},
                      {"i": 1, "j": 2, "value": 3},
                      {"i": 2, "j": 3, "value": 2}]}

    def test_complete_graph_table(self):
        outcome = run(["betti", str(FIXTURES / "k4.json")])
        payload = check(outcome.payload, "betti")
        values = {(e["i"], e["j"]): e["value"] for e in payload["betti"]}
        assert values == {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}

    def test_two_disjoint_edges_table(self):
        outcome = run(["betti", str(FIXTURES / "two_disjoint_edges.json")])
        payload = check(outcome.payload, "betti")
        values = {(e["i"], e["j"]): e["value"] for e in payload["betti"]}
        assert values == {(0, 0): 1, (1, 2): 2, (2, 4): 1}

    def test_rational_field_agrees_here(self):
        over_2 = run(["betti", str(FIXTURES / "c4.json")]).payload
        over_q = run(["betti", str(FIXTURES / "c4.json"), "--field", "q"]).payload
        assert json.loads(over_2)["betti"] == json.loads(over_q)["betti"]

    def test_edgeless_graph_rejected(self, tmp_path):
        path = tmp_path / "edgeless.json"
        path.write_text('{"n": 3, "edges": []}')
        outcome = run(["betti", str(path)])
        assert outcome.exit_code == 2


class TestVerify:
    def test_small_sweep_payload(self):
        outcome = run(["verify", "--max-n", "3"])
        assert outcome.exit_code == 0
        payload = check(outcome.payload, "verify")
        assert payload["graphs_enumerated"] == 8
        assert payload["graphs_analyzed"] == 7
        assert payload["clean"] == 4
        tensions = payload["known_tensions"]
        assert tensions["complete_pd_adjusted"] == {"count": 1}
        assert tensions["isolated_vertices_outside_hypotheses"] == {
            "count": 3, "mismatched": 3}
        assert tensions["disconnected_forest_primal_linear_resolution"] == {
            "true": 3, "false": 0}
        assert payload["unflagged_mismatches"] == []

    def test_four_vertex_sweep_counts(self):
        outcome = run(["verify", "--max-n", "4"])
        assert outcome.exit_code == 0
        payload = check(outcome.payload, "verify")
        assert payload["graphs_enumerated"] == 72
        assert payload["graphs_analyzed"] == 70
        assert payload["clean"] == 45
        assert payload["known_tensions"][
            "disconnected_forest_primal_linear_resolution"] == {"true": 21, "false": 3}
        assert "unflagged mismatches" in outcome.diagnostics

    def test_max_n_guard(self):
        assert run(["verify", "--max-n", "8"]).exit_code == 2
        assert run(["verify", "--max-n", "2"]).exit_code == 2


class TestMonteCarloCommands:
    def test_montecarlo_csv_and_determinism(self):
        args = ["montecarlo", "--n", "50", "--c", "0.5", "--trials", "20", "--seed", "7"]
        first = run(args)
        second = run(args)
        assert first.exit_code == 0
        assert first.payload == second.payload
        lines = first.payload.splitlines()
        assert lines[0] == "n,c,p,trials,seed,licci_count,fraction_licci"
        assert lines[1] == "50,0.5,0.01,20,7,18,0.900000"
        assert "wall time" in first.diagnostics

    def test_montecarlo_rejects_double_probability(self):
        outcome = run(["montecarlo", "--n", "10", "--p", "0.5", "--c", "1.0"])
        assert outcome.exit_code == 2

    def test_montecarlo_rejects_tiny_n(self):
        outcome = run(["montecarlo", "--n", "2", "--p", "0.5"])
        assert outcome.exit_code == 2
        assert "n >= 3" in outcome.diagnostics

    def test_sweep_rows(self):
        outcome = run(["sweep", "--n", "40", "--c", "0.2,2,8",
                       "--trials", "50", "--seed", "3"])
        assert outcome.exit_code == 0
        lines = outcome.payload.splitlines()
        assert len(lines) == 4
        assert lines[1].startswith("40,0.2,")
        fractions = [float(line.split(",")[-1]) for line in lines[1:]]
        assert fractions == sorted(fractions, reverse=True)

    def test_sweep_rejects_empty_c_list(self):
        assert run(["sweep", "--n", "10", "--c", ",", "--trials", "5"]).exit_code == 2
        assert run(["sweep", "--n", "10", "--c", "a,b", "--trials", "5"]).exit_code == 2


class TestMdensity:
    def test_cycle_is_one(self):
        outcome = run(["mdensity", str(FIXTURES / "c5.txt")])
        assert outcome.exit_code == 0
        assert check(outcome.payload, "mdensity") == "1/1"

    def test_k4_is_three_halves(self):
        outcome = run(["mdensity", str(FIXTURES / "k4.json")])
        assert check(outcome.payload, "mdensity") == "3/2"

    def test_edgeless_rejected(self, tmp_path):
        path = tmp_path / "none.json"
        path.write_text('{"n": 3, "edges": []}')
        assert run(["mdensity", str(path)]).exit_code == 2


class TestArgumentErrors:
    def test_no_subcommand(self):
        assert run([]).exit_code == 2

    def test_unknown_subcommand(self):
        assert run(["frobnicate"]).exit_code == 2

    def test_unknown_field_choice(self):
        outcome = run(["betti", str(FIXTURES / "p4.json"), "--field", "gf3"])
        assert outcome.exit_code == 2


class TestProcessEntryPoint:
    def test_stdout_stderr_and_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "compedge.cli", "mdensity", str(FIXTURES / "k4.json")],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == '"3/2"\n'
        assert proc.stderr == ""

    def test_csv_goes_to_stdout_diagnostics_to_stderr(self):
        proc = subprocess.run(
            [sys.executable, "-m", "compedge.cli", "montecarlo", "--n", "20",
             "--c", "1.0", "--trials", "10", "--seed", "5"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout.startswith("n,c,p,")
        assert "wall time" in proc.stderr

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "compedge.cli", "analyze", "missing.json"],
            capture_output=True, text=True)
        assert proc.returncode == 2
        assert proc.stdout == ""
        assert "error:" in proc.stderr
