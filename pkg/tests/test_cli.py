import json

import pytest

from exclusivity.cli import (
    build_report_bundle,
    build_simulate_bundle,
    build_verify_bundle,
    main,
)
from exclusivity.exgraph import from_json_dict
from exclusivity.scenario import build_chsh_scenario, scenario_to_json_dict


class TestVerify:
    def test_all_verdicts_pass(self, capsys):
        assert main(["verify"]) == 0
        out = capsys.readouterr().out
        assert "S_max*R_max = 8.000000000" in out
        assert "FAIL" not in out

    def test_perturbed_event_fails_orthogonality(self, capsys):
        assert main(["verify", "--perturb-event", "v3"]) == 1
        out = capsys.readouterr().out
        assert "[FAIL] nc-orthogonality" in out
        assert "[PASS] chsh-orthogonality" in out

    def test_idempotent(self):
        first = build_verify_bundle()
        second = build_verify_bundle()
        assert [(v.name, v.passed) for v in first.verdicts] == [
            (v.name, v.passed) for v in second.verdicts
        ]

    def test_emits_expected_columns(self):
        bundle = build_verify_bundle()
        t1 = [row["expected"] for row in bundle.tables["T1"]]
        t2 = [row["expected"] for row in bundle.tables["T2"]]
        assert all(abs(p - 0.4267) <= 1e-4 for p in t1)
        assert all(abs(p - 0.2929) <= 1e-4 for p in t2)


class TestSimulate:
    def test_analytic_sentinel(self):
        bundle = build_simulate_bundle(seed=0, shots=0, visibility=1.0, which="both")
        s_row = next(row for row in bundle.tables["T1"] if row["event"] == "S")
        r_row = next(row for row in bundle.tables["T2"] if row["event"] == "R")
        assert round(s_row["simulated"], 4) == 3.4142
        assert round(r_row["simulated"], 4) == 2.3431
        assert len(bundle.tables["T3"]) == 16

    def test_single_experiment(self):
        bundle = build_simulate_bundle(seed=1, shots=1000, visibility=0.99, which="chsh")
        assert "T1" in bundle.tables
        assert "T2" not in bundle.tables
        assert "T3" not in bundle.tables

    def test_zero_visibility_limits(self):
        bundle = build_simulate_bundle(seed=2, shots=100_000, visibility=0.0, which="both")
        s_row = next(row for row in bundle.tables["T1"] if row["event"] == "S")
        r_row = next(row for row in bundle.tables["T2"] if row["event"] == "R")
        assert abs(s_row["simulated"] - 2.0) < 0.05
        assert abs(r_row["simulated"] - 1.6) < 0.05

    def test_cli_exit_code(self, tmp_path):
        assert main(["simulate", "both", "--seed", "3", "--shots", "1000",
                     "--visibility", "0.99", "--out", str(tmp_path / "sim")]) == 0
        assert (tmp_path / "sim" / "T1.csv").exists()
        assert (tmp_path / "sim" / "T3.csv").exists()

    def test_bad_visibility_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["simulate", "both", "--visibility", "1.5"])
        assert excinfo.value.code == 2

    def test_unknown_flag_is_a_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["simulate", "both", "--wat", "1"])
        assert excinfo.value.code == 2


class TestExportGraph:
    def test_dot_counts(self, capsys):
        assert main(["export-graph", "f1b", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert sum("--" in line for line in out.splitlines()) == 12
        assert '1,1|0,0' in out

    def test_f1c_dot_counts(self, capsys):
        assert main(["export-graph", "f1c", "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert sum("--" in line for line in out.splitlines()) == 16

    def test_f4_json(self, tmp_path, capsys):
        path = tmp_path / "f4.json"
        assert main(["export-graph", "f4", "--format", "json", "--out", str(path)]) == 0
        data = json.loads(path.read_text())
        assert data["n"] == 64
        assert len(data["edges"]) == 1408
        assert data["labels"][0] == "1,1|0,0 / 0,0,1|6,7,0"
        assert "64 nodes, 1408 edges" in capsys.readouterr().out

    def test_json_round_trips_to_same_graph(self, tmp_path):
        path = tmp_path / "f1b.json"
        main(["export-graph", "f1b", "--format", "json", "--out", str(path)])
        data = json.loads(path.read_text())
        graph = from_json_dict(data)
        assert graph.n == 8
        assert len(graph.edges) == 12


class TestScenarioIo:
    def test_save_load_round_trip(self, tmp_path, capsys):
        path = tmp_path / "chsh.json"
        assert main(["scenario", "save", str(path), "--which", "chsh"]) == 0
        assert main(["scenario", "load", str(path)]) == 0
        assert "invariants hold" in capsys.readouterr().out

    def test_load_rejects_bad_state_norm(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        data = scenario_to_json_dict(build_chsh_scenario())
        data["state"][0] = [0.5, 0.0]
        path.write_text(json.dumps(data))
        assert main(["scenario", "load", str(path)]) == 1
        assert "state norm" in capsys.readouterr().err

    def test_load_rejects_missing_edge(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        data = scenario_to_json_dict(build_chsh_scenario())
        data["edges"] = data["edges"][1:]
        path.write_text(json.dumps(data))
        assert main(["scenario", "load", str(path)]) == 1
        assert "non-edge overlap" in capsys.readouterr().err


class TestReport:
    def test_bundles_every_table(self, tmp_path):
        out = tmp_path / "report"
        assert main(["report", "--seed", "9", "--shots", "0", "--out", str(out),
                     "--format", "json"]) == 0
        data = json.loads((out / "report.json").read_text())
        for table in ("T1", "T2", "T3", "T4", "T5", "T6"):
            assert table in data["tables"], table
        assert {"F1b", "F1c", "F4"} <= set(data["graphs"])
        assert all(v["passed"] for v in data["verdicts"])
        assert len(data["tables"]["T4"]) == 32
        assert len(data["tables"]["T6"]) == 40

    def test_csv_output(self, tmp_path):
        out = tmp_path / "report"
        assert main(["report", "--seed", "9", "--shots", "1000", "--out", str(out)]) == 0
        for name in ("T1", "T2", "T3", "T4", "T5", "T6", "verdicts"):
            assert (out / f"{name}.csv").exists(), name

    def test_builder_matches_cli(self):
        bundle = build_report_bundle(seed=9, shots=0, visibility=1.0)
        assert bundle.all_passed()
        t4_ideal = [row["ideal"] for row in bundle.tables["T4"]]
        assert max(v for v in t4_ideal if v < 0.5) <= 1e-12
        assert min(v for v in t4_ideal if v > 0.5) >= 1.0 - 1e-12
