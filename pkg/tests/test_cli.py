"""End-to-end tests of the command-line interface (subprocess level)."""

import json
import math
import subprocess
import sys

import pytest


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "hyplobe", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
        timeout=120,
    )


class TestTriangleCommand:
    def test_json_report(self):
        res = run_cli("triangle", "--b", "1.0", "--c", "1.2", "--alpha", "0.9")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        sol = report["solution"]
        assert abs(report["area_defect"] - report["area_two_tau"]) < 1e-9
        assert sol["area"] == pytest.approx(
            math.pi - sol["alpha"] - sol["beta"] - sol["gamma"], abs=1e-15
        )
        assert report["figure"]["tau"] > 0.0

    def test_floats_round_trip_exactly(self):
        res = run_cli("triangle", "--b", "1.0", "--c", "1.0", "--alpha", "1.5")
        a = json.loads(res.stdout)["solution"]["a"]
        # 17 significant digits: parsing the emitted text recovers the double
        assert float(repr(a)) == a

    def test_bad_input_exit_2(self):
        res = run_cli("triangle", "--b", "1.0", "--c", "1.0", "--alpha", "3.5")
        assert res.returncode == 2
        assert "error:" in res.stderr

    def test_svg_output_is_self_contained(self):
        res = run_cli(
            "triangle", "--b", "1.0", "--c", "1.0", "--alpha", "1.0",
            "--format", "svg",
        )
        assert res.returncode == 0
        svg = res.stdout
        assert svg.lstrip().startswith("<svg")
        assert svg.rstrip().endswith("</svg>")
        assert "href" not in svg  # no external references

    def test_deterministic_output(self):
        a = run_cli("triangle", "--b", "0.7", "--c", "2.1", "--alpha", "0.5")
        b = run_cli("triangle", "--b", "0.7", "--c", "2.1", "--alpha", "0.5")
        assert a.stdout == b.stdout


class TestOptimizeCommand:
    def test_report_fields(self):
        res = run_cli("optimize", "--b", "1.0", "--c", "1.5")
        assert res.returncode == 0
        report = json.loads(res.stdout)
        sol = report["solution"]
        assert abs(sol["alpha"] - sol["beta"] - sol["gamma"]) < 1e-12
        certs = report["certificates"]
        assert certs["right_angle_residual"] < 1e-9
        assert certs["tangency_gap"] < 1e-9
        assert certs["alpha_plus_tau_residual"] < 1e-9
        assert report["grid_check"]["gap"] <= 2.0 * report["grid_check"]["grid_step"]

    def test_bad_input_exit_2(self):
        assert run_cli("optimize", "--b", "0", "--c", "1").returncode == 2


class TestSteinerCommand:
    def test_run_and_trace(self, tmp_path):
        trace = tmp_path / "trace.csv"
        out = tmp_path / "report.json"
        res = run_cli(
            "steiner", "--n", "6", "--seed", "3",
            "--trace-csv", str(trace), "--output", str(out),
        )
        assert res.returncode == 0
        report = json.loads(out.read_text())
        assert report["converged"] is True
        assert report["final"]["deficit"] < report["initial"]["deficit"]
        lines = trace.read_text().splitlines()
        assert lines[0] == "iter,vertex,area,perimeter,residual"
        perim0 = report["initial"]["perimeter"]
        areas = []
        for line in lines[1:]:
            _, _, area, perimeter, _ = line.split(",")
            areas.append(float(area))
            assert abs(float(perimeter) - perim0) < 1e-9
        assert all(a2 >= a1 - 1e-12 for a1, a2 in zip(areas, areas[1:]))

    def test_byte_identical_across_runs(self, tmp_path):
        outputs = []
        for k in range(2):
            trace = tmp_path / f"trace{k}.csv"
            res = run_cli("steiner", "--n", "8", "--seed", "42",
                          "--trace-csv", str(trace))
            assert res.returncode == 0
            outputs.append((trace.read_bytes(), res.stdout))
        assert outputs[0] == outputs[1]

    def test_bad_input_exit_2(self, tmp_path):
        res = run_cli("steiner", "--n", "2", "--seed", "0",
                      "--trace-csv", str(tmp_path / "t.csv"))
        assert res.returncode == 2


class TestIsoperimetricCommand:
    def test_sweep_table(self):
        res = run_cli("isoperimetric", "--n-min", "3", "--n-max", "12",
                      "--perimeter", "7.0")
        assert res.returncode == 0
        lines = res.stdout.splitlines()
        assert lines[0] == "n,area,deficit"
        rows = [line.split(",") for line in lines[1:]]
        assert rows[-1][0] == "circle"
        deficits = [float(r[2]) for r in rows[:-1]]
        assert all(d2 < d1 for d1, d2 in zip(deficits, deficits[1:]))
        assert abs(float(rows[-1][2])) < 1e-9
        # polygon areas increase toward the circle area from below
        circle_area = float(rows[-1][1])
        assert all(float(r[1]) < circle_area for r in rows[:-1])

    def test_bad_range_exit_2(self):
        assert run_cli("isoperimetric", "--n-min", "2", "--perimeter", "5").returncode == 2
        assert run_cli("isoperimetric", "--perimeter", "1e9").returncode == 2


class TestVerifyCommand:
    def test_all_checks_pass(self):
        res = run_cli("verify", "--samples", "50", "--seed", "0")
        assert res.returncode == 0
        assert "all properties passed" in res.stdout
        assert "FAIL" not in res.stdout

    def test_fault_injection_is_caught(self):
        res = run_cli("verify", "--samples", "50", "--seed", "0",
                      "--inject-fault", "tau-sign")
        assert res.returncode == 1
        assert "FAIL area-equivalence" in res.stdout


class TestTopLevel:
    def test_version(self):
        res = run_cli("--version")
        assert res.returncode == 0
        assert res.stdout.startswith("hyplobe ")

    def test_missing_subcommand_fails(self):
        assert run_cli().returncode != 0
