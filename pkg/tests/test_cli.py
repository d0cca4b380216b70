"""CLI tests: subcommands, exit codes, pipelines, determinism."""
import json

import pytest
from click.testing import CliRunner

from qftcost.cli import main
from qftcost.circuit import Circuit, GateKind


@pytest.fixture
def runner():
    # click >= 8.2 separates stdout/stderr by default
    return CliRunner()


def build_circuit_file(runner, tmp_path, args):
    path = tmp_path / "circuit.json"
    result = runner.invoke(main, ["build", *args, "-o", str(path)])
    assert result.exit_code == 0, result.output
    return path


class TestBuild:
    def test_census_n3(self, runner, tmp_path):
        path = build_circuit_file(runner, tmp_path, ["3"])
        circuit = Circuit.from_json(path.read_text())
        counts = circuit.gate_census()
        assert counts[GateKind.H] == 3 and counts[GateKind.CPHASE] == 3

    def test_approx_census(self, runner, tmp_path):
        path = build_circuit_file(runner, tmp_path, ["5", "--approx", "2"])
        counts = Circuit.from_json(path.read_text()).gate_census()
        assert counts[GateKind.H] == 5 and counts[GateKind.CPHASE] == 4

    def test_zero_qubits_usage_error(self, runner):
        result = runner.invoke(main, ["build", "0"])
        assert result.exit_code == 2

    def test_census_printed(self, runner, tmp_path):
        path = tmp_path / "c.json"
        result = runner.invoke(main, ["build", "3", "-o", str(path)])
        assert "H: 3" in result.output and "CPhase: 3" in result.output

    def test_lowered_output(self, runner, tmp_path):
        path = build_circuit_file(runner, tmp_path, ["3", "--lower", "elementary"])
        kinds = {g.kind for g in Circuit.from_json(path.read_text())}
        assert GateKind.CPHASE not in kinds and GateKind.XOR not in kinds


class TestRoute:
    def test_two_qubit_qft_no_swaps(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["2"])
        result = runner.invoke(
            main, ["route", str(src), "-o", str(tmp_path / "r.json")]
        )
        assert result.exit_code == 0
        report = json.loads(result.stdout.strip())
        assert report["measured"] == 0

    def test_five_qubit_report_values(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["5"])
        out = tmp_path / "r.json"
        result = runner.invoke(main, ["route", str(src), "--reduce", "-o", str(out)])
        report = json.loads(result.stdout.strip())
        assert report["paper_naive"] == 30
        assert report["paper_reduced"] == 12
        assert report["measured"] == 20
        assert report["reduced_measured"] == 12

    def test_routed_circuit_adjacent(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["6"])
        out = tmp_path / "r.json"
        assert runner.invoke(main, ["route", str(src), "-o", str(out)]).exit_code == 0
        routed = Circuit.from_json(out.read_text())
        assert all(
            abs(g.qubits[0] - g.qubits[1]) == 1 for g in routed if g.is_two_qubit
        )

    def test_malformed_input(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert runner.invoke(main, ["route", str(bad)]).exit_code == 2


class TestVerify:
    def test_qft_with_reversal_matches_dft(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["4", "--bit-reversal"])
        result = runner.invoke(main, ["verify", str(src), "--against", "dft"])
        assert result.exit_code == 0
        assert "residual=" in result.output

    def test_qft_without_reversal_mismatches(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["4"])
        result = runner.invoke(main, ["verify", str(src), "--against", "dft"])
        assert result.exit_code == 1

    def test_self_comparison_phase_one(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["3"])
        result = runner.invoke(main, ["verify", str(src), "--against", str(src)])
        assert result.exit_code == 0
        assert "phase=1" in result.output

    def test_capacity_exit(self, runner, tmp_path):
        big = tmp_path / "big.json"
        big.write_text(json.dumps({"n": 13, "stage": "synthesized", "gates": []}))
        result = runner.invoke(main, ["verify", str(big)])
        assert result.exit_code == 3


class TestCost:
    def test_closed_form_taun(self, runner):
        result = runner.invoke(
            main, ["cost", "--closed-form", "qft", "--policy", "tauN", "--n-range", "2:5"]
        )
        costs = [line.split(",")[1] for line in result.output.strip().split("\n")[1:]]
        assert costs == ["1", "5", "17", "49"]

    def test_closed_form_tau0(self, runner):
        result = runner.invoke(
            main, ["cost", "--closed-form", "qft", "--policy", "tau0", "--n-range", "2:5"]
        )
        costs = [line.split(",")[1] for line in result.output.strip().split("\n")[1:]]
        assert costs == ["0.5", "1.25", "2.125", "3.0625"]

    def test_circuit_report(self, runner, tmp_path):
        src = build_circuit_file(runner, tmp_path, ["5"])
        result = runner.invoke(main, ["cost", str(src), "--policy", "tauN"])
        report = json.loads(result.output)
        assert report["total_relative"] == "49"
        assert report["breakdown"]["controlled_rotation"] == "49"

    def test_infeasible_model_exit(self, runner):
        result = runner.invoke(
            main,
            ["cost", "--closed-form", "qft", "--n-range", "2:4",
             "--tau0", "1e-6", "--t-res", "1e-3"],
        )
        assert result.exit_code == 4

    def test_intensity_field_warning(self, runner):
        result = runner.invoke(
            main,
            ["cost", "--closed-form", "qft", "--mode", "intensity",
             "--b-min", "1e-3", "--n-range", "100:100"],
        )
        assert result.exit_code == 0
        assert "exceeds feasible field" in result.output
        assert "ratio=2^99" in result.output


class TestPipeline:
    def test_build_route_verify_cost(self, runner, tmp_path):
        for n in range(2, 9):
            built = build_circuit_file(runner, tmp_path, [str(n), "--bit-reversal"])
            routed = tmp_path / "routed.json"
            r = runner.invoke(
                main, ["route", str(built), "--reduce", "-o", str(routed)]
            )
            assert r.exit_code == 0
            v = runner.invoke(main, ["verify", str(routed), "--against", "dft"])
            assert v.exit_code == 0, f"n={n}: {v.output}"
            c = runner.invoke(main, ["cost", str(routed)])
            assert c.exit_code == 0

    def test_determinism(self, runner, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["cost", "--closed-form", "qft", "--n-range", "2:20"]
        assert runner.invoke(main, [*args, "-o", str(a)]).exit_code == 0
        assert runner.invoke(main, [*args, "-o", str(b)]).exit_code == 0
        assert a.read_bytes() == b.read_bytes()
