import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hardysim.cli import dumps, main

PI3 = repr(math.pi / 3)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_hardy_pi_over_three(capsys):
    status, out, _ = run(capsys, "hardy", "--theta1", "1.0471976", "--theta2", "1.0471976")
    doc = json.loads(out)
    assert status == 0
    assert doc["p_joint_d"] == pytest.approx(0.0459184, abs=1e-6)
    assert doc["chain_holds"] is True
    assert {"theta1", "theta2", "case"} <= set(doc)


def test_hardy_maximally_entangled(capsys):
    status, out, _ = run(capsys, "hardy", "--theta1", "0.7853982", "--theta2", "0.7853982")
    doc = json.loads(out)
    assert doc["p_joint_d"] == pytest.approx(0, abs=1e-12)
    assert doc["degenerate"] is True


def test_hardy_degrees(capsys):
    _, out, _ = run(capsys, "hardy", "--theta1", "60", "--theta2", "60", "--degrees")
    doc = json.loads(out)
    assert doc["theta1"] == pytest.approx(math.pi / 3, abs=1e-15)
    assert doc["p_joint_d"] == pytest.approx(9 / 196, abs=1e-12)


def test_hardy_undefined_exit_code(capsys):
    half = repr(math.pi / 2)
    status, out, _ = run(capsys, "hardy", "--theta1", half, "--theta2", half)
    assert status == 3
    assert json.loads(out)["p_f_given_g_b"] is None


def test_lhv(capsys):
    status, out, _ = run(capsys, "lhv")
    doc = json.loads(out)
    assert status == 0
    assert doc["lhv_max_case_d"] == 0
    assert len(doc["satisfying_strategies"]) == 5
    assert doc["summary"]


def test_lhv_with_angles(capsys):
    _, out, _ = run(capsys, "lhv", "--theta1", PI3, "--theta2", PI3)
    doc = json.loads(out)
    assert doc["quantum_case_d"] > doc["lhv_max_case_d"]
    assert "contradicts" in doc["summary"]


def test_lhv_drop_constraint(capsys):
    _, out, _ = run(capsys, "lhv", "--drop", "b")
    assert json.loads(out)["lhv_max_case_d"] == 1


def test_simulate_schema(capsys):
    _, out, _ = run(capsys, "simulate", "--theta1", PI3, "--theta2", PI3, "--case", "A")
    doc = json.loads(out)
    assert doc["case"] == "A"
    assert doc["norm_sq"] == pytest.approx(1, abs=1e-12)
    amp = doc["amplitudes"][0]
    assert set(amp) == {"occupation", "re", "im"}
    assert all(isinstance(n, int) for n in amp["occupation"])
    total = sum(a["re"] ** 2 + a["im"] ** 2 for a in doc["amplitudes"])
    assert total == pytest.approx(1, abs=1e-12)


def test_simulate_csv(capsys):
    _, out, _ = run(capsys, "simulate", "--theta1", PI3, "--theta2", PI3, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n0", "n1", "n2", "n3", "re", "im"]
    assert len(rows) == 10


def test_sweep_csv(capsys):
    _, out, _ = run(capsys, "sweep", "--resolution", "4", "--format", "csv", "--jobs", "1")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["theta1", "theta2", "P", "chain_ok"]
    assert len(rows) == 17
    assert rows[1][3] == "true"
    assert rows[2][3] == ""
    # row-major: theta2 varies fastest
    assert rows[1][0] == rows[2][0] and rows[1][1] != rows[2][1]


def test_sweep_json(capsys):
    _, out, _ = run(capsys, "sweep", "--resolution", "3", "--verify-chain", "all", "--jobs", "1")
    doc = json.loads(out)
    assert len(doc["points"]) == 9
    assert all(p["chain_ok"] for p in doc["points"])


def test_optimize(capsys):
    _, out, _ = run(capsys, "optimize", "--resolution", "32")
    doc = json.loads(out)
    assert abs(doc["theta1_star"] - doc["theta2_star"]) <= 1e-6
    assert doc["p_star"] > 0.0515


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    status, out, _ = run(capsys, "hardy", "--theta1", PI3, "--theta2", PI3, "--output", str(path))
    assert status == 0 and out == ""
    assert json.loads(path.read_text())["chain_holds"] is True


def test_byte_identical_runs(capsys):
    argv = ["simulate", "--theta1", "0.3", "--theta2", "1.2", "--case", "D"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["hardy", "--theta1", "abc", "--theta2", "1"],
    ["hardy", "--theta1", "nan", "--theta2", "1"],
    ["hardy", "--theta1", "1"],
    ["lhv", "--theta1", "1"],
    ["sweep", "--resolution", "1"],
    ["sweep", "--jobs", "0"],
    ["optimize", "--tolerance", "1e-20"],
])
def test_usage_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ""
    assert err.count("\n") == 1 and err.startswith("hardysim: error:")


def test_dumps_formatting():
    assert dumps({"x": 0.1, "n": 3, "z": 0.0, "u": None, "b": True}) == \
        '{"x": 0.10000000000000001, "n": 3, "z": 0.0, "u": null, "b": true}'


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hardysim", "lhv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lhv_max_case_d"] == 0
