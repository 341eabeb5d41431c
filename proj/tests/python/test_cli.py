import json
import os
import subprocess

import pytest

CLI = os.environ.get("SHIFTINV_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="SHIFTINV_CLI not set")


def run_cli(args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_analyze_from_stdin_round_trips():
    request = {
        "group": {"cyclic_orders": [4]},
        "distributions": {
            "X": {"probs": {"[0]": "1/2", "[2]": "1/2"}},
            "Y": {"probs": {"[0]": "1/2", "[2]": "1/2"}},
        },
        "command": "analyze",
    }
    result = run_cli(["analyze", "--input", "-"], stdin=json.dumps(request))
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["verdicts"]["is_fixed_point"] is True
    assert report["verdicts"]["independence_ok"] is True
    assert report["stabilizer"] == [[0], [2]]

    again = run_cli(["analyze", "--input", "-"], stdin=json.dumps(request))
    assert again.stdout == result.stdout  # byte-identical reports


def test_sample_flags_override_document(tmp_path):
    request = {
        "group": {"cyclic_orders": [12]},
        "distributions": {
            "X": {"probs": {f"[{i}]": "1/12" for i in range(12)}},
            "Y": {"probs": {"[0]": "1/3", "[4]": "1/3", "[8]": "1/3"}},
        },
        "command": "sample",
    }
    path = tmp_path / "request.json"
    path.write_text(json.dumps(request))
    result = run_cli(["sample", "--input", str(path), "--n", "20000", "--seed", "7"])
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["monte_carlo"]["sample_count"] == 20000
    assert report["monte_carlo"]["seed"] == 7
    num, _, den = report["monte_carlo"]["tv_distance"].partition("/")
    assert int(num) / int(den or "1") <= 0.02


def test_validation_failures_exit_one():
    bad = {
        "group": {"cyclic_orders": [4]},
        "distributions": {"Y": {"probs": {"[5]": "1"}}},
        "command": "analyze",
    }
    result = run_cli(["analyze", "--input", "-"], stdin=json.dumps(bad))
    assert result.returncode == 1
    assert "out of range" in result.stderr


def test_independence_precondition_exits_one():
    request = {
        "group": {"cyclic_orders": [2]},
        "distributions": {
            "X": {"probs": {"[0]": "1"}},
            "Y": {"probs": {"[1]": "1"}},
        },
        "command": "independence",
    }
    result = run_cli(["independence", "--input", "-"], stdin=json.dumps(request))
    assert result.returncode == 1
    report = json.loads(result.stdout)
    assert report["verdicts"]["is_fixed_point"] is False
    assert "precondition_failure" in report


def test_circle_subcommand():
    result = run_cli(["circle", "--support", "1/4,1/6"])
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["circle"]["kind"] == "finite-cyclic"
    assert report["circle"]["modulus"] == 12
    assert report["circle"]["embedding_invariance_ok"] is True

    haar = run_cli(["circle", "--nonrational"])
    assert json.loads(haar.stdout)["circle"]["kind"] == "haar-forced"


def test_fixed_points_with_oracle():
    request = {
        "group": {"cyclic_orders": [2, 3]},
        "distributions": {"Y": {"probs": {"[1,0]": "1/2", "[0,0]": "1/2"}}},
        "command": "fixed-points",
    }
    result = run_cli(["fixed-points", "--input", "-", "--oracle"], stdin=json.dumps(request))
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["fixed_point_basis"]["coset_size"] == 2
    assert report["fixed_point_basis"]["dimension"] == 3
    assert report["oracle"]["matches_lift"] is True
