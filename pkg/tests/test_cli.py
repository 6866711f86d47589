import json
import subprocess
import sys

import pytest

from weylchain.cli import run


def run_json(capsys, argv):
    code = run(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_dims_table(capsys):
    assert run(["dims", "--n", "2"]) == 0
    out = capsys.readouterr().out
    row = [ln.split() for ln in out.splitlines() if ln.split()[:1] == ["2"]][0]
    assert row == ["2", "10", "9", "1", "5"]


def test_verify_nucleus_json(capsys):
    code, data = run_json(capsys, ["verify", "theorem2", "--n", "3", "--k", "3"])
    assert code == 0
    assert set(data) == {"suite", "params", "checks", "wall_time_ms"}
    dims = {c["id"]: c["observed"] for c in data["checks"]}
    assert dims["k=3.nucleus_dim"] == 21
    assert data["wall_time_ms"] is None


def test_json_is_deterministic(capsys):
    run(["verify", "chain", "--n", "3", "--format", "json"])
    first = capsys.readouterr().out
    run(["verify", "chain", "--n", "3", "--format", "json"])
    assert capsys.readouterr().out == first


def test_timing_flag(capsys):
    code, data = run_json(capsys, ["verify", "relations", "--n", "2", "--timing"])
    assert code == 0
    assert isinstance(data["wall_time_ms"], float)


def test_uniqueness_scale_exit(capsys):
    assert run(["verify", "uniqueness", "--n", "5", "--k", "4"]) == 3
    assert "scale" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["verify", "nosuch", "--n", "3"],
    ["verify", "chain", "--n", "3", "--k", "4"],
    ["dims", "--n", "3", "--p", "4"],
    ["verify", "chain", "--n", "3", "--p", "3"],
    ["dims"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_rank_guard(capsys):
    assert run(["dims", "--n", "6"]) == 3
    assert run(["dims", "--n", "6", "--k", "1", "--max-n", "6"]) == 0


@pytest.mark.parametrize("suite", ["theorem4", "perfect", "sigma", "lemmas", "relations"])
def test_suites_pass(suite, capsys):
    assert run(["verify", suite, "--n", "3"]) == 0


def test_lattice_dot(tmp_path, capsys):
    assert run(["lattice", "--n", "3", "--k", "3", "--cache-dir", str(tmp_path)]) == 0
    dot = (tmp_path / "lattice-B-n3-k3-p2.dot").read_text()
    assert 'label="27"' in dot


def test_snf(capsys, tmp_path):
    code, data = run_json(capsys, ["snf", "--n", "3", "--cache-dir", str(tmp_path)])
    assert code == 0
    obs = {c["id"]: c["observed"] for c in data["checks"]}
    assert obs["k=3.divisors"] == {"1": 28, "2": 7}
    assert (tmp_path / "lattice-B-n3-k3-p0.txt").exists()


def test_chain_command(capsys):
    code, data = run_json(capsys, ["chain", "--n", "3", "--k", "2"])
    assert code == 0
    assert data["checks"][0]["observed"] == [1, 7, 21]


def test_report_all_small(capsys):
    code, data = run_json(capsys, ["report-all", "--n", "2"])
    assert code == 0
    assert data["suite"] == "report-all"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylchain", "dims", "--n", "2", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["suite"] == "dims"
