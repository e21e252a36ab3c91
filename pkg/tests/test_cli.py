import json
import os
import subprocess
import sys

import pytest

from oracles import nx_isomorphic
from relgraph.cli import EXIT_BUDGET, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, run
from relgraph.graphcore import format_edge_list, read_edge_list, wagner_graph
from relgraph.umrg import construct_gn


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("# 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n")
    return str(path)


@pytest.fixture
def w_file(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text(format_edge_list(wagner_graph()))
    return str(path)


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_json(capsys, c4_file):
    code, out, err = call(capsys, "spectrum", c4_file, "--format", "json")
    assert code == EXIT_OK and err == ""
    doc = json.loads(out)
    assert doc["data"]["mu"] == ["0", "0", "6", "4", "1"]
    assert doc["runtime_ms"] is None


def test_spectrum_text_and_csv(capsys, c4_file):
    code, out, _ = call(capsys, "spectrum", c4_file)
    assert code == 0 and "6" in out
    code, out, _ = call(capsys, "spectrum", c4_file, "--format", "csv")
    assert out.splitlines()[:3] == ["k,mu", "0,0", "1,0"]


def test_json_byte_identical_across_jobs(capsys, w_file):
    _, one, _ = call(capsys, "spectrum", w_file, "--format", "json", "--jobs", "1")
    _, two, _ = call(capsys, "spectrum", w_file, "--format", "json", "--jobs", "2")
    assert one == two


def test_timing_flag(capsys, c4_file):
    _, out, _ = call(capsys, "trees", c4_file, "--format", "json", "--timing")
    assert json.loads(out)["runtime_ms"] is not None


def test_trees_chains_reliability(capsys, w_file, c4_file):
    _, out, _ = call(capsys, "trees", w_file, "--format", "json")
    assert json.loads(out)["data"]["spanning_trees"] == "392"
    code, out, _ = call(capsys, "chains", w_file, "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 13
    _, out, _ = call(capsys, "reliability", c4_file, "--rho", "1/2", "--format", "json")
    data = json.loads(out)["data"]
    assert data["reliability"] == "5/16" and data["reliability_float"] == "0.3125"


def test_construct_gn8_is_wagner(capsys, tmp_path):
    code, out, _ = call(capsys, "construct", "gn", "--n", "8")
    assert code == 0
    path = tmp_path / "g8.txt"
    path.write_text(out)
    assert nx_isomorphic(read_edge_list(str(path)), wagner_graph())
    _, out, _ = call(capsys, "construct", "hn", "--n", "13", "--format", "json")
    assert len(json.loads(out)["data"]["edges"]) == 17
    code, _, err = call(capsys, "construct", "gn")
    assert code == EXIT_USAGE and err.startswith("relgraph: usage-error:")


def test_construct_roundtrips(capsys, tmp_path):
    _, out, _ = call(capsys, "construct", "gn", "--n", "23")
    path = tmp_path / "g.txt"
    path.write_text(out)
    assert read_edge_list(str(path)) == construct_gn(23)


def test_verify_count5(capsys):
    code, out, _ = call(capsys, "verify", "count5", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["verdict"] == "confirmed"
    assert set(doc["data"]["nontrivial_by_tag"]) == {"C4", "P3"}


def test_verify_refuted_exit_code(capsys):
    code, _, err = call(capsys, "verify", "min4", "--n", "13")
    assert code == EXIT_REFUTED
    assert err.strip() == "relgraph: refuted: claim=prop-min4"


def test_verify_confirmed_single_n(capsys):
    code, _, _ = call(capsys, "verify", "min4", "--n", "24")
    assert code == EXIT_OK


def test_out_of_budget(capsys, w_file):
    code, out, err = call(capsys, "spectrum", w_file, "--budget", "100")
    assert code == EXIT_BUDGET and out == ""
    assert err.startswith("relgraph: out-of-budget:") and err.count("\n") == 1


def test_malformed_and_missing_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n")
    code, _, err = call(capsys, "spectrum", str(bad))
    assert code == EXIT_USAGE and err.startswith("relgraph: malformed-input:")
    code, _, err = call(capsys, "spectrum", str(tmp_path / "nope.txt"))
    assert code == EXIT_USAGE and err.startswith("relgraph: unreadable-input:")


def test_usage_errors(capsys, c4_file):
    for argv in (["bogus"], ["spectrum"], ["spectrum", c4_file, "--jobs", "0"], ["scan", "--n-max", "100"],
                 ["reliability", c4_file, "--rho", "x"], ["verify", "growth", "--n-min", "9", "--n-max", "8"]):
        code, _, err = call(capsys, *argv)
        assert code == EXIT_USAGE, argv
        assert err.startswith("relgraph: usage-error:") and err.count("\n") == 1


def test_invalid_rho_range(capsys, c4_file):
    code, _, err = call(capsys, "reliability", c4_file, "--rho", "2")
    assert code == EXIT_USAGE and err.startswith("relgraph: invalid-input:")


def test_scan_csv_threshold_line(capsys):
    code, out, _ = call(capsys, "scan", "--n-max", "300", "--no-oracle", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("n,s,r,a1,a2,a3,a4,a5,total")
    assert lines[-1].startswith("# threshold observed=") and "verdict=confirmed" in lines[-1]
    observed = int(lines[-1].split("observed=")[1].split()[0])
    assert observed <= 167


def test_env_jobs(monkeypatch, capsys, w_file):
    monkeypatch.setenv("RELGRAPH_JOBS", "2")
    code, out, _ = call(capsys, "spectrum", w_file, "--format", "json")
    assert code == 0 and json.loads(out)["data"]["mu"][3] == "8"
    monkeypatch.setenv("RELGRAPH_JOBS", "zero")
    code, _, err = call(capsys, "spectrum", w_file)
    assert code == EXIT_USAGE and "RELGRAPH_JOBS" in err


def test_eq1_with_files(capsys, w_file, c4_file):
    code, out, _ = call(capsys, "verify", "eq1", "--file", w_file, "--format", "json")
    assert code == 0 and json.loads(out)["data"]["rows"][0]["match"] is True
    code, _, _ = call(capsys, "verify", "eq1", "--file", c4_file)
    assert code == EXIT_USAGE


def test_module_entry_point(w_file):
    env = dict(os.environ)
    proc = subprocess.run([sys.executable, "-m", "relgraph", "trees", w_file], capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and "392" in proc.stdout
