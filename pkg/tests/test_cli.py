import json
import subprocess
import sys

import pytest

from eccspec.cli import dumps, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), (json.loads(err) if err.strip() else None)


def test_report_complete4(capsys):
    code, rep, _ = run(capsys, "report", "--family", "complete", "--params", "4", "--no-timestamp")
    assert code == 0
    assert rep["polynomials"]["E"] == ["1", "0", "-6", "-8", "-3"]
    assert "timestamp" not in rep
    for name in ("E", "EL", "EQ"):
        assert sum(gr["multiplicity"] for gr in rep["spectra"][name]["groups"]) == 4
        assert len(rep["polynomials"][name]) == 5


def test_report_petersen_spectra(capsys):
    code, rep, _ = run(capsys, "report", "--family", "petersen")
    assert code == 0 and "timestamp" in rep
    expected = {"E": [(12, 1), (2, 4), (-4, 5)], "EL": [(16, 5), (10, 4), (0, 1)], "EQ": [(24, 1), (14, 4), (8, 5)]}
    for name, want in expected.items():
        got = rep["spectra"][name]["groups"]
        assert [gr["multiplicity"] for gr in got] == [m for _, m in want]
        assert [gr["value"] for gr in got] == pytest.approx([v for v, _ in want], abs=1e-8)
    assert rep["ecc"]["regular_degree"] == 12 and rep["input"]["n"] == 10


def test_report_k1_edge_list(tmp_path, capsys):
    f = tmp_path / "k1.txt"
    f.write_text("# single vertex\n1\n")
    code, rep, _ = run(capsys, "report", str(f), "--no-timestamp")
    assert code == 0
    assert rep["spectra"]["E"]["values"] == [0.0]
    assert rep["structure"]["ecc_bipartite"] is False
    assert rep["input"]["source"].startswith("edgelist:")


def test_report_graph6_file_and_inline(tmp_path, capsys):
    f = tmp_path / "c5.g6"
    f.write_text(">>graph6<<Dhc\n")
    _, a, _ = run(capsys, "report", str(f), "--no-timestamp")
    _, b, _ = run(capsys, "report", "Dhc", "--no-timestamp")
    assert a["spectra"] == b["spectra"] and a["input"]["graph6"] == "Dhc"


def test_report_bipartite_witness(capsys):
    _, rep, _ = run(capsys, "report", "--family", "path", "--params", "4", "--no-timestamp")
    assert rep["structure"]["ecc_bipartite"] and sorted(map(sorted, rep["structure"]["partition"])) == [[0, 1], [2, 3]]


def test_report_deterministic(capsys):
    argv = ["report", "--family", "complete_bipartite", "--params", "2,3", "--no-timestamp", "--verify", "all"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 7\n")
    dis = tmp_path / "dis.txt"
    dis.write_text("3\n0 1\n")
    assert run(capsys, "report", str(bad))[0] == 1
    code, _, err = run(capsys, "report", str(dis))
    assert code == 2 and err["error"] == "disconnected"
    assert run(capsys, "report", "--graph6", "D~")[0] == 1
    assert run(capsys, "verify", "nope", "--graph6", "Dhc")[0] == 1
    assert run(capsys, "report")[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "sweep", "--n-max", "9")[0] == 1
    code, _, err = run(capsys, "report", "--family", "cycle", "--params", "2")
    assert code == 1 and err["error"] == "usage"


def test_verify_closed_forms_range(capsys):
    code, out, _ = run(capsys, "verify", "closed-forms", "--family", "complete", "--range", "2..30", "--no-timestamp")
    assert code == 0 and out["summary"] == {"passed": 29, "failed": 0, "skipped": 0}


def test_verify_bipartite_range_product(capsys):
    code, out, _ = run(capsys, "verify", "closed-forms", "--family", "complete_bipartite", "--range", "1..3", "--no-timestamp")
    assert code == 0 and out["summary"] == {"passed": 4, "failed": 0, "skipped": 5}


def test_verify_join_petersen(capsys):
    code, out, _ = run(capsys, "verify", "join", "--family", "petersen")
    assert code == 0 and out["verdicts"][0]["passed"] is True


def test_verify_bipartite_c5(capsys):
    code, out, _ = run(capsys, "verify", "bipartite", "--graph6", "Dhc", "--tol", "1e-7")
    assert code == 0
    assert set(out["verdicts"][0]["details"]["predicates"].values()) == {False}
    assert out["verdicts"][0]["tolerance"] == 1e-7


def test_verify_failure_exit_code(capsys):
    # an absurdly tight tolerance makes the spectral sub-checks fail honestly
    code, out, _ = run(capsys, "verify", "regular", "--family", "petersen", "--tol", "0")
    assert code == 3 and out["summary"]["failed"] == 1


def test_sweep_n2(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "2", "--no-timestamp")
    assert code == 0 and out["graph_counts"] == {"1": 1, "2": 1} and out["total_failures"] == 0


def test_sweep_n5(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "5", "--no-timestamp", "--jobs", "2")
    assert code == 0 and out["graph_counts"] == {"1": 1, "2": 1, "3": 4, "4": 38, "5": 728}


def test_sweep_sample_seed_echoed(capsys):
    code, out, _ = run(capsys, "sweep", "--n-max", "7", "--mode", "sample", "--count", "100", "--seed", "7", "--checks", "trace")
    assert code == 0 and out["seed"] == 7 and out["count"] == 100


def test_float_formatting():
    text = dumps({"b": 1 / 3, "a": -0.0, "c": [2.0000000000001]})
    assert text == '{"a": 0.0, "b": 0.333333333333, "c": [2.0]}'


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eccspec.cli", "report", "--graph6", "A_", "--no-timestamp"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["spectra"]["E"]["values"] == [1.0, -1.0]
