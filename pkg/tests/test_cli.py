"""Command-line interface: exit codes, formats, determinism, golden file."""

import csv
import json
import os
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden" / "eval_H1_p1.json"


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("FINSLEROID_SEED", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "finsleroid", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_eval_golden_document():
    r = run_cli("eval", "--H", "1", "--p", "1", "--y", "2,1,0,0.0001")
    assert r.returncode == 0
    assert r.stdout == GOLDEN.read_text()


def test_eval_values_and_schema():
    r = run_cli("eval", "--H", "1", "--p", "1", "--y", "2,1,0,0.0001")
    doc = json.loads(r.stdout)
    assert doc["status"] == "ok"
    assert abs(doc["bundle"]["F"] - 3**0.5) < 1e-6
    assert abs(doc["tensors"]["det_g_numeric"] + 1.0) < 1e-9
    assert abs(doc["tensors"]["det_g_closed"] + 1.0) < 1e-9
    assert set(doc) == {
        "angles", "bundle", "domain", "frame", "input", "status", "tensors",
    }


def test_eval_internal_determinant_cross_check():
    # anisotropic point sampled inside the admissible cone
    r = run_cli("eval", "--H", "1.25", "--p", "0.8", "--y", "2,0.22,0.147,0.44")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    det_n = doc["tensors"]["det_g_numeric"]
    det_c = doc["tensors"]["det_g_closed"]
    assert abs(det_n - det_c) < 1e-9 * abs(det_c)


def test_eval_domain_error_exit_code_and_bounds():
    r = run_cli("eval", "--H", "1.25", "--p", "0.8", "--y", "1,0,0,0")
    assert r.returncode == 2
    assert "domain error" in r.stderr
    assert "r_sup" in r.stderr  # admissible bounds are printed


def test_eval_radial_domain_error_carries_bounds():
    # outside the radial interval (this is beyond the cone for these params)
    r = run_cli("eval", "--H", "1.25", "--p", "0.8", "--y", "2,0.3,0.2,0.6")
    assert r.returncode == 2
    assert "outside the admissible interval" in r.stderr


def test_usage_error_exit_code():
    r = run_cli("eval", "--H", "1", "--p", "1", "--y", "1,2,3")
    assert r.returncode == 1
    r = run_cli("eval", "--H", "1", "--p", "1")
    assert r.returncode == 1
    r = run_cli("nonsense")
    assert r.returncode == 1


def test_eval_csv_format_columns():
    r = run_cli("eval", "--H", "1", "--p", "1", "--y", "2,1,0,0.0001",
                "--format", "csv")
    rows = list(csv.reader(r.stdout.splitlines()))
    assert rows[0] == [
        "H", "p", "y0", "y1", "y2", "y3", "b", "w1", "w2", "w3",
        "eta", "theta", "phi", "r", "V", "F", "det_g_numeric", "det_g_closed",
    ]
    assert len(rows) == 2
    assert float(rows[1][15]) == json.loads(GOLDEN.read_text())["bundle"]["F"]


def test_eval_out_file(tmp_path):
    target = tmp_path / "doc.json"
    r = run_cli("eval", "--H", "1", "--p", "1", "--y", "2,1,0,0.0001",
                "--out", str(target))
    assert r.returncode == 0
    assert r.stdout == ""
    assert json.loads(target.read_text())["status"] == "ok"


def test_eval_with_tetrad_file(tmp_path):
    tetrad_file = tmp_path / "tetrad.json"
    tetrad_file.write_text(json.dumps({
        "tetrad": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    }))
    r = run_cli("eval", "--H", "1", "--p", "1", "--y", "2,1,0,0.0001",
                "--tetrad", str(tetrad_file))
    assert r.returncode == 0
    assert json.loads(r.stdout) == json.loads(GOLDEN.read_text())


def test_scan_determinism_and_seed_sensitivity():
    args = ("report", "scan", "--H", "1.25", "--p", "0.8",
            "--samples", "4", "--seed", "7", "--format", "csv")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == 0
    assert first.stdout == second.stdout
    other = run_cli("report", "scan", "--H", "1.25", "--p", "0.8",
                    "--samples", "4", "--seed", "8", "--format", "csv")
    assert other.stdout != first.stdout


def test_environment_seed_overrides_flag():
    base = ("report", "scan", "--H", "1.25", "--p", "0.8",
            "--samples", "3", "--seed", "7", "--format", "csv")
    with_env = run_cli(*base, env_extra={"FINSLEROID_SEED": "99"})
    plain_99 = run_cli("report", "scan", "--H", "1.25", "--p", "0.8",
                       "--samples", "3", "--seed", "99", "--format", "csv")
    assert with_env.stdout == plain_99.stdout
    plain_7 = run_cli(*base)
    assert with_env.stdout != plain_7.stdout


def test_report_curvature_summary_and_rows():
    r = run_cli("report", "curvature", "--H", "1.25", "--p", "0.8",
                "--samples", "3", "--seed", "5")
    assert r.returncode == 0
    assert "max|K+H^2|" in r.stderr
    doc = json.loads(r.stdout)
    assert doc["max_abs_k_plus_h_squared"] < 1e-3
    assert len(doc["rows"]) == 3
    assert "pass" in doc["summary"]


def test_report_domain_grid_with_empty_row():
    r = run_cli("report", "domain", "--Hgrid", "1,1.25", "--pgrid", "0.8,1",
                "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.DictReader(r.stdout.splitlines()))
    assert len(rows) == 4
    by_key = {(row["H"], row["p"]): row for row in rows}
    empty = by_key[("1", "0.80000000000000004")]
    assert empty["status"] == "empty"
    assert empty["eta_min"] == ""
    ok = by_key[("1.25", "0.80000000000000004")]
    assert ok["status"] == "ok"
    assert abs(float(ok["eta_min"]) - 1.0475930126492587) < 1e-12


def test_report_reduction_rows_pass():
    r = run_cli("report", "reduction", "--Hgrid", "1.1,2", "--samples", "40",
                "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.DictReader(r.stdout.splitlines()))
    assert len(rows) == 3  # two grid values plus the flat reduction point
    assert all(row["pass"] == "true" for row in rows)


def test_report_scan_csv_columns():
    r = run_cli("report", "scan", "--H", "1", "--p", "1",
                "--samples", "2", "--format", "csv")
    rows = list(csv.reader(r.stdout.splitlines()))
    assert rows[0] == [
        "y0", "y1", "y2", "y3", "eta", "theta", "phi", "F",
        "det_g_numeric", "det_g_closed",
    ]
    assert len(rows) == 3


def test_float_round_trip_in_csv():
    r = run_cli("report", "domain", "--H", "1.25", "--p", "0.8",
                "--format", "csv")
    row = list(csv.DictReader(r.stdout.splitlines()))[0]
    # 17 significant digits reproduce the double exactly
    from finsleroid import Parameters, domain_info
    dom = domain_info(Parameters(H=1.25, p=0.8))
    assert float(row["r_sup"]) == dom.r_sup
    assert float(row["eta_min"]) == dom.eta_min
