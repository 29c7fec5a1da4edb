"""Tests for the command line interface: exit codes, output formats, determinism."""

import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from ucrga.cli import EXIT_INPUT, EXIT_OK, EXIT_PROPERTY, EXIT_SINGULAR, main
from ucrga.matrix import matrix_from_json, parse_csv
from ucrga.rga import rga_mp, rga_strict, rga_uc

from golden import EXACT_RGA_PLANT, MP_RGA_SCALED_ONES3, ONES3

FIXTURES = Path(__file__).resolve().parents[1] / "demos" / "matrices"

PLANT_CSV = str(FIXTURES / "plant3x3.csv")
PLANT_JSON = str(FIXTURES / "plant3x3.json")
STACKED_CSV = str(FIXTURES / "plant3x6.csv")
ONES_CSV = str(FIXTURES / "ones3x3.csv")
SCALED_ONES_CSV = str(FIXTURES / "ones3x3_scaled.csv")


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_compute_strict_json_matches_exact_values(capsys):
    code, report = run_json(
        capsys, ["compute", "--input", PLANT_CSV, "--method", "strict", "--output", "json"]
    )
    assert code == EXIT_OK
    assert report["method"] == "strict"
    assert report["shape"] == [3, 3]
    assert report["rank"] == 3
    assert report["balancer_converged"] is True
    rga = matrix_from_json(report["rga"])
    assert np.abs(rga - EXACT_RGA_PLANT).max() <= 1e-9
    assert abs(report["element_sum"] - 3.0) <= 1e-9
    assert len(report["row_sums"]) == 3 and len(report["col_sums"]) == 3
    assert all(not c["informational"] for c in report["checks"])


def test_compute_json_round_trips_losslessly(capsys):
    code, report = run_json(capsys, ["compute", "--input", PLANT_CSV, "--output", "json"])
    assert code == EXIT_OK
    in_memory = rga_uc(parse_csv(Path(PLANT_CSV).read_text()))
    assert np.array_equal(matrix_from_json(report["rga"]), in_memory.rga)


def test_compute_csv_round_trips_exactly(capsys):
    code = main(["compute", "--input", STACKED_CSV, "--output", "csv"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    in_memory = rga_uc(parse_csv(Path(STACKED_CSV).read_text()))
    assert np.array_equal(parse_csv(out), in_memory.rga)


def test_compute_table_respects_digits(capsys):
    code = main(
        ["compute", "--input", PLANT_CSV, "--method", "strict", "--digits", "2"]
    )
    assert code == EXIT_OK
    out = capsys.readouterr().out
    for fragment in ("-2.47", "-2.41", "5.88", "3.29", "0.94", "-3.24"):
        assert fragment in out
    assert "method: strict" in out
    assert "rank: 3" in out


def test_compute_uc_on_stacked_plant(capsys):
    code, report = run_json(
        capsys, ["compute", "--input", STACKED_CSV, "--method", "uc", "--output", "json"]
    )
    assert code == EXIT_OK
    rga = matrix_from_json(report["rga"])
    assert np.abs(rga[:, :3] - rga[:, 3:]).max() <= 1e-9
    assert np.abs(rga - 0.5 * np.hstack([EXACT_RGA_PLANT, EXACT_RGA_PLANT])).max() <= 1e-7
    assert report["rank"] == 3


def test_compute_infers_json_format(capsys):
    code, report = run_json(
        capsys, ["compute", "--input", PLANT_JSON, "--method", "strict", "--output", "json"]
    )
    assert code == EXIT_OK
    assert np.abs(matrix_from_json(report["rga"]) - EXACT_RGA_PLANT).max() <= 1e-9


def test_compute_format_flag_overrides_extension(tmp_path, capsys):
    path = tmp_path / "matrix.txt"
    path.write_text('{"rows": 1, "cols": 2, "data": [1.0, 2.0]}')
    code, report = run_json(
        capsys,
        ["compute", "--input", str(path), "--format", "json", "--output", "json"],
    )
    assert code == EXIT_OK
    assert report["shape"] == [1, 2]


def test_compute_all_skips_strict_on_singular(capsys):
    code = main(["compute", "--input", ONES_CSV, "--method", "all", "--output", "json"])
    captured = capsys.readouterr()
    assert code == EXIT_OK
    reports = json.loads(captured.out)
    assert [r["method"] for r in reports] == ["mp", "uc"]
    assert "strict RGA skipped" in captured.err


def test_compute_all_includes_strict_when_nonsingular(capsys):
    code, reports = run_json(
        capsys, ["compute", "--input", PLANT_CSV, "--method", "all", "--output", "json"]
    )
    assert code == EXIT_OK
    assert [r["method"] for r in reports] == ["strict", "mp", "uc"]


def test_missing_file_exits_1(capsys):
    assert main(["compute", "--input", "no/such/file.csv"]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_ragged_csv_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("1,2\n3\n")
    assert main(["compute", "--input", str(path)]) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err


def test_strict_on_singular_exits_2(capsys):
    code = main(["compute", "--input", ONES_CSV, "--method", "strict"])
    assert code == EXIT_SINGULAR
    err = capsys.readouterr().err
    assert "singular" in err
    assert "--method uc" in err


def test_compare_scaled_ones(capsys):
    code, report = run_json(
        capsys, ["compare", "--input", SCALED_ONES_CSV, "--output", "json"]
    )
    assert code == EXIT_OK
    mp_rga = matrix_from_json(report["mp"]["rga"])
    uc_rga = matrix_from_json(report["uc"]["rga"])
    assert np.abs(mp_rga - MP_RGA_SCALED_ONES3).max() <= 1e-9
    assert np.abs(uc_rga - ONES3 / 9.0).max() <= 1e-9
    assert abs(report["max_abs_difference"] - 1.0 / 3.0) <= 1e-9
    assert report["scaling_invariance_residual"]["uc"] <= 1e-7
    assert report["scaling_invariance_residual"]["mp"] > 1e-2
    assert report["seed"] == 42


def test_compare_nonsingular_routes_agree(capsys):
    code, report = run_json(capsys, ["compare", "--input", PLANT_CSV, "--output", "json"])
    assert code == EXIT_OK
    assert report["max_abs_difference"] <= 1e-8
    assert report["scaling_invariance_residual"]["mp"] <= 1e-7


def test_compare_csv_emits_both_blocks(capsys):
    code = main(["compare", "--input", SCALED_ONES_CSV, "--output", "csv"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "# method=mp" in out and "# method=uc" in out


def test_check_uc_on_plant_passes(capsys):
    code, report = run_json(
        capsys, ["check", "--input", PLANT_CSV, "--output", "json"]
    )
    assert code == EXIT_OK
    names = {c["name"] for c in report["checks"]}
    assert names == {
        "row_sum_deviation",
        "col_sum_deviation",
        "element_sum_vs_rank",
        "permutation_equivariance",
        "scaling_invariance",
        "inverse_identity_aga",
        "inverse_identity_gag",
    }
    assert all(c["passed"] for c in report["checks"])


def test_check_mp_on_ones_fails_scaling_invariance(capsys):
    code, report = run_json(
        capsys, ["check", "--input", ONES_CSV, "--method", "mp", "--output", "json"]
    )
    assert code == EXIT_PROPERTY
    by_name = {c["name"]: c for c in report["checks"]}
    assert not by_name["scaling_invariance"]["passed"]
    assert not by_name["scaling_invariance"]["informational"]
    assert by_name["element_sum_vs_rank"]["passed"]


def test_check_zero_matrix_passes_trivially(tmp_path, capsys):
    path = tmp_path / "zero.csv"
    path.write_text("0,0\n0,0\n")
    code, report = run_json(capsys, ["check", "--input", str(path), "--output", "json"])
    assert code == EXIT_OK
    assert report["rank"] == 0
    assert report["element_sum"] == 0.0


def test_check_strict_on_singular_exits_2(capsys):
    code = main(["check", "--input", ONES_CSV, "--method", "strict"])
    assert code == EXIT_SINGULAR


def test_check_csv_output_lists_checks(capsys):
    code = main(["check", "--input", PLANT_CSV, "--output", "csv"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "name,value,threshold,passed,informational"
    assert any(line.startswith("uc:scaling_invariance,") for line in out.splitlines())


def test_machine_output_is_deterministic(capsys):
    argv = ["check", "--input", STACKED_CSV, "--output", "json", "--seed", "7"]
    code1 = main(argv)
    out1 = capsys.readouterr().out
    code2 = main(argv)
    out2 = capsys.readouterr().out
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_seed_changes_randomized_checks_only(capsys):
    _, report1 = run_json(
        capsys, ["check", "--input", STACKED_CSV, "--output", "json", "--seed", "1"]
    )
    _, report2 = run_json(
        capsys, ["check", "--input", STACKED_CSV, "--output", "json", "--seed", "2"]
    )
    assert report1["rga"] == report2["rga"]
    v1 = [c["value"] for c in report1["checks"] if c["name"] == "scaling_invariance"]
    v2 = [c["value"] for c in report2["checks"] if c["name"] == "scaling_invariance"]
    assert v1 != v2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ucrga", "compute", "--input", PLANT_CSV, "--output", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    report = json.loads(proc.stdout)
    assert report["method"] == "uc"
