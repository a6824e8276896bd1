"""Tests for the command-line interface."""
import json
from pathlib import Path

import pytest

from fracspec.main import build_parser, main

SAMPLE = Path(__file__).resolve().parents[1] / "problems" / "diffusion_1d.json"


def test_subcommand_is_required():
    """argparse exits with usage when no subcommand is given."""
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args([])
    assert excinfo.value.code == 2


def test_unknown_example_exit_code(capsys):
    """Domain errors exit with 2 and print the valid ids."""
    assert main(["run", "9"]) == 2
    assert "valid ids" in capsys.readouterr().err


def test_invalid_override_exit_code(tmp_path):
    """Example 1 has no spatial discretization."""
    assert main(["run", "1", "--N", "10", "--out", str(tmp_path)]) == 2


def test_run_writes_tables(tmp_path, capsys):
    """One CSV per table, paths printed."""
    code = main(["run", "2", "--K", "3", "--T", "0.2", "--test-points", "5", "--out", str(tmp_path)])
    assert code == 0
    path = tmp_path / "example2.csv"
    assert str(path) in capsys.readouterr().out
    assert path.read_bytes().startswith(b"T,Merr(K=3),Merr(CN FDM h=0.1 tau=0.01)\r\n")


def test_oracle_command(tmp_path):
    """The oracle table lands next to the example tables."""
    assert main(["oracle", "2", "--K", "3", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "oracle_example2.csv").exists()


def test_sweep_subset(tmp_path):
    """--only restricts the sweep and a summary is written."""
    assert main(["all", "--only", "2", "--out", str(tmp_path)]) == 0
    assert (tmp_path / "example2.csv").exists()
    assert (tmp_path / "summary.csv").exists()


def test_solve_missing_file_exit_code(tmp_path):
    """Unreadable problem files exit with 4."""
    assert main(["solve", str(tmp_path / "missing.json"), "--out", str(tmp_path)]) == 4


def test_solve_problem_file(tmp_path, capsys):
    """Samples CSV plus error lines for a file with an exact solution."""
    data = json.loads(SAMPLE.read_text())
    data["options"] = {"N": 20, "K": 4}
    problem = tmp_path / "small.json"
    problem.write_text(json.dumps(data))
    assert main(["solve", str(problem), "--samples", "5", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "Merr = " in out and "Rerr = " in out
    lines = (tmp_path / "diffusion_1d_solution.csv").read_text().splitlines()
    assert lines[0] == "x1,re_u,im_u"
    assert len(lines) == 6
