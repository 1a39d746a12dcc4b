"""End-to-end tests for the command line: exit codes and printed reports."""

import json

import pytest

from src.main import EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    """Run main() and return (exit code, stdout, stderr)."""
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    captured = capsys.readouterr()
    return excinfo.value.code, captured.out, captured.err


def test_oracle_json(capsys):
    code, out, _ = run_cli(capsys, "oracle", "derangements", "4")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["outputs"] == {"value": 9}
    assert payload["exact"] is True
    assert "wall_time" not in payload


def test_output_is_reproducible(capsys):
    first = run_cli(capsys, "compute", "homology", "--family", "partition", "4", "--proper")[1]
    second = run_cli(capsys, "compute", "homology", "--family", "partition", "4", "--proper")[1]
    assert first == second
    assert json.loads(first)["outputs"]["dims"] == {"1": {"betti": 6, "torsion": []}}


def test_compute_mobius_table(capsys):
    code, out, _ = run_cli(capsys, "--format", "table", "compute", "mobius", "--family", "boolean", "3")
    assert code == EXIT_OK
    rows = {line.split()[0]: line.split()[1:] for line in out.splitlines()}
    assert rows["outputs.mu"] == ["-1"]
    assert rows["parameters.family"] == ["boolean", "3"]


def test_compute_with_derivation(capsys):
    code, out, _ = run_cli(capsys, "compute", "mobius", "--family", "boolean", "3", "--derive", "proper_part")
    assert code == EXIT_OK
    # the hexagon is a circle
    assert json.loads(out)["outputs"]["mu_hat"] == -1


def test_compute_oracle_kind(capsys):
    code, out, _ = run_cli(capsys, "compute", "oracle", "bouc", "5", "2")
    assert code == EXIT_OK
    assert json.loads(out)["outputs"]["value"] == 6


def test_braid_family_falls_back_to_arrangement(capsys):
    code, out, _ = run_cli(capsys, "compute", "zaslavsky", "--family", "braid", "4")
    assert code == EXIT_OK
    assert json.loads(out)["outputs"] == {"regions": 24, "bounded": 0}


def test_family_writes_file(capsys, tmp_path):
    path = tmp_path / "nc4.json"
    code, out, _ = run_cli(capsys, "family", "noncrossing", "4", "--out", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["outputs"]["size"] == 14
    assert len(json.loads(path.read_text())["labels"]) == 14


@pytest.mark.parametrize("argv", [
    ("family", "no_such_family", "3"),
    ("compute", "homology"),
    ("compute", "zaslavsky", "--family", "boolean", "2"),
    ("oracle", "d-euler", "3", "1"),
    ("oracle", "catalan", "x"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == EXIT_USAGE
    assert out == ""
    assert "Error" in err


def test_infeasible_exit_3(capsys):
    code, _, err = run_cli(capsys, "family", "partition", "12")
    assert code == EXIT_INFEASIBLE
    assert "Infeasible" in err


@pytest.mark.parametrize("argv", [
    ("frobnicate",),
    ("compute", "volume", "--family", "boolean", "2"),
    ("oracle", "fibonacci", "3"),
])
def test_argparse_rejects(capsys, argv):
    code, _, _ = run_cli(capsys, *argv)
    assert code == EXIT_USAGE


def test_config_file(capsys, tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text("limits:\n  max_elements: 0\n")
    code, _, err = run_cli(capsys, "--config", str(config), "oracle", "catalan", "3")
    assert code == EXIT_USAGE
    assert "max_elements" in err


@pytest.mark.slow
def test_check_oracles(capsys):
    code, out, _ = run_cli(capsys, "check", "oracles", "--timing")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["outputs"]["status"] == "passed"
    assert payload["outputs"]["counts"]["fail"] == 0
    assert "wall_time" in payload
