"""Tests for src.pipeline: the check runner, report shape and CLI command routing."""

import json

import pytest

from src.config import Settings
from src.exceptions import HypothesisError, PosetTopError, UnknownFamilyError, UsageError
from src.families import matching_complex
from src.homology import laplacian_spectrum
from src.identities import compare
from src.pipeline import (
    ERROR, FAIL, HYPOTHESIS_FAILED, PASS, SKIPPED, SUITE_NAMES, CheckCase, CheckRunner, RunReport,
    build_suite, compute_report, family_report, load_target, oracle_report, render_table,
)
from src.pipeline.suites import outside_contents
from src.shelling import FOUND

SETTINGS = Settings()


def _raise(error):
    def run():
        raise error
    return run


def _boom():
    return 1 // 0


@pytest.fixture
def runner():
    return CheckRunner(suite="oracles", max_size=3, verbose=False, settings=SETTINGS)


@pytest.fixture
def mixed_cases():
    return [
        CheckCase("demo", "holds", "posettop oracle catalan 3", lambda: compare("holds", 5, 5)),
        CheckCase("demo", "differs", "posettop oracle catalan 3", lambda: compare("differs", 5, 6)),
        CheckCase("demo", "not_applicable", "-", _raise(HypothesisError("whitney", "not Cohen-Macaulay"))),
        CheckCase("demo", "library_error", "-", _raise(PosetTopError("bad input"))),
        CheckCase("demo", "crash", "-", _boom),
        CheckCase("demo", "too_big", "-", lambda: compare("too_big", 1, 1), size=9),
    ]


# ---------- runner ----------

def test_run_case_classifies_outcomes(runner, mixed_cases):
    statuses = [runner.run_case(case).status for case in mixed_cases]
    assert statuses == [PASS, FAIL, HYPOTHESIS_FAILED, ERROR, ERROR, SKIPPED]


def test_crash_detail_names_the_exception(runner, mixed_cases):
    outcome = runner.run_case(mixed_cases[4])
    assert outcome.detail.startswith("unexpected ZeroDivisionError")


def test_run_counts_and_status(runner, mixed_cases):
    runner.cases = mixed_cases
    results = runner.run()
    assert results["counts"] == {PASS: 1, FAIL: 1, HYPOTHESIS_FAILED: 1, ERROR: 2, SKIPPED: 1}
    assert results["status"] == "failed"


def test_hypothesis_failures_do_not_fail_the_run(runner, mixed_cases):
    runner.cases = [mixed_cases[0], mixed_cases[2], mixed_cases[5]]
    assert runner.run()["status"] == "passed"


def test_parallel_run_keeps_case_order(mixed_cases):
    threaded = CheckRunner(suite="oracles", max_size=3, jobs=3, verbose=False, settings=SETTINGS)
    threaded.cases = mixed_cases
    names = [outcome.name for outcome in threaded.run()["outcomes"]]
    assert names == [case.name for case in mixed_cases]


def test_report_is_deterministic(runner, mixed_cases):
    runner.cases = mixed_cases
    report = runner.report(runner.run())
    first = report.to_dict()
    assert "wall_time" not in first
    assert first == runner.report(runner.run()).to_dict()
    cases = first["outputs"]["cases"]
    # skipped cases are counted but not listed
    assert [case["name"] for case in cases] == ["holds", "differs", "not_applicable", "library_error", "crash"]
    assert "lhs" not in cases[0]
    assert cases[1]["lhs"] == 5 and cases[1]["rhs"] == 6
    timed = report.to_dict(timing=True)
    assert "wall_time" in timed and "seconds" in timed["outputs"]["cases"][0]


@pytest.mark.slow
def test_oracles_suite_passes():
    runner = CheckRunner(suite="oracles", verbose=False, settings=SETTINGS)
    results = runner.run()
    assert results["status"] == "passed", [o.detail for o in results["outcomes"] if o.status != PASS]


def test_build_suite():
    assert set(SUITE_NAMES) == {"all", "families", "shelling", "identities", "arrangements", "oracles"}
    cases = build_suite("all", 6, SETTINGS)
    keys = [(case.suite, case.name) for case in cases]
    assert len(keys) == len(set(keys))
    assert {case.suite for case in cases} == set(SUITE_NAMES) - {"all"}
    with pytest.raises(PosetTopError):
        build_suite("everything", 6, SETTINGS)


def test_matching_eigenvalues_outside_the_contents():
    assert outside_contents([0, 3, 5, 9, 15], 6) == []
    assert outside_contents([15, -3, 3, 4], 6) == [-3, 4]
    # -2 is the content of (2,1,1), which has alpha_1 < beta_1
    assert outside_contents([6, 2, 0, -2], 4) == [-2]
    delta = matching_complex(4)
    assert outside_contents((value for i in (0, 1) for value in laplacian_spectrum(delta, i)), 4) == []


# ---------- reports ----------

def test_run_report_keys_are_strings():
    report = RunReport("posettop oracle k-equal-betti 6 3", {"n": 6}, {"value": {1: 10, 2: 10}}, wall_time=0.5)
    assert report.to_dict() == {
        "command": "posettop oracle k-equal-betti 6 3",
        "parameters": {"n": 6},
        "outputs": {"value": {"1": 10, "2": 10}},
        "exact": True,
    }


def test_render_table():
    report = RunReport("posettop compute mobius", {"family": "boolean 3"},
                       {"mu": -1, "rank": {"0": 1}, "chains": [], "cases": [{"name": "a"}, {"name": "b"}]})
    lines = render_table(report.to_dict()).splitlines()
    assert lines[0].split() == ["command", "posettop", "compute", "mobius"]
    rows = {line.split()[0]: line.split()[1:] for line in lines[1:]}
    assert rows["parameters.family"] == ["boolean", "3"]
    assert rows["outputs.mu"] == ["-1"]
    assert rows["outputs.rank.0"] == ["1"]
    assert rows["outputs.chains"] == ["[]"]
    assert rows["outputs.cases[1].name"] == ["b"]
    # keys are padded to one column
    assert len({line.index(line.split()[1], len(line.split()[0])) for line in lines}) == 1


# ---------- targets ----------

def test_load_target_from_family():
    target = load_target(["partition", "4"])
    assert target.kind == "poset"
    assert target.family == "partition"
    assert target.source == {"family": "partition 4"}


def test_load_target_needs_exactly_one_source():
    with pytest.raises(UsageError):
        load_target()
    with pytest.raises(UsageError):
        load_target(["boolean", "2"], arrangement=["braid", "3"])


def test_arrangement_kind_given_as_family():
    target = load_target(["braid", "4"])
    assert target.kind == "arrangement"
    assert target.source == {"arrangement": "braid 4", "complex": False}


def test_unknown_family():
    with pytest.raises(UnknownFamilyError):
        load_target(["hexagonal", "3"])


def test_derivations():
    target = load_target(["boolean", "3"], derivations=["proper_part"])
    assert len(target.subject) == 6
    assert target.source["derive"] == ["proper_part"]
    assert len(load_target(["boolean", "3"], derivations=["open_interval:0:7"]).subject) == 6
    with pytest.raises(UsageError):
        load_target(["boolean", "2"], derivations=["flip"])
    with pytest.raises(UsageError):
        load_target(["matching", "4"], derivations=["dual"])


def test_input_files(tmp_path):
    path = tmp_path / "circle.json"
    path.write_text(json.dumps({"vertex_count": 3, "facets": [[0, 1], [1, 2], [0, 2]]}))
    assert load_target(input_path=str(path)).kind == "complex"
    with pytest.raises(UsageError):
        load_target(input_path=str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(UsageError):
        load_target(input_path=str(bad))
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"vertices": 3}))
    with pytest.raises(UsageError):
        load_target(input_path=str(other))


# ---------- compute ----------

def _outputs(kind, target=None, **options):
    return compute_report(kind, target, options, settings=SETTINGS).to_dict()["outputs"]


def test_compute_mobius():
    out = _outputs("mobius", load_target(["boolean", "3"]))
    # B_3 has a bottom, so its bounded extension is a cone
    assert out == {"size": 8, "mu_hat": 0, "mu": -1}


def test_compute_homology_of_partition_lattice():
    out = _outputs("homology", load_target(["partition", "4"]), proper=True)
    assert out["dims"] == {"1": {"betti": 6, "torsion": []}}
    assert out["reduced"] is True
    assert out["euler_characteristic"] == -6


def test_compute_unreduced_homology(tmp_path):
    path = tmp_path / "circle.json"
    path.write_text(json.dumps({"vertex_count": 3, "facets": [[0, 1], [1, 2], [0, 2]]}))
    out = _outputs("homology", load_target(input_path=str(path)), unreduced=True)
    assert out["dims"] == {"0": {"betti": 1, "torsion": []}, "1": {"betti": 1, "torsion": []}}
    assert out["reduced"] is False


def test_compute_betti_from_default_labeling():
    out = _outputs("betti-el", load_target(["partition", "4"]))
    assert out == {"labeling": "lambda1", "betti": {"1": 6}}


def test_compute_arrangement_invariants():
    assert _outputs("zaslavsky", load_target(arrangement=["braid", "4"])) == {"regions": 24, "bounded": 0}
    assert _outputs("gm", load_target(arrangement=["braid", "3"])) == {"cohomology": {"0": 5}, "reduced": True}


def test_compute_shelling_of_hexagon():
    out = _outputs("shelling", load_target(["chessboard", "2", "3"]))
    assert out["search"] == "shelling"
    assert out["status"] == FOUND
    assert len(out["order"]) == 6


def test_compute_routing_errors():
    with pytest.raises(UsageError):
        compute_report("os", load_target(["boolean", "2"]), settings=SETTINGS)
    with pytest.raises(UsageError):
        compute_report("homology", None, settings=SETTINGS)
    with pytest.raises(UsageError):
        compute_report("volume", load_target(["boolean", "2"]), settings=SETTINGS)
    with pytest.raises(UsageError):
        compute_report("oracle", settings=SETTINGS)


def test_compute_oracle_delegates():
    report = compute_report("oracle", oracle=["catalan", "4"], settings=SETTINGS)
    assert report.to_dict()["outputs"] == {"value": 14}


# ---------- oracle and family ----------

@pytest.mark.parametrize("name,params,value", [
    ("derangements", ["4"], 9),
    ("bouc", ["5", "2"], 6),
    ("k-equal-betti", ["6", "3"], {"1": 10, "2": 10}),
    ("betti-gf", ["k_mod_d", "1", "4", "2"], {"0": 14}),
    ("content", ["3", "1"], 2),
])
def test_oracle_report(name, params, value):
    payload = oracle_report(name, params).to_dict()
    assert payload["outputs"] == {"value": value}
    assert payload["command"] == f"python -m src.main oracle {name} {' '.join(params)}"


def test_oracle_report_errors():
    with pytest.raises(UsageError):
        oracle_report("fibonacci", ["3"])
    with pytest.raises(UsageError):
        oracle_report("bouc", ["5"])
    with pytest.raises(UsageError):
        oracle_report("betti-gf", ["k_mod_d", "3", "2"])


def test_family_report(tmp_path):
    payload = family_report("noncrossing", ["3"]).to_dict()
    assert payload["outputs"]["kind"] == "poset"
    assert payload["outputs"]["size"] == 5
    assert len(payload["outputs"]["data"]["labels"]) == 5

    out = tmp_path / "m4.json"
    payload = family_report("matching", ["4"], str(out)).to_dict()
    assert payload["outputs"] == {"kind": "complex", "size": 6, "path": str(out)}
    assert len(json.loads(out.read_text())["facets"]) == 3
