"""The inequality harness: registry runs, report schema, the brute-force
oracle, randomized property suites, and the conjecture explorer."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from banachmoduli import (
    REGISTRY,
    InequalityEntry,
    InequalityReport,
    LpSpace,
    SampleConfig,
    brute_force_modulus,
    delta_curve,
    explore_conjecture,
    modulus_curve,
    parse_space,
    property_suite,
    rho_banas_curve,
    run_checks,
)
from banachmoduli.spaces import SpaceError
from banachmoduli.verify import _entry

GRID = np.linspace(0.1, 0.9, 9)


# ----------------------------------------------------------------------
# registry structure
# ----------------------------------------------------------------------

def test_registry_ids_are_unique_and_described():
    ids = [c.check_id for c in REGISTRY]
    assert len(ids) == len(set(ids))
    for check in REGISTRY:
        assert check.description
        assert check.slack_side in ("Lhs", "Rhs")
        lo, hi = check.param_domain
        assert 0.0 <= lo <= hi <= 1.0
        assert check.lhs_expr and check.rhs_expr


# ----------------------------------------------------------------------
# run_checks behaviour
# ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def hilbert_report(fast_config):
    return run_checks(LpSpace(2.0, 2), GRID, fast_config)


def test_run_checks_passes_on_the_euclidean_plane(hilbert_report):
    assert hilbert_report.ok
    assert hilbert_report.summary["fail"] == 0
    assert hilbert_report.space_id == "l2:2"


def test_every_registered_check_contributes_entries(hilbert_report):
    seen = {e.check_id for e in hilbert_report.entries}
    assert seen == {c.check_id for c in REGISTRY}


def test_degenerate_entries_mark_out_of_domain_parameters(hilbert_report):
    by_id = {}
    for e in hilbert_report.entries:
        by_id.setdefault(e.check_id, []).append(e)
    # the doubling check caps at 1/2, the tripling check at 2/3
    for e in by_id["lem4.2"]:
        expect = "Degenerate" if e.param > 0.5 + 1e-12 else "Pass"
        assert e.status == expect
    for e in by_id["thm5.1-right"]:
        expect = "Degenerate" if e.param > 2.0 / 3.0 + 1e-12 else "Pass"
        assert e.status == expect
    degenerate = [e for e in hilbert_report.entries
                  if e.status == "Degenerate"]
    assert degenerate, "expected out-of-domain grid points"
    for e in degenerate:
        assert e.lhs is None and e.rhs is None and e.margin is None


def test_degenerate_at_the_right_endpoint(fast_config):
    report = run_checks(LpSpace(2.0, 2), np.array([0.6, 0.8, 1.0]),
                        fast_config)
    lip = [e for e in report.entries if e.check_id == "lem3.3-lipschitz"]
    assert [e.status for e in lip] == ["Pass", "Degenerate"]
    mono = [e for e in report.entries if e.check_id == "lem3.3-mono-minus"]
    assert mono[-1].status == "Degenerate"
    assert report.ok


def test_run_checks_rejects_bad_grids(fast_config):
    space = LpSpace(2.0, 2)
    with pytest.raises(ValueError):
        run_checks(space, np.array([0.9, 0.1]), fast_config)
    with pytest.raises(ValueError):
        run_checks(space, np.array([0.5, 1.2]), fast_config)
    with pytest.raises(ValueError):
        run_checks(space, np.array([]), fast_config)


def test_report_json_schema_is_exact(hilbert_report):
    data = json.loads(hilbert_report.to_json())
    assert list(data) == ["space_id", "config_fingerprint", "entries",
                          "summary"]
    assert list(data["summary"]) == ["pass", "fail", "degenerate"]
    for entry in data["entries"]:
        assert list(entry) == ["check_id", "param", "lhs", "rhs", "margin",
                               "tolerance", "status"]
        assert entry["status"] in ("Pass", "Fail", "Degenerate")
        if entry["status"] == "Degenerate":
            assert entry["lhs"] is None
        else:
            assert entry["margin"] == pytest.approx(
                entry["rhs"] - entry["lhs"], abs=1e-15)
    counts = data["summary"]
    assert counts["pass"] + counts["fail"] + counts["degenerate"] == \
        len(data["entries"])


def test_report_is_byte_deterministic(fast_config):
    a = run_checks(LpSpace(2.0, 2), GRID[:4], fast_config)
    b = run_checks(LpSpace(2.0, 2), GRID[:4], fast_config)
    assert a.to_json() == b.to_json()


def test_fail_entries_flip_ok_and_exit_semantics():
    failing = _entry("thm4.1-left", 0.5, lhs=1.0, rhs=0.0, tol=1e-3)
    assert failing.status == "Fail"
    report = InequalityReport("l2:2", "0" * 16, (failing,))
    assert not report.ok
    assert report.summary == {"pass": 0, "fail": 1, "degenerate": 0}


def test_witnesses_appear_only_on_request():
    plain = _entry("thm4.1-left", 0.5, 0.1, 0.2, 1e-3)
    assert "witness" not in plain.as_dict()
    with_witness = _entry("chord-intersection", 3, 0.5, 0.1, 1e-9,
                          witness={"a": [1.0, 0.0]})
    d = with_witness.as_dict()
    assert d["status"] == "Fail"
    assert d["witness"] == {"a": [1.0, 0.0]}


# ----------------------------------------------------------------------
# the brute-force oracle
# ----------------------------------------------------------------------

def test_oracle_matches_engine_on_the_euclidean_plane(fast_config):
    space = LpSpace(2.0, 2)
    for kind, param in (("delta", 1.0), ("rho", 0.5), ("rho-banas", 0.8),
                        ("lambda-minus", 0.5), ("lambda-plus", 0.5)):
        engine = float(modulus_curve(space, kind, [param],
                                     fast_config).values[0])
        oracle = brute_force_modulus(space, kind, param, 2048, fast_config)
        assert engine == pytest.approx(oracle, abs=1e-3), kind


def test_oracle_matches_closed_forms_directly():
    # independent of the curve engine entirely
    assert brute_force_modulus(LpSpace(2.0, 2), "delta", 1.0, 2048) == \
        pytest.approx(1.0 - math.sqrt(3.0) / 2.0, abs=1e-3)
    assert brute_force_modulus(LpSpace(math.inf, 2), "rho-banas", 0.6,
                               4096) == pytest.approx(0.3, abs=2e-3)
    assert brute_force_modulus(LpSpace(math.inf, 2), "lambda-plus", 0.4,
                               1024) == pytest.approx(0.4, abs=1e-3)


def test_oracle_validates_inputs():
    with pytest.raises(SpaceError):
        brute_force_modulus(LpSpace(2.0, 3), "delta", 1.0)
    with pytest.raises(ValueError):
        brute_force_modulus(LpSpace(2.0, 2), "delta", 1.0, resolution=100)
    with pytest.raises(ValueError):
        brute_force_modulus(LpSpace(2.0, 2), "noise", 1.0)


# ----------------------------------------------------------------------
# randomized property suites
# ----------------------------------------------------------------------

@pytest.mark.parametrize("sid", ["l2:2", "l1:2", "lp:3:2"])
def test_property_suite_is_clean(sid, fast_config):
    report = property_suite(parse_space(sid), 150, seed=0,
                            config=fast_config)
    assert report.ok
    assert report.summary == {"pass": 3, "fail": 0, "degenerate": 0}
    assert {e.check_id for e in report.entries} == {
        "chord-intersection", "support-smoothness", "normalized-difference"}


def test_property_suite_on_random_polygon(polygon_factory, fast_config):
    report = property_suite(polygon_factory(3), 150, seed=1,
                            config=fast_config)
    assert report.ok


def test_property_suite_is_deterministic(fast_config):
    space = parse_space("l1:2")
    a = property_suite(space, 60, seed=9, config=fast_config)
    b = property_suite(space, 60, seed=9, config=fast_config)
    assert a.to_json() == b.to_json()
    c = property_suite(space, 60, seed=10, config=fast_config)
    assert a.to_json() != c.to_json()


def test_property_suite_samples_sections_in_higher_dimension(fast_config):
    report = property_suite(parse_space("l2:3"), 40, seed=2,
                            config=fast_config)
    assert report.ok


def test_property_suite_rejects_empty_runs(fast_config):
    with pytest.raises(ValueError):
        property_suite(LpSpace(2.0, 2), 0, seed=0, config=fast_config)


# ----------------------------------------------------------------------
# conjecture explorer
# ----------------------------------------------------------------------

def test_explorer_reports_gaps_without_asserting(fast_config):
    table = explore_conjecture([2.0, 3.0], fast_config)
    assert [row["p"] for row in table["rows"]] == [2.0, 3.0]
    for row in table["rows"]:
        assert list(row) == ["p", "xi", "upper_bound", "gap"]
        assert row["gap"] == pytest.approx(row["upper_bound"] - row["xi"],
                                           abs=1e-15)
    assert abs(table["rows"][0]["gap"]) <= 5e-3  # attained in the inner-
    assert table["rows"][1]["gap"] > 1e-3        # product case only


def test_explorer_handles_empty_and_bad_input(fast_config):
    assert explore_conjecture([], fast_config)["rows"] == []
    with pytest.raises(ValueError):
        explore_conjecture([1.0], fast_config)


def test_explorer_is_deterministic(fast_config):
    a = explore_conjecture([1.5], fast_config)
    b = explore_conjecture([1.5], fast_config)
    assert json.dumps(a) == json.dumps(b)
