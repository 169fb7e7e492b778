"""End-to-end acceptance gate.

Twelve criteria, each a single test producing one pass/fail line under
``pytest -v``.  Everything runs at the default sampling configuration on
2D/3D spaces; tolerances and runtime budgets are stated inline.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from banachmoduli import (
    LpSpace,
    SampleConfig,
    brute_force_modulus,
    delta_curve,
    explore_conjecture,
    lambda_curves,
    modulus_curve,
    property_suite,
    run_checks,
    xi,
)
from banachmoduli.moduli import CURVE_KINDS
from banachmoduli.spaces import parse_space

from conftest import make_seeded_polygon

SPACE_IDS = ("l2:2", "lp:1.5:2", "lp:3:2", "linf:2", "l1:2")
GRID = np.linspace(0.05, 0.95, 19)
CONFIG = SampleConfig()


@pytest.fixture(scope="module")
def reports():
    """One full registry run per test space at defaults (shared)."""
    return {sid: run_checks(parse_space(sid), GRID, CONFIG)
            for sid in SPACE_IDS}


def _entries(reports, sid, check_id):
    return [e for e in reports[sid].entries if e.check_id == check_id]


def _assert_no_fails(reports, check_ids, spaces=SPACE_IDS):
    for sid in spaces:
        for cid in check_ids:
            entries = _entries(reports, sid, cid)
            assert entries, f"{cid} produced no entries on {sid}"
            bad = [e for e in entries if e.status == "Fail"]
            assert not bad, (
                f"{cid} on {sid}: {[(e.param, e.margin) for e in bad]}")


def test_criterion_01_hilbert_closed_forms_within_budget():
    space = LpSpace(2.0, 2)
    t0 = time.time()
    minus, plus = lambda_curves(space, GRID, CONFIG)
    lambda_secs = time.time() - t0
    t0 = time.time()
    delta = delta_curve(space, GRID, CONFIG)
    delta_secs = time.time() - t0

    lam_exact = 1.0 - np.sqrt(1.0 - GRID ** 2)
    del_exact = 1.0 - np.sqrt(1.0 - (GRID / 2.0) ** 2)
    assert np.abs(minus.values - lam_exact).max() <= 2e-3
    assert np.abs(plus.values - lam_exact).max() <= 2e-3
    assert np.abs(delta.values - del_exact).max() <= 2e-3
    assert lambda_secs <= 30.0 and delta_secs <= 30.0


def test_criterion_02_convexity_chain_with_tight_right_side(reports):
    _assert_no_fails(reports, ("thm4.1-left", "thm4.1-right"))
    right = _entries(reports, "l2:2", "thm4.1-right")
    assert max(abs(e.margin) for e in right) <= 2e-3


def test_criterion_03_smoothness_sandwich(reports):
    _assert_no_fails(reports, ("lem4.2", "lem4.3"))


def test_criterion_04_ball_packing_chain_tight_on_sup_plane(reports):
    _assert_no_fails(reports, ("thm5.1-left", "thm5.1-right"))
    left = _entries(reports, "linf:2", "thm5.1-left")
    assert max(abs(e.margin) for e in left) <= 1e-3


def test_criterion_05_inner_product_extremality(reports):
    _assert_no_fails(reports, ("cor5.3-left", "cor5.3-right"))
    for cid in ("cor5.3-left", "cor5.3-right"):
        for e in _entries(reports, "l2:2", cid):
            assert abs(e.margin) <= 2e-3, (cid, e.param, e.margin)


def test_criterion_06_projection_constant_chain(reports):
    est = xi(LpSpace(2.0, 2), CONFIG)
    assert est.value == pytest.approx(1.0, abs=1e-6)
    left, = _entries(reports, "l2:2", "thm6.1-left")
    right, = _entries(reports, "l2:2", "thm6.1-right")
    assert abs(left.lhs - est.value) <= 5e-3   # lower bound near xi
    assert abs(right.rhs - est.value) <= 5e-3  # upper bound near xi

    for sid in ("linf:2", "l1:2"):
        est = xi(parse_space(sid), CONFIG)
        assert est.value == pytest.approx(2.0, abs=1e-6)
        left, = _entries(reports, sid, "thm6.1-left")
        right, = _entries(reports, sid, "thm6.1-right")
        assert left.status == "Pass" and right.status == "Pass"
        assert right.rhs <= 2.0 + 1e-6  # the bound never exceeds 2


def test_criterion_07_inverse_convexity_bounds(reports):
    _assert_no_fails(reports, ("lem6.3-left", "lem6.3-right"))


def test_criterion_08_supporting_modulus_structure(reports):
    _assert_no_fails(reports, (
        "lem3.3-order", "lem3.3-cap", "lem3.3-mono-minus",
        "lem3.3-mono-plus", "lem3.3-convex-plus", "lem3.3-plus-at-one",
        "lem3.3-scale", "lem3.3-lipschitz"))
    for sid in SPACE_IDS:
        at_one, = _entries(reports, sid, "lem3.3-plus-at-one")
        assert at_one.lhs <= 2e-3  # |lambda_plus(1) - 1|
        for e in _entries(reports, sid, "lem3.3-convex-plus"):
            assert e.margin >= -1e-6  # discrete convexity


def test_criterion_09_sup_plane_degeneracies():
    space = LpSpace(math.inf, 2)
    minus, _ = lambda_curves(space, GRID, CONFIG)
    assert np.all(minus.values <= 1e-9)
    eps = np.linspace(0.05, 1.95, 39)
    delta = delta_curve(space, eps, CONFIG)
    assert np.all(delta.values <= 1e-9)


def test_criterion_10_property_suites_within_budget():
    t0 = time.time()
    spaces = (parse_space("l2:2"), parse_space("l1:2"),
              make_seeded_polygon(11))
    for space in spaces:
        report = property_suite(space, 1000, seed=0, config=CONFIG)
        assert report.summary["fail"] == 0, report.space_id
    assert time.time() - t0 <= 60.0


def test_criterion_11_oracle_equivalence_on_random_polygon():
    poly = make_seeded_polygon(11)
    prng = np.random.default_rng(4242)
    domains = {"delta": (0.1, 1.9), "rho": (0.05, 0.95),
               "rho-banas": (0.1, 1.9), "lambda-minus": (0.05, 0.95),
               "lambda-plus": (0.05, 0.95)}
    for kind in CURVE_KINDS:
        lo, hi = domains[kind]
        params = np.sort(lo + (hi - lo) * prng.random(5))
        curve = modulus_curve(poly, kind, params, CONFIG)
        for param, value in zip(params, curve.values):
            oracle = brute_force_modulus(poly, kind, float(param), 8192)
            assert abs(value - oracle) <= 1e-3, (kind, param, value, oracle)


def test_criterion_12_conjecture_explorer_budget_and_gap():
    t0 = time.time()
    table = explore_conjecture([1.5, 2.0, 3.0, 4.0], CONFIG)
    assert time.time() - t0 <= 60.0
    rows = table["rows"]
    assert len(rows) == 4
    by_p = {row["p"]: row for row in rows}
    assert abs(by_p[2.0]["gap"]) <= 5e-3
    # informational for every other exponent: gaps recorded, nothing asserted
    for row in rows:
        assert set(row) == {"p", "xi", "upper_bound", "gap"}
        assert "status" not in row
