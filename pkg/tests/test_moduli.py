"""Curve engines: closed-form matches, frozen example values, structural
invariants, and serialization round-trips."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from banachmoduli import (
    CURVE_KINDS,
    LpSpace,
    ModulusCurve,
    SampleConfig,
    delta_curve,
    delta_inverse,
    hilbert_reference,
    lambda_curve,
    lambda_curves,
    lambda_local,
    lambda_root,
    modulus_curve,
    parse_space,
    rho_banas_curve,
    rho_curve,
    xi,
)
from banachmoduli.spaces import SpaceError

L2 = LpSpace(2.0, 2)
L1 = LpSpace(1.0, 2)
LINF = LpSpace(math.inf, 2)
GRID = np.linspace(0.05, 0.95, 19)


# ----------------------------------------------------------------------
# closed forms on the euclidean plane
# ----------------------------------------------------------------------

def test_euclidean_lambda_curves_match_closed_form(fast_config):
    minus, plus = lambda_curves(L2, GRID, fast_config)
    expected = 1.0 - np.sqrt(1.0 - GRID ** 2)
    np.testing.assert_allclose(minus.values, expected, atol=2e-3)
    np.testing.assert_allclose(plus.values, expected, atol=2e-3)


def test_euclidean_delta_matches_closed_form(fast_config):
    eps = np.linspace(0.1, 1.9, 19)
    curve = delta_curve(L2, eps, fast_config)
    expected = 1.0 - np.sqrt(1.0 - (eps / 2.0) ** 2)
    np.testing.assert_allclose(curve.values, expected, atol=2e-3)


def test_euclidean_rho_matches_closed_form(fast_config):
    taus = np.linspace(0.1, 1.0, 10)
    curve = rho_curve(L2, taus, fast_config)
    expected = np.sqrt(1.0 + taus ** 2) - 1.0
    np.testing.assert_allclose(curve.values, expected, atol=2e-3)


def test_frozen_reference_points(fast_config):
    assert delta_curve(L2, [1.0], fast_config).values[0] == \
        pytest.approx(0.1339746, abs=2e-4)
    assert rho_curve(L2, [0.5], fast_config).values[0] == \
        pytest.approx(0.1180340, abs=2e-4)
    minus, plus = lambda_curves(L2, [0.5], fast_config)
    assert minus.values[0] == pytest.approx(0.1339746, abs=2e-4)
    assert plus.values[0] == pytest.approx(0.1339746, abs=2e-4)


# ----------------------------------------------------------------------
# polyhedral planes: exact degeneracies
# ----------------------------------------------------------------------

def test_sup_norm_plane_is_flat(fast_config):
    eps = np.linspace(0.1, 1.9, 10)
    assert np.all(delta_curve(LINF, eps, fast_config).values <= 1e-9)
    minus, plus = lambda_curves(LINF, GRID, fast_config)
    assert np.all(minus.values <= 1e-9)
    np.testing.assert_allclose(plus.values, GRID, atol=1e-9)


def test_sup_norm_ball_packing_values():
    # default sampling: the flat-face optimum is resolved to ~1e-7
    curve = rho_banas_curve(LINF, [0.6, 2.0])
    assert curve.values[0] == pytest.approx(0.3, abs=1e-6)
    assert curve.values[1] == pytest.approx(1.0, abs=1e-9)


def test_l1_plane_mirrors_sup_plane(fast_config):
    # the l1 ball is the sup ball rotated by 45 degrees
    minus, plus = lambda_curves(L1, GRID, fast_config)
    assert np.all(minus.values <= 1e-9)
    np.testing.assert_allclose(plus.values, GRID, atol=1e-9)


def test_random_polygon_keeps_polyhedral_cap(polygon_factory, fast_config):
    poly = polygon_factory(5)
    minus, plus = lambda_curves(poly, np.array([0.25, 0.5, 0.75]),
                                fast_config)
    np.testing.assert_allclose(plus.values, [0.25, 0.5, 0.75], atol=1e-9)
    assert np.all(minus.values <= 1e-9)


# ----------------------------------------------------------------------
# structural curve invariants
# ----------------------------------------------------------------------

@pytest.mark.parametrize("kind,hi", [("delta", 2.0), ("rho", 1.0),
                                     ("rho-banas", 2.0),
                                     ("lambda-minus", 1.0),
                                     ("lambda-plus", 1.0)])
@pytest.mark.parametrize("sid", ["l2:2", "lp:3:2", "l1:2"])
def test_curves_are_nondecreasing_and_bounded(sid, kind, hi, fast_config):
    space = parse_space(sid)
    params = np.linspace(0.05, hi - 0.05, 12)
    curve = modulus_curve(space, kind, params, fast_config)
    assert np.all(np.diff(curve.values) >= -1e-9)
    assert np.all(curve.values >= 0.0)
    assert np.all(curve.values <= (1.0 if kind != "rho" else params) + 1e-9)
    expected_bias = "lower" if kind in ("rho", "rho-banas", "lambda-plus") \
        else "upper"
    assert curve.bias == expected_bias


@pytest.mark.parametrize("kind,bad", [
    ("delta", [2.5]), ("rho", [1.5]), ("rho-banas", [2.5]),
    ("lambda-minus", [-0.1]), ("lambda-plus", [1.1]),
])
def test_out_of_domain_parameters_are_rejected(kind, bad):
    with pytest.raises(ValueError):
        modulus_curve(L2, kind, bad)


def test_unknown_kind_is_rejected():
    with pytest.raises(ValueError):
        modulus_curve(L2, "curvature", [0.5])


def test_params_must_be_strictly_increasing():
    with pytest.raises(ValueError):
        delta_curve(L2, [0.5, 0.5])


# ----------------------------------------------------------------------
# supporting-modulus pointwise operations
# ----------------------------------------------------------------------

def test_lambda_root_euclidean_closed_form():
    root = lambda_root(L2, [1.0, 0.0], [0.0, 1.0], 0.6)
    assert root == pytest.approx(1.0 - math.sqrt(1.0 - 0.36), abs=1e-9)


def test_lambda_root_l1_diagonal():
    root = lambda_root(L1, [1.0, 0.0], [0.5, -0.5], 0.4)
    assert root == pytest.approx(0.4, abs=1e-9)


def test_lambda_root_requires_quasiorthogonal_direction():
    with pytest.raises(SpaceError):
        lambda_root(L2, [1.0, 0.0], [-1.0, 0.0], 0.5)


def test_lambda_root_rejects_non_unit_inputs():
    with pytest.raises(SpaceError):
        lambda_root(L2, [2.0, 0.0], [0.0, 1.0], 0.5)


@given(r=st.floats(min_value=0.01, max_value=0.99))
@settings(max_examples=40, deadline=None)
def test_lambda_root_stays_in_unit_interval_hypothesis(r):
    root = lambda_root(LpSpace(3.0, 2), [1.0, 0.0], [0.0, 1.0], r)
    assert 0.0 <= root <= 1.0
    # never exceeds the horizontal step
    assert root <= r + 1e-9


def test_lambda_local_at_corner_and_face():
    corner = np.array([1.0, 1.0])
    assert lambda_local(LINF, corner, 0.5, "plus") == \
        pytest.approx(0.5, abs=1e-9)
    face = np.array([0.0, 1.0])
    assert lambda_local(LINF, face, 0.5, "minus") == pytest.approx(0.0, abs=1e-12)


def test_lambda_curve_sign_wrapper(fast_config):
    minus = lambda_curve(LINF, [0.8], "minus", fast_config)
    plus = lambda_curve(LINF, [0.8], "plus", fast_config)
    assert minus.kind == "lambda-minus"
    assert plus.kind == "lambda-plus"
    assert plus.values[0] == pytest.approx(0.8, abs=1e-9)
    with pytest.raises(ValueError):
        lambda_curve(LINF, [0.8], "sideways", fast_config)


# ----------------------------------------------------------------------
# projection constant
# ----------------------------------------------------------------------

@pytest.mark.parametrize("sid,value", [
    ("l2:2", 1.0), ("l1:2", 2.0), ("linf:2", 2.0),
])
def test_xi_plane_values(sid, value, fast_config):
    est = xi(parse_space(sid), fast_config)
    assert est.value == pytest.approx(value, abs=1e-6)
    assert est.space_id == sid


def test_xi_witnesses_reproduce_the_value(fast_config):
    space = LpSpace(1.5, 2)
    est = xi(space, fast_config)
    x, y, p = est.witness_x, est.witness_y, est.witness_p
    assert space.norm(x) == pytest.approx(1.0, abs=1e-9)
    assert space.norm(y) == pytest.approx(1.0, abs=1e-9)
    reproduced = space.norm(x - float(p @ x) * np.asarray(y))
    assert reproduced == pytest.approx(est.value, abs=1e-12)
    assert 1.0 <= est.value <= 2.0 + 1e-12


def test_xi_higher_dimension_extremes(fast_config):
    assert xi(parse_space("l1:4"), fast_config).value == \
        pytest.approx(2.0, abs=1e-6)
    assert xi(parse_space("linf:3"), fast_config).value == \
        pytest.approx(2.0, abs=1e-6)


# ----------------------------------------------------------------------
# sections reduce correctly
# ----------------------------------------------------------------------

def test_dimension_three_hilbert_curves_match_plane(fast_config):
    space = parse_space("l2:3")
    params = np.array([0.2, 0.5, 0.8])
    minus, plus = lambda_curves(space, params, fast_config)
    expected = 1.0 - np.sqrt(1.0 - params ** 2)
    np.testing.assert_allclose(minus.values, expected, atol=2e-3)
    np.testing.assert_allclose(plus.values, expected, atol=2e-3)


# ----------------------------------------------------------------------
# the exact reference forms
# ----------------------------------------------------------------------

def test_hilbert_reference_values():
    assert hilbert_reference("delta", 1.0) == \
        pytest.approx(1.0 - math.sqrt(3.0) / 2.0, abs=1e-15)
    assert hilbert_reference("rho", 0.5) == \
        pytest.approx(math.sqrt(1.25) - 1.0, abs=1e-15)
    assert hilbert_reference("lambda", 0.6) == pytest.approx(0.2, abs=1e-15)
    assert hilbert_reference("delta-inverse", 1.0) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        hilbert_reference("delta", 2.5)
    with pytest.raises(ValueError):
        hilbert_reference("unknown", 0.5)


@given(r=st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=80, deadline=None)
def test_hilbert_reference_doubling_identity_hypothesis(r):
    # the convexity form at a doubled argument equals the supporting form
    assert hilbert_reference("delta", 2.0 * r) == \
        pytest.approx(hilbert_reference("lambda", r), abs=1e-12)


@given(t=st.floats(min_value=0.0, max_value=0.999))
@settings(max_examples=80, deadline=None)
def test_hilbert_reference_inverse_identity_hypothesis(t):
    # t = 1 is checked exactly elsewhere; just below it the roundtrip is
    # ill-conditioned because the convexity curve flattens out at its end
    eps = hilbert_reference("delta-inverse", t)
    assert hilbert_reference("delta", eps) == pytest.approx(t, abs=1e-12)


# ----------------------------------------------------------------------
# the generalized inverse of sampled curves
# ----------------------------------------------------------------------

def test_delta_inverse_on_computed_hilbert_curve(fast_config):
    curve = delta_curve(L2, np.linspace(0.0, 2.0, 201), fast_config)
    tau = 1.0 - math.sqrt(3.0) / 2.0
    assert delta_inverse(curve, tau) == pytest.approx(1.0, abs=2e-3)
    assert delta_inverse(curve, 1.0) == pytest.approx(2.0, abs=1e-9)
    assert delta_inverse(curve, 0.0) <= 0.05


def test_delta_inverse_of_flat_curve_returns_last_distance(fast_config):
    curve = delta_curve(LINF, np.linspace(0.0, 1.9, 20), fast_config)
    assert delta_inverse(curve, 0.5) == pytest.approx(1.9)


def test_delta_inverse_validates_inputs(fast_config):
    rho = rho_curve(L2, [0.5], fast_config)
    with pytest.raises(ValueError):
        delta_inverse(rho, 0.5)
    curve = delta_curve(L2, [0.5, 1.0], fast_config)
    with pytest.raises(ValueError):
        delta_inverse(curve, 1.5)


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------

def test_curve_csv_round_trip_is_a_fixpoint(fast_config):
    curve = delta_curve(L2, np.linspace(0.1, 1.9, 10), fast_config)
    text = curve.to_csv()
    again = ModulusCurve.from_csv(text, kind=curve.kind,
                                  space_id=curve.space_id,
                                  config_fingerprint=curve.config_fingerprint)
    assert again.to_csv() == text
    np.testing.assert_allclose(again.values, curve.values, rtol=1e-11)


increasing_params = st.lists(
    st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
    min_size=1, max_size=8, unique=True).map(sorted)


@given(params=increasing_params,
       values=st.lists(st.floats(min_value=0.0, max_value=1.0,
                                 allow_nan=False), min_size=8, max_size=8))
@settings(max_examples=60, deadline=None)
def test_csv_fixpoint_hypothesis(params, values):
    params = np.asarray(params)
    vals = np.minimum.accumulate(np.asarray(values[:len(params)]))[::-1].copy()
    curve = ModulusCurve("lambda-plus", "l2:2", params, np.sort(vals),
                         "0" * 16)
    text = curve.to_csv()
    again = ModulusCurve.from_csv(text, kind="lambda-plus", space_id="l2:2",
                                  config_fingerprint="0" * 16)
    assert again.to_csv() == text


def test_curve_json_round_trip(fast_config):
    curve = rho_curve(L2, [0.25, 0.5], fast_config)
    data = json.loads(json.dumps(curve.as_dict()))
    again = ModulusCurve.from_dict(data)
    assert again.kind == curve.kind
    np.testing.assert_array_equal(again.params, curve.params)
    np.testing.assert_array_equal(again.values, curve.values)


def test_identical_configs_give_identical_curves(fast_config):
    a = delta_curve(L2, GRID[:5], fast_config)
    b = delta_curve(L2, GRID[:5], fast_config)
    np.testing.assert_array_equal(a.values, b.values)
    assert a.config_fingerprint == b.config_fingerprint


def test_curve_arrays_are_frozen(fast_config):
    curve = delta_curve(L2, [0.5, 1.0], fast_config)
    with pytest.raises(ValueError):
        curve.values[0] = 7.0
