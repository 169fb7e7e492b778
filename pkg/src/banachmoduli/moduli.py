"""Quantitative rotundity and smoothness moduli of finite-dimensional norms.

Five one-parameter moduli of a normed space are computed here, all defined
by optimizing a norm expression over pairs of unit-sphere points:

``delta``
    Modulus of convexity: the infimum of ``1 - |x + y|/2`` over sphere
    pairs at distance exactly ``eps``.  Identically zero iff the sphere
    contains a segment of length ``eps``.
``rho``
    Modulus of smoothness: the supremum of ``(|x + t d| + |x - t d|)/2 - 1``
    over sphere points ``x`` and unit directions ``d``.
``rho-banas``
    Ball-packing variant of smoothness: the supremum of ``1 - |x + y|/2``
    over sphere pairs at distance at most ``eps``.
``lambda-minus`` / ``lambda-plus``
    Supporting moduli: for a sphere point ``x``, a unit vector ``y``
    quasiorthogonal to ``x`` and ``r`` in ``[0, 1]``, let
    ``lambda(x, y, r)`` be the least ``lambda`` with
    ``|x + r y - lambda x| = 1``.  The minus/plus moduli are the infimum
    and supremum of ``lambda(x, y, r)`` over all such pairs.

Every modulus reduces to two-dimensional computations: the defining
expressions only involve norms of combinations of ``x`` and ``y``, so the
optimum over a space equals the optimum over its central plane sections
(quasiorthogonality and support functionals restrict to sections with the
same values).  Plane computations sweep a corner-augmented angle grid,
locate partners by monotone bisection along the sphere, and refine
winners with a few rounds of local grid zoom.  Estimates inherit a
one-sided bias from sampling: infimum-type values can only be too high,
supremum-type values only too low; see ``ModulusCurve.bias``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, replace

import numpy as np

from . import kernels
from .config import SampleConfig
from .spaces import (
    NormedSpace,
    SectionSpace,
    SpaceError,
    as_vector,
    golden_section_min,
    unit_sphere_points,
)

DELTA = "delta"
RHO = "rho"
RHO_BANAS = "rho-banas"
LAMBDA_MINUS = "lambda-minus"
LAMBDA_PLUS = "lambda-plus"

CURVE_KINDS = (DELTA, RHO, RHO_BANAS, LAMBDA_MINUS, LAMBDA_PLUS)

# Parameter domain per kind.  rho is defined for any nonnegative step,
# but every inequality in scope evaluates it at arguments <= 1, so curves
# are restricted to that range.
_DOMAINS = {
    DELTA: (0.0, 2.0),
    RHO: (0.0, 1.0),
    RHO_BANAS: (0.0, 2.0),
    LAMBDA_MINUS: (0.0, 1.0),
    LAMBDA_PLUS: (0.0, 1.0),
}

_SUP_KINDS = frozenset({RHO, RHO_BANAS, LAMBDA_PLUS})

_TWO_PI = 2.0 * math.pi

# Bisection iteration counts: angular partner search (window pi) and
# lockstep root search on [0, 1].  Both leave windows ~1e-13, below every
# tolerance used downstream.
_PARTNER_ITERS = 42
_ROOT_ITERS = 47

_ZOOM_ROUNDS = 3
_ZOOM_POINTS = 33
_ZOOM_SHRINK = 16.0


def _rot90_rows(Q: np.ndarray) -> np.ndarray:
    return np.stack([-Q[:, 1], Q[:, 0]], axis=1)


# ----------------------------------------------------------------------
# curve container
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ModulusCurve:
    """A modulus sampled on an increasing parameter grid.

    Parameters and values are read-only float arrays of equal length.
    ``space_id`` names the space (its specification string) and
    ``config_fingerprint`` the sampling configuration, so curves computed
    under identical settings compare bit-for-bit.
    """

    kind: str
    space_id: str
    params: np.ndarray
    values: np.ndarray
    config_fingerprint: str

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"unknown modulus kind {self.kind!r}")
        params = np.array(self.params, dtype=np.float64)
        values = np.array(self.values, dtype=np.float64)
        if params.ndim != 1 or params.shape != values.shape:
            raise ValueError("params and values must be 1-d arrays of equal length")
        if params.size == 0:
            raise ValueError("a curve needs at least one parameter")
        if not (np.all(np.isfinite(params)) and np.all(np.isfinite(values))):
            raise ValueError("curve data must be finite")
        if np.any(np.diff(params) <= 0.0):
            raise ValueError("params must be strictly increasing")
        lo, hi = _DOMAINS[self.kind]
        if params[0] < lo - 1e-12 or params[-1] > hi + 1e-12:
            raise ValueError(f"{self.kind} parameters must lie in [{lo}, {hi}]")
        params.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "values", values)

    @property
    def bias(self) -> str:
        """Side of the true curve the estimate can err on.

        ``"lower"`` for supremum-type moduli (sampling can only miss
        mass), ``"upper"`` for infimum-type ones.
        """
        return "lower" if self.kind in _SUP_KINDS else "upper"

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "space_id": self.space_id,
            "config_fingerprint": self.config_fingerprint,
            "points": [[float(p), float(v)]
                       for p, v in zip(self.params, self.values)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ModulusCurve":
        pts = np.asarray(data["points"], dtype=np.float64).reshape(-1, 2)
        return cls(data["kind"], data["space_id"], pts[:, 0], pts[:, 1],
                   data["config_fingerprint"])

    def to_csv(self) -> str:
        lines = ["param,value"]
        lines += [f"{p:.12g},{v:.12g}" for p, v in zip(self.params, self.values)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str, kind: str, space_id: str,
                 config_fingerprint: str) -> "ModulusCurve":
        rows = [ln for ln in text.strip().splitlines() if ln]
        if not rows or rows[0].strip() != "param,value":
            raise ValueError("expected a 'param,value' header")
        data = np.array([[float(c) for c in ln.split(",")] for ln in rows[1:]])
        return cls(kind, space_id, data[:, 0], data[:, 1], config_fingerprint)


@dataclass(frozen=True)
class XiEstimate:
    """The transversal constant of a space, with an attaining triple.

    ``value`` estimates ``sup |x - <p, x> y|`` over unit ``x``, ``y`` and
    support functionals ``p`` at ``y`` -- the worst-case norm of the
    projection of ``x`` onto the hyperplane ``<p, .> = 0`` along ``y``.
    It lies in ``[1, 2]``; inner-product norms give 1.  Witnesses are
    reported in ambient coordinates.  For spaces of dimension >= 3 the
    witness functional is the minimum-Euclidean-norm lift of the plane
    functional of the winning section; it reproduces ``value`` but is only
    guaranteed dual-unit within the section.
    """

    value: float
    witness_x: np.ndarray
    witness_y: np.ndarray
    witness_p: np.ndarray
    space_id: str
    config_fingerprint: str

    def as_dict(self) -> dict:
        return {
            "value": float(self.value),
            "witness_x": [float(c) for c in self.witness_x],
            "witness_y": [float(c) for c in self.witness_y],
            "witness_p": [float(c) for c in self.witness_p],
            "space_id": self.space_id,
            "config_fingerprint": self.config_fingerprint,
        }


# ----------------------------------------------------------------------
# closed forms for inner-product norms
# ----------------------------------------------------------------------

HILBERT_KINDS = ("delta", "rho", "lambda", "delta-inverse")


def hilbert_reference(kind: str, t: float) -> float:
    """Exact modulus value of an inner-product norm (any dimension).

    ``kind`` is one of ``"delta"`` (convexity, ``t`` in [0, 2]),
    ``"rho"`` (smoothness, ``t >= 0``), ``"lambda"`` (both supporting
    moduli coincide, ``t`` in [0, 1]) and ``"delta-inverse"``
    (``t`` in [0, 1]).  The smoothness form ``sqrt(1 + t^2) - 1`` is
    confirmed against the pair-sweep engine in the test suite.
    """
    t = float(t)
    if kind == "delta":
        if not 0.0 <= t <= 2.0:
            raise ValueError("convexity argument must lie in [0, 2]")
        return 1.0 - math.sqrt(1.0 - t * t / 4.0)
    if kind == "rho":
        if t < 0.0:
            raise ValueError("smoothness argument must be nonnegative")
        return math.sqrt(1.0 + t * t) - 1.0
    if kind == "lambda":
        if not 0.0 <= t <= 1.0:
            raise ValueError("supporting-modulus argument must lie in [0, 1]")
        return 1.0 - math.sqrt(1.0 - t * t)
    if kind == "delta-inverse":
        if not 0.0 <= t <= 1.0:
            raise ValueError("inverse-convexity argument must lie in [0, 1]")
        return 2.0 * math.sqrt(t * (2.0 - t))
    raise ValueError(f"unknown reference kind {kind!r}")


# ----------------------------------------------------------------------
# plane sweep engine
# ----------------------------------------------------------------------

class _PlaneSweep:
    """Shared machinery for modulus optimization over one plane norm.

    Holds the corner-augmented angle grid and cached tangent data for one
    (space, config) pair.  All searches are lockstep-vectorized across
    grid rows; scalar Python runs only once per grid point (building the
    support-functional tangent list).
    """

    def __init__(self, space: NormedSpace, config: SampleConfig, zoom: bool):
        if space.dim != 2:
            raise SpaceError("plane sweeps need a two-dimensional space")
        self.space = space
        self.config = config
        self.zoom = zoom
        self.desc = space.kernel_descriptor()
        n = config.angular_samples
        base = np.arange(n) * (_TWO_PI / n)
        special = np.mod(space.special_angles(), _TWO_PI)
        self.thetas = np.unique(np.concatenate([base, special]))
        self.points = unit_sphere_points(space, self.thetas)
        self.step = _TWO_PI / n
        self._tangents: tuple | None = None

    # -- primitives ----------------------------------------------------
    def points_at(self, thetas: np.ndarray) -> np.ndarray:
        P = np.stack([np.cos(thetas), np.sin(thetas)], axis=1)
        return P / kernels.gauge_many(self.desc, P)[:, None]

    def gauge(self, Z: np.ndarray) -> np.ndarray:
        return kernels.gauge_many(self.desc, Z)

    def _partner_angles(self, th: np.ndarray, eps: np.ndarray,
                        boundary: str) -> np.ndarray:
        """Angular offsets in ``[0, pi]`` where the chord from each sphere
        point first reaches (``boundary="first"``) or last stays within
        (``boundary="last"``) distance ``eps``.

        Chord length grows monotonically with angular offset on a convex
        sphere, so a sign bisection on the offset finds the boundary of
        ``{distance >= eps}`` (resp. ``{distance <= eps}``); on a plateau
        of chords with length exactly ``eps`` the two modes return its two
        ends.
        """
        X = self.points_at(th)
        lo = np.zeros(th.shape[0])
        hi = np.full(th.shape[0], math.pi)
        for _ in range(_PARTNER_ITERS):
            mid = 0.5 * (lo + hi)
            d = self.gauge(X - self.points_at(th + mid))
            crossed = (d >= eps) if boundary == "first" else (d > eps)
            hi = np.where(crossed, mid, hi)
            lo = np.where(crossed, lo, mid)
        return hi if boundary == "first" else lo

    # -- delta / rho-banas ----------------------------------------------
    def _pair_values(self, th: np.ndarray, eps: np.ndarray,
                     boundary: str) -> np.ndarray:
        """``1 - |x + y|/2`` with ``y`` the partner of ``x`` at offset
        found by :meth:`_partner_angles`."""
        off = self._partner_angles(th, eps, boundary)
        X = self.points_at(th)
        Y = self.points_at(th + off)
        return 1.0 - 0.5 * self.gauge(X + Y)

    def _extremal_pair_curve(self, eps_arr: np.ndarray,
                             boundary: str, sign: float) -> np.ndarray:
        """Optimize ``1 - |x+y|/2`` over constrained sphere pairs.

        ``sign=+1`` minimizes (convexity), ``sign=-1`` maximizes
        (ball-packing smoothness); the partner rule encodes the distance
        constraint.
        """
        n_eps, m = eps_arr.size, self.thetas.size
        th = np.tile(self.thetas, n_eps)
        ep = np.repeat(eps_arr, m)
        vals = (sign * self._pair_values(th, ep, boundary)).reshape(n_eps, m)
        best = vals.min(axis=1)
        if self.zoom:
            winners = self.thetas[np.argmin(vals, axis=1)]
            for k in range(n_eps):
                centre, half = winners[k], self.step
                for _ in range(_ZOOM_ROUNDS):
                    grid = centre + np.linspace(-half, half, _ZOOM_POINTS)
                    v = sign * self._pair_values(
                        grid, np.full(grid.shape, eps_arr[k]), boundary)
                    i = int(np.argmin(v))
                    centre = grid[i]
                    best[k] = min(best[k], v[i])
                    half /= _ZOOM_SHRINK
        return sign * best

    def delta_values(self, eps_arr: np.ndarray) -> np.ndarray:
        return self._extremal_pair_curve(eps_arr, "first", 1.0)

    def rho_banas_values(self, eps_arr: np.ndarray) -> np.ndarray:
        return self._extremal_pair_curve(eps_arr, "last", -1.0)

    # -- rho -------------------------------------------------------------
    def rho_values(self, tau_arr: np.ndarray) -> np.ndarray:
        out = np.empty(tau_arr.size)
        for k, tau in enumerate(tau_arr):
            best, bi, bj = kernels.rho_pair_max(self.desc, self.points,
                                                self.points, float(tau))
            if self.zoom:
                tx, td = self.thetas[bi], self.thetas[bj]
                half = self.step
                for _ in range(_ZOOM_ROUNDS):
                    gx = tx + np.linspace(-half, half, _ZOOM_POINTS)
                    gd = td + np.linspace(-half, half, _ZOOM_POINTS)
                    v, i, j = kernels.rho_pair_max(
                        self.desc, self.points_at(gx), self.points_at(gd),
                        float(tau))
                    best = max(best, v)
                    tx, td = gx[i], gd[j]
                    half /= _ZOOM_SHRINK
            out[k] = best
        return out

    # -- supporting moduli -------------------------------------------------
    def _tangent_pairs(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """All (sphere point, quasiorthogonal unit tangent) pairs of the grid.

        For each grid point the support functionals give the directions of
        the sphere's supporting lines; rotating a functional by a quarter
        turn yields its annihilated direction, quasiorthogonal to the
        point by construction.  Both orientations are kept.
        """
        if self._tangents is None:
            xs, dirs, owners = [], [], []
            for theta, x in zip(self.thetas, self.points):
                fs = self.space.support_functionals(x, self.config)
                for q in fs.generators:
                    t = np.array([-q[1], q[0]])
                    for s in (1.0, -1.0):
                        xs.append(x)
                        dirs.append(s * t)
                        owners.append(theta)
            X = np.asarray(xs)
            D = np.asarray(dirs)
            Y = D / self.gauge(D)[:, None]
            self._tangents = (X, Y, np.asarray(owners))
        return self._tangents

    def _pairs_at(self, thetas: np.ndarray):
        """Tangent pairs rebuilt for arbitrary angles (zoom refinement)."""
        pts = self.points_at(thetas)
        xs, dirs, owner_idx = [], [], []
        for i, x in enumerate(pts):
            fs = self.space.support_functionals(x, self.config)
            for q in fs.generators:
                t = np.array([-q[1], q[0]])
                for s in (1.0, -1.0):
                    xs.append(x)
                    dirs.append(s * t)
                    owner_idx.append(i)
        X = np.asarray(xs)
        D = np.asarray(dirs)
        return X, D / self.gauge(D)[:, None], np.asarray(owner_idx)

    def _lockstep_roots(self, X: np.ndarray, Y: np.ndarray,
                        R: np.ndarray) -> np.ndarray:
        """Least ``lam`` in [0, 1] with ``|(1 - lam) x + r y| <= 1`` per row.

        The map is convex in ``lam`` with value ``r - 1 <= 0`` at 1, so a
        sign bisection against the unit level converges to the least
        touching parameter; rows already inside the ball at ``lam = 0``
        collapse to 0.
        """
        lo = np.zeros(X.shape[0])
        hi = np.ones(X.shape[0])
        for _ in range(_ROOT_ITERS):
            mid = 0.5 * (lo + hi)
            g = self.gauge((1.0 - mid)[:, None] * X + R[:, None] * Y)
            feas = g <= 1.0
            hi = np.where(feas, mid, hi)
            lo = np.where(feas, lo, mid)
        return hi

    def lambda_values(self, r_arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(infimum, supremum) of the supporting root over tangent pairs."""
        X, Y, owners = self._tangent_pairs()
        n_r, m = r_arr.size, X.shape[0]
        lam = self._lockstep_roots(
            np.tile(X, (n_r, 1)), np.tile(Y, (n_r, 1)),
            np.repeat(r_arr, m)).reshape(n_r, m)
        lminus, lplus = lam.min(axis=1), lam.max(axis=1)
        if self.zoom:
            for k, r in enumerate(r_arr):
                for side in (0, 1):
                    idx = int(np.argmin(lam[k]) if side == 0 else
                              np.argmax(lam[k]))
                    centre, half = owners[idx], self.step
                    for _ in range(_ZOOM_ROUNDS):
                        grid = centre + np.linspace(-half, half, _ZOOM_POINTS)
                        Xz, Yz, oi = self._pairs_at(grid)
                        lz = self._lockstep_roots(
                            Xz, Yz, np.full(Xz.shape[0], r))
                        j = int(np.argmin(lz) if side == 0 else np.argmax(lz))
                        if side == 0:
                            lminus[k] = min(lminus[k], lz[j])
                        else:
                            lplus[k] = max(lplus[k], lz[j])
                        centre = grid[oi[j]]
                        half /= _ZOOM_SHRINK
        return lminus, lplus

    # -- transversal constant ---------------------------------------------
    def xi_scan(self) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
        """Max of ``|x - <p, x> y|`` over grid points and support extremes.

        Interior support functionals never matter here: for fixed ``x, y``
        the objective is convex in the scalar ``<p, x>``, hence maximal at
        an extreme functional.
        """
        cfg = replace(self.config, subdifferential_samples=0)
        X = self.points
        best = -math.inf
        w_y = w_p = w_x = None
        for y in self.points:
            fs = self.space.support_functionals(y, cfg)
            for q in fs.generators:
                vals = self.gauge(X - np.outer(X @ q, y))
                i = int(np.argmax(vals))
                if vals[i] > best:
                    best = float(vals[i])
                    w_y, w_p, w_x = y, q, X[i]
        return best, w_y, w_p, w_x


# ----------------------------------------------------------------------
# sweep cache and section reduction
# ----------------------------------------------------------------------

_SWEEP_CACHE: dict[tuple, _PlaneSweep] = {}
_SWEEP_CACHE_CAP = 160


def _sweep_for(space: NormedSpace, config: SampleConfig,
               zoom: bool) -> _PlaneSweep:
    key = (space.spec_string, config.fingerprint, zoom)
    sweep = _SWEEP_CACHE.get(key)
    if sweep is None:
        sweep = _PlaneSweep(space, config, zoom)
        if len(_SWEEP_CACHE) >= _SWEEP_CACHE_CAP:
            _SWEEP_CACHE.pop(next(iter(_SWEEP_CACHE)))
        _SWEEP_CACHE[key] = sweep
    return sweep


def _section_config(config: SampleConfig) -> SampleConfig:
    n = max(256, config.angular_samples // 8)
    return replace(config, angular_samples=n)


def section_planes(space: NormedSpace,
                   config: SampleConfig) -> list[SectionSpace]:
    """Deterministic family of central plane sections of a space.

    All coordinate-pair sections come first (they hit the polyhedral
    structure of the standard norms exactly), then seeded random planes
    with orthonormalized bases, up to ``config.section_samples`` total.
    """
    dim = space.dim
    planes = []
    for i, j in itertools.combinations(range(dim), 2):
        u, v = np.zeros(dim), np.zeros(dim)
        u[i], v[j] = 1.0, 1.0
        planes.append(SectionSpace(space, u, v))
    rng = np.random.default_rng(config.seed)
    while len(planes) < config.section_samples:
        A = rng.standard_normal((dim, 2))
        Q, R = np.linalg.qr(A)
        if min(abs(R[0, 0]), abs(R[1, 1])) < 1e-9:
            continue
        Q = Q * np.sign(np.diag(R))
        planes.append(SectionSpace(space, Q[:, 0], Q[:, 1]))
    return planes


def _plane_curve_values(space2d: NormedSpace, kind: str, params: np.ndarray,
                        config: SampleConfig, zoom: bool) -> np.ndarray:
    sweep = _sweep_for(space2d, config, zoom)
    if kind == DELTA:
        return sweep.delta_values(params)
    if kind == RHO:
        return sweep.rho_values(params)
    if kind == RHO_BANAS:
        return sweep.rho_banas_values(params)
    minus, plus = sweep.lambda_values(params)
    return minus if kind == LAMBDA_MINUS else plus


def _curve_values(space: NormedSpace, kind: str, params: np.ndarray,
                  config: SampleConfig) -> np.ndarray:
    if space.dim == 2:
        return _plane_curve_values(space, kind, params, config, zoom=True)
    cfg = _section_config(config)
    rows = [_plane_curve_values(plane, kind, params, cfg, zoom=False)
            for plane in section_planes(space, config)]
    stack = np.stack(rows)
    return stack.max(axis=0) if kind in _SUP_KINDS else stack.min(axis=0)


def _validated_params(kind: str, params) -> np.ndarray:
    arr = np.asarray(params, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("parameter grid must be a nonempty 1-d array")
    if np.any(np.diff(arr) <= 0.0):
        raise ValueError("parameter grid must be strictly increasing")
    lo, hi = _DOMAINS[kind]
    if arr[0] < lo or arr[-1] > hi:
        raise ValueError(f"{kind} parameters must lie in [{lo}, {hi}]")
    return arr


# ----------------------------------------------------------------------
# public API
# ----------------------------------------------------------------------

def modulus_curve(space: NormedSpace, kind: str, params,
                  config: SampleConfig | None = None) -> ModulusCurve:
    """Sample one modulus of ``space`` on an increasing parameter grid."""
    if kind not in CURVE_KINDS:
        raise ValueError(f"unknown modulus kind {kind!r}")
    config = config or SampleConfig()
    arr = _validated_params(kind, params)
    # Every modulus here is nonnegative (triangle inequality); the floor
    # only removes last-bit rounding noise from flat polyhedral optima.
    values = np.maximum(_curve_values(space, kind, arr, config), 0.0)
    return ModulusCurve(kind, space.spec_string, arr, values,
                        config.fingerprint)


def delta_curve(space, params, config=None) -> ModulusCurve:
    """Modulus of convexity on a grid of distances in ``[0, 2]``."""
    return modulus_curve(space, DELTA, params, config)


def rho_curve(space, params, config=None) -> ModulusCurve:
    """Modulus of smoothness on a grid of step sizes."""
    return modulus_curve(space, RHO, params, config)


def rho_banas_curve(space, params, config=None) -> ModulusCurve:
    """Ball-packing smoothness modulus on a grid of distances."""
    return modulus_curve(space, RHO_BANAS, params, config)


def lambda_curves(space, params,
                  config=None) -> tuple[ModulusCurve, ModulusCurve]:
    """Both supporting moduli (infimum and supremum) in one sweep."""
    config = config or SampleConfig()
    arr = _validated_params(LAMBDA_MINUS, params)
    if space.dim == 2:
        sweep = _sweep_for(space, config, zoom=True)
        minus, plus = sweep.lambda_values(arr)
    else:
        cfg = _section_config(config)
        lows, highs = [], []
        for plane in section_planes(space, config):
            lo, hi = _sweep_for(plane, cfg, zoom=False).lambda_values(arr)
            lows.append(lo)
            highs.append(hi)
        minus = np.stack(lows).min(axis=0)
        plus = np.stack(highs).max(axis=0)
    minus, plus = np.maximum(minus, 0.0), np.maximum(plus, 0.0)
    fp = config.fingerprint
    return (ModulusCurve(LAMBDA_MINUS, space.spec_string, arr, minus, fp),
            ModulusCurve(LAMBDA_PLUS, space.spec_string, arr, plus, fp))


def lambda_curve(space: NormedSpace, params, sign: str,
                 config: SampleConfig | None = None) -> ModulusCurve:
    """One supporting modulus (``sign`` = ``"minus"`` or ``"plus"``)."""
    sign = sign.lower()
    if sign not in ("minus", "plus"):
        raise ValueError("sign must be 'minus' or 'plus'")
    minus, plus = lambda_curves(space, params, config)
    return minus if sign == "minus" else plus


def lambda_root(space: NormedSpace, x, y, r: float,
                config: SampleConfig | None = None) -> float:
    """Least ``lam`` in [0, 1] with ``|x + r y - lam x| = 1``.

    Parameters
    ----------
    x, y : unit vectors; ``y`` quasiorthogonal to ``x`` (so the segment
        starts on or outside the unit ball).
    r : step size in ``[0, 1]``.

    The map ``lam -> |(1 - lam) x + r y|`` is convex, equals
    ``r <= 1`` at ``lam = 1`` and is at least 1 at ``lam = 0`` by
    quasiorthogonality, so the least touching parameter exists and a sign
    bisection finds it.
    """
    config = config or SampleConfig()
    x = as_vector(x, space.dim)
    y = as_vector(y, space.dim)
    if not 0.0 <= r <= 1.0:
        raise SpaceError("r must lie in [0, 1]")
    for name, v in (("x", x), ("y", y)):
        if abs(space.norm(v) - 1.0) > 10.0 * config.feas_tol:
            raise SpaceError(f"{name} must be a unit vector")

    def g(lam: float) -> float:
        return space.norm((1.0 - lam) * x + r * y) - 1.0

    g0 = g(0.0)
    if g0 < -config.feas_tol:
        raise SpaceError("x + r y lies inside the unit ball; "
                         "y is not quasiorthogonal to x")
    if g0 <= config.root_tol:
        return 0.0
    lo, hi = 0.0, 1.0
    if g(1.0) > config.root_tol:
        # Numerically possible only at r ~ 1: fall back to locating the
        # convex minimum and bisect on its left flank.
        t, gt = golden_section_min(g, 0.0, 1.0, config.root_tol)
        if gt > config.root_tol:
            raise SpaceError("the segment never touches the unit sphere")
        hi = t
    while hi - lo > config.root_tol * 0.01:
        mid = 0.5 * (lo + hi)
        if g(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return hi


def lambda_local(space2d: NormedSpace, x, r: float, sign: str,
                 config: SampleConfig | None = None) -> float:
    """Supporting modulus at a single sphere point of a plane norm.

    Enumerates the support functionals at ``x``; each generator ``p``
    yields the quasiorthogonal directions ``+y`` and ``-y`` annihilated
    by ``p``, and each direction its least touching root.  ``sign`` picks
    the infimum (``"minus"``) or supremum (``"plus"``) over all of them.
    """
    from .spaces import make_quasiorthogonal

    config = config or SampleConfig()
    sign = sign.lower()
    if sign not in ("minus", "plus"):
        raise ValueError("sign must be 'minus' or 'plus'")
    x = as_vector(x, space2d.dim)
    if space2d.dim != 2:
        raise SpaceError("lambda_local operates on plane norms")
    if not 0.0 <= r <= 1.0:
        raise SpaceError("r must lie in [0, 1]")
    fs = space2d.support_functionals(x, config)
    roots = []
    for q in fs.generators:
        y = make_quasiorthogonal(space2d, x, q, np.array([-q[1], q[0]]),
                                 config)
        for s in (1.0, -1.0):
            roots.append(lambda_root(space2d, x, s * y, r, config))
    return min(roots) if sign == "minus" else max(roots)


def xi(space: NormedSpace, config: SampleConfig | None = None) -> XiEstimate:
    """Transversal constant with witnesses, in ``[1, 2]``.

    Measures the worst-case norm inflation of projecting a unit vector
    onto a supporting hyperplane's kernel along the supported direction.
    """
    config = config or SampleConfig()
    if space.dim == 2:
        best, w_y, w_p, w_x = _sweep_for(space, config, zoom=True).xi_scan()
        return XiEstimate(best, w_x, w_y, w_p, space.spec_string,
                          config.fingerprint)
    cfg = _section_config(config)
    best = -math.inf
    w = None
    for plane in section_planes(space, config):
        v, py, pp, px = _sweep_for(plane, cfg, zoom=False).xi_scan()
        if v > best:
            best, w = v, (plane, py, pp, px)
    plane, py, pp, px = w
    return XiEstimate(best, px @ plane.basis, py @ plane.basis,
                      pp @ plane.basis, space.spec_string,
                      config.fingerprint)


def delta_inverse(curve: ModulusCurve, tau: float) -> float:
    """Generalized inverse ``sup {eps : delta(eps) <= tau}`` of a
    convexity curve, for ``tau`` in [0, 1].

    The curve's running maximum is a nondecreasing envelope whose level
    crossing at ``tau`` is located by linear interpolation; when the
    whole envelope stays at or below ``tau`` the supremum is the last
    sampled distance.
    """
    if curve.kind != DELTA:
        raise ValueError("delta_inverse needs a convexity curve")
    tau = float(tau)
    if not 0.0 <= tau <= 1.0:
        raise ValueError("tau must lie in [0, 1]")
    env = np.maximum.accumulate(curve.values)
    eps = curve.params
    j = int(np.searchsorted(env, tau, side="right")) - 1
    if j < 0:
        # The curve starts above tau: interpolate from delta(0) = 0.
        return float(eps[0] * (tau / env[0]))
    if j >= env.size - 1:
        return float(eps[-1])
    gap = env[j + 1] - env[j]
    frac = (tau - env[j]) / gap if gap > 0.0 else 0.0
    return float(eps[j] + frac * (eps[j + 1] - eps[j]))
