"""Numerical verification harness for the modulus inequalities.

Three layers of evidence are produced:

* :func:`run_checks` evaluates a registry of cross-modulus inequality
  chains (convexity vs. supporting convexity, smoothness sandwiches, the
  projection-constant chain, and the structural properties of the
  supporting moduli) on a parameter grid, producing an
  :class:`InequalityReport` whose entries carry explicit margins and a
  Pass / Fail / Degenerate status.
* :func:`brute_force_modulus` re-computes any modulus by an exhaustive
  O(resolution^2) double sweep with no root-finding shortcuts — an
  independent oracle for cross-validating the curve engines.
* :func:`property_suite` stress-tests three pointwise norm inequalities
  (chord intersection, the support-functional smoothness bound, and the
  normalized-difference bound) on seeded random inputs.

:func:`explore_conjecture` reports, without asserting, how close the
projection constant of an lp plane comes to its upper bound.

Tolerances are one-sided by design: sampled suprema can only be too
small and sampled infima too large, so each check grants ``config.slack``
on the side where that bias could cause a spurious violation.  A genuine
violation grows with resolution while a discretization artifact shrinks,
which is how the two are told apart.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import SampleConfig
from .moduli import (
    CURVE_KINDS,
    DELTA,
    LAMBDA_MINUS,
    LAMBDA_PLUS,
    RHO,
    RHO_BANAS,
    ModulusCurve,
    delta_curve,
    delta_inverse,
    hilbert_reference,
    lambda_curves,
    modulus_curve,
    rho_banas_curve,
    rho_curve,
    xi,
)
from .spaces import LpSpace, NormedSpace, SpaceError, unit_sphere_points

PASS = "Pass"
FAIL = "Fail"
DEGENERATE = "Degenerate"


# ----------------------------------------------------------------------
# report containers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityEntry:
    """One evaluated inequality instance ``lhs <= rhs`` at a parameter.

    ``margin = rhs - lhs``; Pass means ``margin >= -tolerance``.
    Degenerate entries mark grid parameters outside a check's domain and
    carry no numbers.  Fail entries from randomized suites attach the
    sampled witness so the violation can be replayed.
    """

    check_id: str
    param: float
    lhs: float | None
    rhs: float | None
    margin: float | None
    tolerance: float
    status: str
    witness: dict | None = None

    def as_dict(self) -> dict:
        d = {
            "check_id": self.check_id,
            "param": float(self.param),
            "lhs": None if self.lhs is None else float(self.lhs),
            "rhs": None if self.rhs is None else float(self.rhs),
            "margin": None if self.margin is None else float(self.margin),
            "tolerance": float(self.tolerance),
            "status": self.status,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass(frozen=True)
class InequalityReport:
    """Deterministic collection of inequality entries for one space."""

    space_id: str
    config_fingerprint: str
    entries: tuple[InequalityEntry, ...]

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "degenerate": 0}
        for e in self.entries:
            counts[e.status.lower()] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(e.status != FAIL for e in self.entries)

    def by_check(self, check_id: str) -> list[InequalityEntry]:
        return [e for e in self.entries if e.check_id == check_id]

    def as_dict(self) -> dict:
        return {
            "space_id": self.space_id,
            "config_fingerprint": self.config_fingerprint,
            "entries": [e.as_dict() for e in self.entries],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def _entry(check_id: str, param: float, lhs: float, rhs: float,
           tol: float, witness: dict | None = None) -> InequalityEntry:
    margin = rhs - lhs
    status = PASS if margin >= -tol else FAIL
    return InequalityEntry(check_id, float(param), float(lhs), float(rhs),
                           float(margin), tol, status, witness)


def _degenerate(check_id: str, param: float, tol: float) -> InequalityEntry:
    return InequalityEntry(check_id, float(param), None, None, None, tol,
                           DEGENERATE)


# ----------------------------------------------------------------------
# check registry
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class InequalityCheck:
    """Registry descriptor: what is compared, where, and which side of
    the inequality is allowed to absorb discretization bias."""

    check_id: str
    description: str
    lhs_expr: str
    rhs_expr: str
    param_domain: tuple[float, float]
    slack_side: str  # "Lhs" or "Rhs"
    fixed_tolerance: float | None = None  # None -> config.slack


REGISTRY: tuple[InequalityCheck, ...] = (
    InequalityCheck(
        "thm4.1-left", "convexity below supporting convexity",
        "delta(r)", "lambda_minus(r)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "thm4.1-right", "supporting convexity below convexity at doubled arg",
        "lambda_minus(r)", "delta(2r)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem4.2", "supporting smoothness below smoothness at doubled arg",
        "lambda_plus(r)", "rho(2r)", (0.0, 0.5), "Rhs"),
    InequalityCheck(
        "lem4.3", "smoothness at half arg below supporting smoothness",
        "rho(r/2)", "lambda_plus(r)", (0.0, 1.0), "Rhs"),
    InequalityCheck(
        "thm5.1-left", "ball-packing smoothness below supporting smoothness",
        "rho_banas(2r)", "lambda_plus(r)", (0.0, 1.0), "Rhs"),
    InequalityCheck(
        "thm5.1-right", "supporting smoothness below ball-packing bound",
        "lambda_plus(r)", "2 rho_banas(3r)", (0.0, 2.0 / 3.0), "Rhs"),
    InequalityCheck(
        "cor5.2-left", "smoothness at sixth arg below ball-packing modulus",
        "rho(r/6)/2", "rho_banas(r)", (0.0, 0.5), "Rhs"),
    InequalityCheck(
        "cor5.2-right", "ball-packing modulus below smoothness",
        "rho_banas(r)", "rho(r)", (0.0, 0.5), "Rhs"),
    InequalityCheck(
        "cor5.3-left", "inner-product norms maximize supporting convexity",
        "lambda_minus(r)", "1 - sqrt(1 - r^2)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "cor5.3-right", "inner-product norms minimize supporting smoothness",
        "1 - sqrt(1 - r^2)", "lambda_plus(r)", (0.0, 1.0), "Rhs"),
    InequalityCheck(
        "thm6.1-left", "projection constant lower bound; param is the "
        "derived argument (1 - lambda_minus(1))/2",
        "1/(1 - lambda_minus(s))", "xi", (0.0, 0.5), "Rhs"),
    InequalityCheck(
        "thm6.1-right", "projection constant upper bound; param as in "
        "thm6.1-left",
        "xi", "1/(1 - lambda_plus(s))", (0.0, 0.5), "Rhs"),
    InequalityCheck(
        "lem6.3-left", "inverse-convexity chain, comparison of arguments",
        "1 - inv_delta(1 - r/2)/2", "1 - inv_delta(1 - r/xi)/2",
        (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem6.3-right", "inverse-convexity lower bound on supporting "
        "smoothness",
        "1 - inv_delta(1 - r/xi)/2", "lambda_plus(r)", (0.0, 1.0), "Rhs"),
    InequalityCheck(
        "lem3.3-order", "supporting convexity below supporting smoothness",
        "lambda_minus(r)", "lambda_plus(r)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem3.3-cap", "supporting smoothness capped by its argument "
        "(tolerance follows the feasibility tolerance)",
        "lambda_plus(r)", "r", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem3.3-scale", "superlinear scaling of supporting convexity "
        "between consecutive grid points (param is the larger)",
        "(r2/r1) lambda_minus(r1)", "lambda_minus(r2)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem3.3-lipschitz", "Lipschitz bound on supporting convexity "
        "increments (param is the larger grid point)",
        "lambda_minus(r2) - lambda_minus(r1)", "(r2 - r1)/(1 - r1)",
        (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem3.3-mono-minus", "supporting convexity nondecreasing "
        "(param is the larger grid point)",
        "lambda_minus(r1)", "lambda_minus(r2)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem3.3-mono-plus", "supporting smoothness nondecreasing "
        "(param is the larger grid point)",
        "lambda_plus(r1)", "lambda_plus(r2)", (0.0, 1.0), "Lhs"),
    InequalityCheck(
        "lem3.3-convex-plus", "supporting smoothness discretely convex "
        "(divided differences at consecutive grid triples)",
        "slope(r1, r2)", "slope(r2, r3)", (0.0, 1.0), "Lhs",
        fixed_tolerance=1e-6),
    InequalityCheck(
        "lem3.3-plus-at-one", "supporting smoothness reaches 1 at full step",
        "|lambda_plus(1) - 1|", "0", (1.0, 1.0), "Lhs",
        fixed_tolerance=2e-3),
)

_REGISTRY_BY_ID = {c.check_id: c for c in REGISTRY}


def _tolerance(check_id: str, config: SampleConfig) -> float:
    if check_id == "lem3.3-cap":
        return config.feas_tol
    fixed = _REGISTRY_BY_ID[check_id].fixed_tolerance
    return config.slack if fixed is None else fixed


# ----------------------------------------------------------------------
# the main check run
# ----------------------------------------------------------------------

def run_checks(space: NormedSpace, r_grid,
               config: SampleConfig | None = None) -> InequalityReport:
    """Evaluate the whole inequality registry on one space.

    ``r_grid`` must be a strictly increasing grid inside ``[0, 1]``.
    Engine quantities are computed once per space on the union of all
    needed arguments; each registry check then contributes one entry per
    admissible grid parameter (Degenerate outside its domain).
    """
    config = config or SampleConfig()
    r = np.asarray(r_grid, dtype=np.float64)
    if r.ndim != 1 or r.size == 0 or np.any(np.diff(r) <= 0.0):
        raise ValueError("r_grid must be a nonempty strictly increasing grid")
    if r[0] < 0.0 or r[-1] > 1.0:
        raise ValueError("r_grid must lie within [0, 1]")

    lam_minus, lam_plus = lambda_curves(space, r, config)
    lm = dict(zip(r.tolist(), lam_minus.values.tolist()))
    lp = dict(zip(r.tolist(), lam_plus.values.tolist()))

    eps_union = np.unique(np.concatenate(
        [r, 2.0 * r, np.linspace(0.0, 2.0, 101)]))
    dcurve = delta_curve(space, eps_union, config)
    dl = dict(zip(dcurve.params.tolist(), dcurve.values.tolist()))

    tau_wanted = np.concatenate(
        [r, 0.5 * r, r / 6.0,
         np.minimum(2.0 * r[r <= 0.5 + 1e-12], 1.0)])
    rcurve = rho_curve(space, np.unique(tau_wanted), config)
    rh = dict(zip(rcurve.params.tolist(), rcurve.values.tolist()))

    beps_wanted = np.concatenate(
        [2.0 * r,
         np.minimum(3.0 * r[r <= 2.0 / 3.0 + 1e-12], 2.0),
         r[r <= 0.5 + 1e-12]])
    bcurve = rho_banas_curve(space, np.unique(beps_wanted), config)
    bb = dict(zip(bcurve.params.tolist(), bcurve.values.tolist()))

    xi_est = xi(space, config)
    xi_val = xi_est.value

    lm1 = lm.get(1.0)
    lp1 = lp.get(1.0)
    if lm1 is None or lp1 is None:
        m1, p1 = lambda_curves(space, np.array([1.0]), config)
        lm1, lp1 = float(m1.values[0]), float(p1.values[0])
    s_arg = max(0.5 * (1.0 - lm1), 0.0)
    m_s, p_s = lambda_curves(space, np.array([s_arg]), config)
    lm_s, lp_s = float(m_s.values[0]), float(p_s.values[0])

    entries: list[InequalityEntry] = []

    def tol(cid: str) -> float:
        return _tolerance(cid, config)

    for rv in r.tolist():
        entries.append(_entry("thm4.1-left", rv, dl[rv], lm[rv],
                              tol("thm4.1-left")))
        entries.append(_entry("thm4.1-right", rv, lm[rv], dl[2.0 * rv],
                              tol("thm4.1-right")))
    for rv in r.tolist():
        if rv <= 0.5 + 1e-12:
            entries.append(_entry("lem4.2", rv, lp[rv],
                                  rh[min(2.0 * rv, 1.0)], tol("lem4.2")))
        else:
            entries.append(_degenerate("lem4.2", rv, tol("lem4.2")))
        entries.append(_entry("lem4.3", rv, rh[0.5 * rv], lp[rv],
                              tol("lem4.3")))
    for rv in r.tolist():
        entries.append(_entry("thm5.1-left", rv, bb[2.0 * rv], lp[rv],
                              tol("thm5.1-left")))
        if rv <= 2.0 / 3.0 + 1e-12:
            entries.append(_entry("thm5.1-right", rv, lp[rv],
                                  2.0 * bb[min(3.0 * rv, 2.0)],
                                  tol("thm5.1-right")))
        else:
            entries.append(_degenerate("thm5.1-right", rv,
                                       tol("thm5.1-right")))
    for rv in r.tolist():
        if rv <= 0.5 + 1e-12:
            entries.append(_entry("cor5.2-left", rv, 0.5 * rh[rv / 6.0],
                                  bb[rv], tol("cor5.2-left")))
            entries.append(_entry("cor5.2-right", rv, bb[rv], rh[rv],
                                  tol("cor5.2-right")))
        else:
            entries.append(_degenerate("cor5.2-left", rv,
                                       tol("cor5.2-left")))
            entries.append(_degenerate("cor5.2-right", rv,
                                       tol("cor5.2-right")))
    for rv in r.tolist():
        href = hilbert_reference("lambda", rv)
        entries.append(_entry("cor5.3-left", rv, lm[rv], href,
                              tol("cor5.3-left")))
        entries.append(_entry("cor5.3-right", rv, href, lp[rv],
                              tol("cor5.3-right")))

    lower = 1.0 / max(1.0 - lm_s, 1e-9)
    upper = 1.0 / max(1.0 - lp_s, 1e-9)
    entries.append(_entry("thm6.1-left", s_arg, lower, xi_val,
                          tol("thm6.1-left")))
    entries.append(_entry("thm6.1-right", s_arg, xi_val, upper,
                          tol("thm6.1-right")))

    for rv in r.tolist():
        lhs_half = 1.0 - 0.5 * delta_inverse(dcurve, 1.0 - rv / 2.0)
        mid_xi = 1.0 - 0.5 * delta_inverse(dcurve, 1.0 - rv / xi_val)
        entries.append(_entry("lem6.3-left", rv, lhs_half, mid_xi,
                              tol("lem6.3-left")))
        entries.append(_entry("lem6.3-right", rv, mid_xi, lp[rv],
                              tol("lem6.3-right")))

    for rv in r.tolist():
        entries.append(_entry("lem3.3-order", rv, lm[rv], lp[rv],
                              tol("lem3.3-order")))
        entries.append(_entry("lem3.3-cap", rv, lp[rv], rv,
                              tol("lem3.3-cap")))
    for r1, r2 in zip(r.tolist(), r.tolist()[1:]):
        if r1 > 0.0 and r2 < 1.0:
            entries.append(_entry("lem3.3-scale", r2, (r2 / r1) * lm[r1],
                                  lm[r2], tol("lem3.3-scale")))
        else:
            entries.append(_degenerate("lem3.3-scale", r2,
                                       tol("lem3.3-scale")))
        if r2 < 1.0:
            entries.append(_entry("lem3.3-lipschitz", r2, lm[r2] - lm[r1],
                                  (r2 - r1) / (1.0 - r1),
                                  tol("lem3.3-lipschitz")))
            entries.append(_entry("lem3.3-mono-minus", r2, lm[r1], lm[r2],
                                  tol("lem3.3-mono-minus")))
        else:
            entries.append(_degenerate("lem3.3-lipschitz", r2,
                                       tol("lem3.3-lipschitz")))
            entries.append(_degenerate("lem3.3-mono-minus", r2,
                                       tol("lem3.3-mono-minus")))
        entries.append(_entry("lem3.3-mono-plus", r2, lp[r1], lp[r2],
                              tol("lem3.3-mono-plus")))
    for r1, r2, r3 in zip(r.tolist(), r.tolist()[1:], r.tolist()[2:]):
        s1 = (lp[r2] - lp[r1]) / (r2 - r1)
        s2 = (lp[r3] - lp[r2]) / (r3 - r2)
        entries.append(_entry("lem3.3-convex-plus", r2, s1, s2,
                              tol("lem3.3-convex-plus")))
    entries.append(_entry("lem3.3-plus-at-one", 1.0, abs(lp1 - 1.0), 0.0,
                          tol("lem3.3-plus-at-one")))

    return InequalityReport(space.spec_string, config.fingerprint,
                            tuple(entries))


# ----------------------------------------------------------------------
# independent brute-force oracle
# ----------------------------------------------------------------------

def brute_force_modulus(space2d: NormedSpace, kind: str, param: float,
                        resolution: int = 4096,
                        config: SampleConfig | None = None) -> float:
    """Exhaustively re-compute one modulus value on a plane norm.

    A dense double sweep over ``resolution`` sphere angles with no
    root-finding shortcuts: convexity restricts pairs to a distance band
    of width ``2 pi / resolution`` around ``param``; smoothness kinds
    sweep all pairs; supporting moduli scan the root parameter on a grid
    of step ``1/resolution``.  Deliberately redundant with the curve
    engines so the two can cross-validate.
    """
    config = config or SampleConfig()
    if space2d.dim != 2:
        raise SpaceError("the brute-force oracle operates on plane norms")
    if kind not in CURVE_KINDS:
        raise ValueError(f"unknown modulus kind {kind!r}")
    if resolution < 256:
        raise ValueError("resolution must be at least 256")
    param = float(param)
    desc = space2d.kernel_descriptor()
    step = 2.0 * math.pi / resolution
    thetas = np.unique(np.concatenate(
        [np.arange(resolution) * step,
         np.mod(space2d.special_angles(), 2.0 * math.pi)]))
    pts = unit_sphere_points(space2d, thetas)

    if kind in (DELTA, RHO_BANAS):
        eps = np.array([param])
        dmin, bmax = kernels.oracle_pair_stats(desc, pts, eps, step)
        return float(dmin[0]) if kind == DELTA else float(bmax[0])
    if kind == RHO:
        return float(kernels.oracle_rho_max(desc, pts, pts, param))

    xs, dirs = [], []
    for x in pts:
        fs = space2d.support_functionals(x, config)
        for q in fs.generators:
            t = np.array([-q[1], q[0]])
            xs.append(x)
            dirs.append(t)
            xs.append(x)
            dirs.append(-t)
    X = np.asarray(xs)
    D = np.asarray(dirs)
    Y = D / space2d.norm_many(D)[:, None]
    roots = kernels.oracle_lambda_scan(desc, X, Y, param, resolution)
    return float(roots.min() if kind == LAMBDA_MINUS else roots.max())


# ----------------------------------------------------------------------
# randomized property suite
# ----------------------------------------------------------------------

def _case_rng(seed: int, tag: int, case: int) -> np.random.Generator:
    """Counter-based stream: each case owns an independent generator."""
    return np.random.default_rng([seed, tag, case])


def _plane_basis(space: NormedSpace,
                 rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    if space.dim == 2:
        return np.array([1.0, 0.0]), np.array([0.0, 1.0])
    while True:
        A = rng.standard_normal((space.dim, 2))
        Q, R = np.linalg.qr(A)
        if min(abs(R[0, 0]), abs(R[1, 1])) >= 1e-9:
            return Q[:, 0] * math.copysign(1.0, R[0, 0]), \
                   Q[:, 1] * math.copysign(1.0, R[1, 1])


def _chord_intersection_case(space: NormedSpace, rng: np.random.Generator):
    """Sample two chords of a plane section that cross strictly inside.

    Returns ambient endpoint vectors and the crossing point; rejection
    sampling keeps drawing until the chords intersect transversally with
    both interpolation parameters strictly interior.
    """
    u, v = _plane_basis(space, rng)
    while True:
        ang = rng.uniform(0.0, 2.0 * math.pi, size=4)
        plane = np.stack([np.cos(ang), np.sin(ang)], axis=1)
        amb = plane[:, :1] * u + plane[:, 1:] * v
        norms = space.norm_many(amb)
        plane = plane / norms[:, None]
        amb = amb / norms[:, None]
        a2, b2, c2, d2 = plane
        A = np.stack([b2 - a2, c2 - d2], axis=1)
        det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
        if abs(det) < 1e-12:
            continue
        s, t = np.linalg.solve(A, c2 - a2)
        if not (1e-6 < s < 1.0 - 1e-6 and 1e-6 < t < 1.0 - 1e-6):
            continue
        a, b, c, d = amb
        x = a + s * (b - a)
        return a, b, c, d, x


def property_suite(space: NormedSpace, n_cases: int, seed: int,
                   config: SampleConfig | None = None) -> InequalityReport:
    """Randomized checks of three pointwise norm inequalities.

    * ``chord-intersection``: when chords ``ab`` and ``cd`` of the unit
      sphere cross at ``x``, ``min(|cx|, |xd|) <= max(|ax|, |xb|)``
      (tolerance 1e-9).
    * ``support-smoothness``: for any ``x, y`` with ``|y| <= |x|`` and a
      support functional ``p`` at ``x``,
      ``|x+y| <= |x| + <p,y> + 2 |x| rho(|y|/|x|)`` with ``rho`` the
      smoothness modulus (closed form on inner-product planes, sampled
      curve elsewhere; tolerance ``config.slack``).
    * ``normalized-difference``: ``|x/|x| - y/|y|| <= 2 |x-y| / |x||``
      (tolerance 1e-12).

    Each lemma contributes its worst-margin case as a Pass entry;
    violations become Fail entries carrying the sampled witness.
    """
    if n_cases < 1:
        raise ValueError("n_cases must be positive")
    config = config or SampleConfig()
    dim = space.dim
    entries: list[InequalityEntry] = []

    is_hilbert = isinstance(space, LpSpace) and space.p == 2.0
    rho_grid = None
    if not is_hilbert:
        rho_grid = rho_curve(space, np.linspace(0.0, 1.0, 33), config)

    def rho_at(ratio: float) -> float:
        if is_hilbert:
            return hilbert_reference("rho", ratio)
        return float(np.interp(ratio, rho_grid.params, rho_grid.values))

    # chord intersection -------------------------------------------------
    worst = None
    for i in range(n_cases):
        rng = _case_rng(seed, 22, i)
        a, b, c, d, x = _chord_intersection_case(space, rng)
        lhs = min(space.norm(c - x), space.norm(x - d))
        rhs = max(space.norm(a - x), space.norm(x - b))
        margin = rhs - lhs
        if margin < -1e-9:
            entries.append(_entry(
                "chord-intersection", i, lhs, rhs, 1e-9,
                witness={"a": a.tolist(), "b": b.tolist(),
                         "c": c.tolist(), "d": d.tolist(),
                         "x": x.tolist()}))
        if worst is None or margin < worst[1]:
            worst = (i, margin, lhs, rhs)
    entries.append(_entry("chord-intersection", worst[0], worst[2],
                          worst[3], 1e-9))

    # support-functional smoothness bound --------------------------------
    worst = None
    for i in range(n_cases):
        rng = _case_rng(seed, 23, i)
        x = rng.standard_normal(dim)
        nx = space.norm(x)
        if nx < 1e-9:
            continue
        x = x * (rng.uniform(0.5, 2.0) / nx)
        nx = space.norm(x)
        fs = space.support_functionals(x, config)
        p = fs.generators[int(rng.integers(len(fs.generators)))]
        y = rng.standard_normal(dim)
        ny = space.norm(y)
        if ny < 1e-9:
            continue
        y = y * (rng.uniform(0.0, 1.0) * nx / ny)
        ratio = space.norm(y) / nx
        lhs = space.norm(x + y)
        rhs = nx + float(p @ y) + 2.0 * nx * rho_at(ratio)
        margin = rhs - lhs
        if margin < -config.slack:
            entries.append(_entry(
                "support-smoothness", i, lhs, rhs, config.slack,
                witness={"x": x.tolist(), "y": y.tolist(),
                         "p": p.tolist()}))
        if worst is None or margin < worst[1]:
            worst = (i, margin, lhs, rhs)
    entries.append(_entry("support-smoothness", worst[0], worst[2],
                          worst[3], config.slack))

    # normalized difference ----------------------------------------------
    worst = None
    for i in range(n_cases):
        rng = _case_rng(seed, 24, i)
        x = rng.standard_normal(dim)
        y = rng.standard_normal(dim)
        nx, ny = space.norm(x), space.norm(y)
        if nx < 1e-9 or ny < 1e-9:
            continue
        lhs = space.norm(x / nx - y / ny)
        rhs = 2.0 * space.norm(x - y) / nx
        margin = rhs - lhs
        if margin < -1e-12:
            entries.append(_entry(
                "normalized-difference", i, lhs, rhs, 1e-12,
                witness={"x": x.tolist(), "y": y.tolist()}))
        if worst is None or margin < worst[1]:
            worst = (i, margin, lhs, rhs)
    entries.append(_entry("normalized-difference", worst[0], worst[2],
                          worst[3], 1e-12))

    return InequalityReport(space.spec_string, config.fingerprint,
                            tuple(entries))


# ----------------------------------------------------------------------
# conjecture exploration
# ----------------------------------------------------------------------

def explore_conjecture(p_values, config: SampleConfig | None = None) -> dict:
    """Gap between the projection constant of an lp plane and its upper
    bound, for each exponent.

    Purely informational: the sharpness of the upper bound for lp norms
    is an open question, so the rows record the numbers and make no
    pass/fail claim.  The gap vanishes for ``p = 2``, where the bound is
    attained.
    """
    config = config or SampleConfig()
    rows = []
    for p in p_values:
        p = float(p)
        if p <= 1.0:
            raise ValueError("exponents must be greater than 1")
        space = LpSpace(p, 2)
        est = xi(space, config)
        minus1, _ = lambda_curves(space, np.array([1.0]), config)
        lm1 = float(minus1.values[0])
        s_arg = max(0.5 * (1.0 - lm1), 0.0)
        _, plus_s = lambda_curves(space, np.array([s_arg]), config)
        lp_s = float(plus_s.values[0])
        upper = 1.0 / max(1.0 - lp_s, 1e-9)
        rows.append({
            "p": p,
            "xi": float(est.value),
            "upper_bound": float(upper),
            "gap": float(upper - est.value),
        })
    return {
        "rows": rows,
        "config_fingerprint": config.fingerprint,
        "note": "informational only; the gap is recorded, not asserted",
    }
