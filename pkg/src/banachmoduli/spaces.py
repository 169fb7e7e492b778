"""Normed-space descriptors and first-order geometry.

This module provides the finite-dimensional working spaces (lp / weighted
lp / sup-norm / polygonal plane norms and central plane sections of any of
them) together with the first-order operations the moduli engines are
built from: norm evaluation, dual norms, sets of support functionals,
Birkhoff-James quasiorthogonality, metric projection onto a hyperplane
through the origin, and a small text format for naming spaces on the
command line.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import kernels
from .config import SampleConfig
from .kernels import (
    KIND_LP,
    KIND_POLYGON,
    KIND_SUP,
    KIND_WLP,
    KernelDesc,
    make_desc,
)

MAX_DIM = 8

_EMPTY_W = np.zeros(0)
_EMPTY_ROWS = np.zeros((0, 2))

# Inverse golden ratio, the contraction factor of golden-section search.
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class SpaceError(ValueError):
    """Invalid geometric data (dimensions, degenerate inputs, bad certificates)."""


class SpecParseError(SpaceError):
    """A space specification string could not be parsed."""


def as_vector(x, dim: int) -> np.ndarray:
    """Validate and convert ``x`` to a float64 vector of length ``dim``."""
    v = np.asarray(x, dtype=np.float64)
    if v.shape != (dim,):
        raise SpaceError(f"expected a vector of dimension {dim}, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise SpaceError("vector has non-finite entries")
    return v


def _rot90(x: np.ndarray) -> np.ndarray:
    return np.array([-x[1], x[0]])


@dataclass(frozen=True)
class SupportFunctionalSet:
    """Generators of the set of norm-one functionals attaining the norm at a point.

    ``J(x) = {p : <p, x> = |x|, dual-norm(p) = 1}`` is convex; its full
    extent is the convex hull of ``generators``.  ``exact`` is True when
    the generators include the exact extreme points of the set (smooth
    points, polyhedral corners, plane sections of either), and False when
    they merely sample a larger face.
    """

    anchor: np.ndarray
    generators: tuple[np.ndarray, ...]
    exact: bool

    def validate(self, space: NormedSpace, config: SampleConfig) -> None:
        """Check attainment and unit dual norm of every generator."""
        nx = space.norm(self.anchor)
        for g in self.generators:
            attained = float(np.dot(g, self.anchor))
            if abs(attained - nx) > config.feas_tol * (1.0 + nx):
                raise SpaceError("support functional does not attain the norm")
            if abs(space.dual_norm(g) - 1.0) > 10.0 * config.feas_tol:
                raise SpaceError("support functional is not on the dual sphere")


def _interior_mixtures(extremes: list[np.ndarray], n_samples: int) -> list[np.ndarray]:
    """Deterministic interior points of the convex hull of ``extremes``."""
    if n_samples <= 0 or len(extremes) < 2:
        return []
    if len(extremes) == 2:
        ts = np.linspace(0.0, 1.0, n_samples + 2)[1:-1]
        return [(1.0 - t) * extremes[0] + t * extremes[1] for t in ts]
    k = len(extremes)
    out = []
    for s in range(n_samples):
        w = np.array([1.0 + ((s + 1) * (j + 1)) % (k + 1) for j in range(k)])
        w /= w.sum()
        out.append(sum(wj * ej for wj, ej in zip(w, extremes)))
    return out


def _segment_extremes(cands: list[np.ndarray], anchor_unit: np.ndarray,
                      tol: float) -> list[np.ndarray]:
    """Extreme points of coplanar support functionals at a plane point.

    All candidates lie on the line ``{q : <q, anchor_unit> = 1}``, so the
    set they generate is a segment; its endpoints are found by projecting
    onto a direction of that line.
    """
    arr = np.asarray(cands)
    s = arr @ _rot90(anchor_unit)
    i_lo, i_hi = int(np.argmin(s)), int(np.argmax(s))
    if s[i_hi] - s[i_lo] <= tol:
        return [0.5 * (arr[i_lo] + arr[i_hi])]
    return [arr[i_lo], arr[i_hi]]


class NormedSpace(ABC):
    """A finite-dimensional real normed space given as an evaluation oracle."""

    dim: int

    # ------------------------------------------------------------------
    # norm evaluation
    # ------------------------------------------------------------------
    @abstractmethod
    def norm_many(self, X: np.ndarray) -> np.ndarray:
        """Norms of the rows of ``X`` (shape ``(m, dim)``)."""

    def norm(self, x) -> float:
        """Norm of a single vector."""
        v = as_vector(x, self.dim)
        return float(self.norm_many(v[None, :])[0])

    # ------------------------------------------------------------------
    # duality
    # ------------------------------------------------------------------
    @abstractmethod
    def dual_norm(self, q) -> float:
        """Norm of the functional ``q`` in the dual space."""

    @abstractmethod
    def support_functionals(self, x, config: SampleConfig) -> SupportFunctionalSet:
        """Generators of the support functionals at ``x`` (``x != 0``)."""

    # ------------------------------------------------------------------
    # structure
    # ------------------------------------------------------------------
    @property
    @abstractmethod
    def spec_string(self) -> str:
        """Canonical specification string identifying this space."""

    def section(self, u, v) -> "SectionSpace":
        """Central plane section spanned by ``u`` and ``v``."""
        return SectionSpace(self, u, v)

    def special_angles(self) -> np.ndarray:
        """Angles of non-smooth sphere points (two-dimensional spaces only)."""
        return np.zeros(0)

    def kernel_descriptor(self) -> KernelDesc:
        """Flat descriptor for the numeric kernels (two-dimensional spaces)."""
        if self.dim != 2:
            raise SpaceError("kernel descriptors exist only for plane norms")
        kind, p, w, rows = self._kernel_fields()
        return make_desc(kind, p, w, rows, np.eye(2))

    @abstractmethod
    def _kernel_fields(self) -> tuple[int, float, np.ndarray, np.ndarray]:
        """(kind, p, weights, rows) for the kernel base evaluation rule."""

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"<{type(self).__name__} {self.spec_string}>"


class LpSpace(NormedSpace):
    """R^dim under the lp norm, ``p`` in ``[1, inf]`` (``inf`` = sup norm)."""

    def __init__(self, p: float, dim: int):
        if not (dim >= 2 and dim <= MAX_DIM):
            raise SpaceError(f"dimension must be in [2, {MAX_DIM}]")
        if not (p == math.inf or (math.isfinite(p) and 1.0 <= p <= 256.0)):
            raise SpaceError("p must be in [1, 256] or inf")
        self.p = float(p)
        self.dim = int(dim)

    @property
    def spec_string(self) -> str:
        if self.p == math.inf:
            return f"linf:{self.dim}"
        if self.p == 1.0:
            return f"l1:{self.dim}"
        if self.p == 2.0:
            return f"l2:{self.dim}"
        return f"lp:{self.p:g}:{self.dim}"

    def _kernel_fields(self):
        if self.p == math.inf:
            return KIND_SUP, 0.0, _EMPTY_W, _EMPTY_ROWS
        return KIND_LP, self.p, _EMPTY_W, _EMPTY_ROWS

    def norm_many(self, X):
        kind, p, w, rows = self._kernel_fields()
        return kernels.base_norm_rows(kind, p, w, rows, X)

    def dual_norm(self, q):
        q = as_vector(q, self.dim)
        if self.p == 1.0:
            return float(np.abs(q).max())
        if self.p == math.inf:
            return float(np.abs(q).sum())
        pc = self.p / (self.p - 1.0)
        return float(kernels.base_norm_rows(KIND_LP, pc, _EMPTY_W, _EMPTY_ROWS,
                                            q[None, :])[0])

    def support_functionals(self, x, config):
        x = as_vector(x, self.dim)
        nx = self.norm(x)
        if nx <= 0.0:
            raise SpaceError("support functionals are undefined at the origin")
        scale = np.abs(x).max()
        if self.p == math.inf:
            active = np.nonzero(np.abs(x) >= nx * (1.0 - config.feas_tol))[0]
            extremes = []
            for i in active:
                e = np.zeros(self.dim)
                e[i] = math.copysign(1.0, x[i])
                extremes.append(e)
            return self._finish(x, extremes, config)
        if self.p == 1.0:
            zeros = np.nonzero(np.abs(x) <= config.feas_tol * scale)[0]
            base = np.sign(x)
            base[zeros] = 0.0
            extremes = []
            for signs in itertools.product((-1.0, 1.0), repeat=len(zeros)):
                g = base.copy()
                g[zeros] = signs
                extremes.append(g)
            return self._finish(x, extremes, config)
        g = np.sign(x) * np.abs(x) ** (self.p - 1.0) / nx ** (self.p - 1.0)
        return SupportFunctionalSet(x, (g,), True)

    def _finish(self, x, extremes, config):
        if self.dim == 2 and len(extremes) > 1:
            extremes = _segment_extremes(extremes, x / self.norm(x),
                                         config.feas_tol)
        gens = extremes + _interior_mixtures(extremes,
                                             config.subdifferential_samples)
        return SupportFunctionalSet(x, tuple(gens), True)

    def special_angles(self):
        if self.dim != 2:
            return np.zeros(0)
        if self.p == 1.0:
            return np.array([0.0, 0.5, 1.0, 1.5]) * math.pi
        if self.p == math.inf:
            return np.array([0.25, 0.75, 1.25, 1.75]) * math.pi
        return np.zeros(0)


class WeightedLpSpace(NormedSpace):
    """R^dim under ``(sum w_i |x_i|^p)^(1/p)`` with positive weights."""

    def __init__(self, p: float, weights):
        w = np.asarray(weights, dtype=np.float64)
        if w.ndim != 1 or not (2 <= w.size <= MAX_DIM):
            raise SpaceError(f"need between 2 and {MAX_DIM} weights")
        if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
            raise SpaceError("weights must be positive and finite")
        if not (math.isfinite(p) and 1.0 <= p <= 256.0):
            raise SpaceError("p must be a finite real in [1, 256]")
        self.p = float(p)
        self.weights = w
        self.dim = int(w.size)

    @property
    def spec_string(self) -> str:
        ws = ",".join(f"{w:g}" for w in self.weights)
        return f"wlp:{self.p:g}:{ws}"

    def _kernel_fields(self):
        return KIND_WLP, self.p, self.weights, _EMPTY_ROWS

    def norm_many(self, X):
        return kernels.base_norm_rows(KIND_WLP, self.p, self.weights,
                                      _EMPTY_ROWS, X)

    def dual_norm(self, q):
        q = as_vector(q, self.dim)
        scaled = q / self.weights ** (1.0 / self.p)
        if self.p == 1.0:
            return float(np.abs(scaled).max())
        pc = self.p / (self.p - 1.0)
        return float(kernels.base_norm_rows(KIND_LP, pc, _EMPTY_W, _EMPTY_ROWS,
                                            scaled[None, :])[0])

    def support_functionals(self, x, config):
        x = as_vector(x, self.dim)
        nx = self.norm(x)
        if nx <= 0.0:
            raise SpaceError("support functionals are undefined at the origin")
        if self.p > 1.0:
            g = (self.weights * np.sign(x) * np.abs(x) ** (self.p - 1.0)
                 / nx ** (self.p - 1.0))
            return SupportFunctionalSet(x, (g,), True)
        scale = np.abs(x).max()
        zeros = np.nonzero(np.abs(x) <= config.feas_tol * scale)[0]
        base = self.weights * np.sign(x)
        base[zeros] = 0.0
        extremes = []
        for signs in itertools.product((-1.0, 1.0), repeat=len(zeros)):
            g = base.copy()
            g[zeros] = np.asarray(signs) * self.weights[zeros]
            extremes.append(g)
        if self.dim == 2 and len(extremes) > 1:
            extremes = _segment_extremes(extremes, x / nx, config.feas_tol)
        gens = extremes + _interior_mixtures(extremes,
                                             config.subdifferential_samples)
        return SupportFunctionalSet(x, tuple(gens), True)

    def special_angles(self):
        if self.dim != 2 or self.p > 1.0:
            return np.zeros(0)
        return np.array([0.0, 0.5, 1.0, 1.5]) * math.pi


class PolygonSpace(NormedSpace):
    """Plane norm whose unit ball is a centrally symmetric convex polygon.

    The gauge of a point is computed from the polygon's edges: each edge
    lies on a line ``<n, z> = c`` with outward normal ``n`` and offset
    ``c > 0``, and the gauge is ``max_j <n_j/c_j, z>`` -- the closed form
    of intersecting the ray from the origin with the edge it crosses.
    """

    dim = 2

    def __init__(self, vertices):
        V = np.asarray(vertices, dtype=np.float64)
        if V.ndim != 2 or V.shape[1] != 2 or V.shape[0] < 4:
            raise SpaceError("need at least 4 plane vertices")
        if not np.all(np.isfinite(V)):
            raise SpaceError("vertices must be finite")
        if V.shape[0] % 2 != 0:
            raise SpaceError("a centrally symmetric polygon has evenly many vertices")
        W = np.roll(V, -1, axis=0)
        area2 = float((V[:, 0] * W[:, 1] - V[:, 1] * W[:, 0]).sum())
        if area2 < 0.0:
            V = V[::-1].copy()
        # canonical cycle start, so the same polygon always produces the
        # same vertex array (and hence the same identity string) no matter
        # how the input list was rotated or oriented
        start = int(np.lexsort((V[:, 1], V[:, 0]))[0])
        V = np.roll(V, -start, axis=0)
        edges = np.roll(V, -1, axis=0) - V
        nxt = np.roll(edges, -1, axis=0)
        crosses = edges[:, 0] * nxt[:, 1] - edges[:, 1] * nxt[:, 0]
        scale = float(np.abs(V).max())
        if np.any(crosses <= 1e-12 * scale * scale):
            raise SpaceError("vertices must be in strictly convex position")
        n = V.shape[0]
        if not np.allclose(V, -np.roll(V, n // 2, axis=0),
                           atol=1e-9 * scale, rtol=0.0):
            raise SpaceError("vertex list is not centrally symmetric")
        normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        offsets = np.einsum("ij,ij->i", normals, V)
        if np.any(offsets <= 1e-12 * scale * scale):
            raise SpaceError("origin is not strictly inside the polygon")
        self.vertices = V
        self.rows = normals / offsets[:, None]

    @property
    def spec_string(self) -> str:
        digest = hashlib.md5(self.vertices.tobytes()).hexdigest()[:12]
        return f"poly2d:{len(self.vertices)}v:{digest}"

    def _kernel_fields(self):
        return KIND_POLYGON, 0.0, _EMPTY_W, self.rows

    def norm_many(self, X):
        return kernels.base_norm_rows(KIND_POLYGON, 0.0, _EMPTY_W, self.rows, X)

    def dual_norm(self, q):
        q = as_vector(q, 2)
        return float((self.vertices @ q).max())

    def support_functionals(self, x, config):
        x = as_vector(x, 2)
        nx = self.norm(x)
        if nx <= 0.0:
            raise SpaceError("support functionals are undefined at the origin")
        xu = x / nx
        vals = self.rows @ xu
        active = np.nonzero(vals >= 1.0 - config.feas_tol)[0]
        cands = [self.rows[i].copy() for i in active]
        extremes = _segment_extremes(cands, xu, config.feas_tol)
        gens = extremes + _interior_mixtures(extremes,
                                             config.subdifferential_samples)
        return SupportFunctionalSet(x, tuple(gens), True)

    def special_angles(self):
        return np.mod(np.arctan2(self.vertices[:, 1], self.vertices[:, 0]),
                      2.0 * math.pi)


class SectionSpace(NormedSpace):
    """Two-dimensional central section ``span{u, v}`` of a base space.

    Plane coordinates ``(a, b)`` represent the base vector ``a u + b v``;
    the norm is inherited from the base space.  Nested sections are
    flattened so the evaluation chain stays one embedding deep.
    """

    dim = 2

    def __init__(self, base: NormedSpace, u, v):
        u = as_vector(u, base.dim)
        v = as_vector(v, base.dim)
        if isinstance(base, SectionSpace):
            u, v = u @ base.basis, v @ base.basis
            base = base.base
        gram = np.array([[u @ u, u @ v], [u @ v, v @ v]])
        det = float(np.linalg.det(gram))
        scale = float(max(u @ u, v @ v))
        if scale <= 0.0 or det <= 1e-12 * scale * scale:
            raise SpaceError("section directions must be linearly independent")
        self.base = base
        self.basis = np.stack([u, v])

    @property
    def spec_string(self) -> str:
        fmt = lambda w: "[" + ",".join(f"{c:.17g}" for c in w) + "]"
        return (f"section({self.base.spec_string};"
                f"u={fmt(self.basis[0])};v={fmt(self.basis[1])})")

    def _kernel_fields(self):
        return self.base._kernel_fields()

    def kernel_descriptor(self) -> KernelDesc:
        kind, p, w, rows = self.base._kernel_fields()
        return make_desc(kind, p, w, rows, self.basis)

    def norm_many(self, X):
        return kernels.gauge_many(self.kernel_descriptor(), X)

    def dual_norm(self, q):
        q = as_vector(q, 2)
        thetas = np.arange(1024) * (2.0 * math.pi / 1024)
        pts = unit_sphere_points(self, thetas)
        vals = pts @ q
        i = int(np.argmax(vals))
        best_t, best_v = thetas[i], float(vals[i])
        half = 2.0 * math.pi / 1024
        for _ in range(4):
            grid = best_t + np.linspace(-half, half, 33)
            vals = unit_sphere_points(self, grid) @ q
            i = int(np.argmax(vals))
            best_t, best_v = grid[i], float(vals[i])
            half /= 16.0
        return best_v

    def support_functionals(self, x, config):
        x = as_vector(x, 2)
        nx = self.norm(x)
        if nx <= 0.0:
            raise SpaceError("support functionals are undefined at the origin")
        z = x @ self.basis
        base_set = self.base.support_functionals(z, config)
        cands = [self.basis @ P for P in base_set.generators]
        extremes = _segment_extremes(cands, x / nx, config.feas_tol)
        gens = extremes + _interior_mixtures(extremes,
                                             config.subdifferential_samples)
        return SupportFunctionalSet(x, tuple(gens), base_set.exact)


# ----------------------------------------------------------------------
# module-level operations
# ----------------------------------------------------------------------

def unit_sphere_points(space: NormedSpace, thetas: np.ndarray) -> np.ndarray:
    """Unit-sphere points of a plane norm in directions ``thetas``."""
    if space.dim != 2:
        raise SpaceError("sphere sweeps require a two-dimensional space")
    P = np.stack([np.cos(thetas), np.sin(thetas)], axis=1)
    return P / space.norm_many(P)[:, None]


def sphere_point(space: NormedSpace, theta: float) -> np.ndarray:
    """Unit-sphere point of a plane norm in direction ``theta``."""
    return unit_sphere_points(space, np.array([float(theta)]))[0]


def golden_section_min(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Minimize a scalar unimodal function on ``[a, b]``.

    Returns ``(argmin, min)``.  Standard golden-section bracketing; the
    interval shrinks by the inverse golden ratio per step.
    """
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    return (x1, f1) if f1 <= f2 else (x2, f2)


def is_quasiorthogonal(space: NormedSpace, y, x,
                       config: SampleConfig | None = None) -> bool:
    """Whether ``min_t |x + t y| >= |x|`` (Birkhoff-James: x is orthogonal to y).

    The minimum of the convex map ``t -> |x + t y|`` is located by
    golden-section search over ``|t| <= 2 |x| / |y|``, a window that always
    contains it since ``|x + t y| >= |t| |y| - |x| > |x|`` outside.
    """
    config = config or SampleConfig()
    x = as_vector(x, space.dim)
    y = as_vector(y, space.dim)
    nx, ny = space.norm(x), space.norm(y)
    if ny <= 0.0:
        raise SpaceError("y must be nonzero")
    window = 2.0 * nx / ny
    _, fmin = golden_section_min(lambda t: space.norm(x + t * y),
                                 -window, window, config.root_tol)
    return fmin >= nx - config.feas_tol * (1.0 + nx)


def make_quasiorthogonal(space: NormedSpace, x, p, w,
                         config: SampleConfig | None = None) -> np.ndarray:
    """Unit vector ``y`` with ``<p, y> = 0`` built from the seed direction ``w``.

    ``p`` must be a support functional at ``x``; annihilating it certifies
    quasiorthogonality of the result to ``x``.

    Parameters
    ----------
    x : vector, nonzero anchor point.
    p : vector, member of the support functional set at ``x``.
    w : vector, any direction not parallel to ``x``.
    """
    config = config or SampleConfig()
    x = as_vector(x, space.dim)
    p = as_vector(p, space.dim)
    w = as_vector(w, space.dim)
    nx = space.norm(x)
    if nx <= 0.0:
        raise SpaceError("x must be nonzero")
    attained = float(p @ x)
    if abs(attained - nx) > config.feas_tol * (1.0 + nx):
        raise SpaceError("p does not attain the norm at x")
    if abs(space.dual_norm(p) - 1.0) > 10.0 * config.feas_tol:
        raise SpaceError("p is not on the dual unit sphere")
    y_raw = w - (float(p @ w) / attained) * x
    ny = space.norm(y_raw)
    if ny <= config.feas_tol * space.norm(w):
        raise SpaceError("w is parallel to x")
    return y_raw / ny


def metric_projection(space: NormedSpace, x, y, p,
                      config: SampleConfig | None = None) -> np.ndarray:
    """Metric projection of ``x`` onto the hyperplane ``{v : <p, v> = 0}``.

    ``y`` must be a unit vector and ``p`` a support functional at ``y``;
    then ``x - <p, x> y`` is a nearest point of the hyperplane.
    """
    config = config or SampleConfig()
    x = as_vector(x, space.dim)
    y = as_vector(y, space.dim)
    p = as_vector(p, space.dim)
    ny = space.norm(y)
    if abs(ny - 1.0) > config.feas_tol:
        raise SpaceError("y must be a unit vector")
    if abs(float(p @ y) - ny) > config.feas_tol * 2.0:
        raise SpaceError("p does not attain the norm at y")
    if abs(space.dual_norm(p) - 1.0) > 10.0 * config.feas_tol:
        raise SpaceError("p is not on the dual unit sphere")
    return x - float(p @ x) * y


def central_section(space: NormedSpace, u, v) -> SectionSpace:
    """Plane section of ``space`` through the origin spanned by ``u, v``."""
    return SectionSpace(space, u, v)


# ----------------------------------------------------------------------
# specification mini-language
# ----------------------------------------------------------------------

def parse_space(text: str, base_dir: str | Path | None = None) -> NormedSpace:
    """Parse a space specification string.

    Accepted forms::

        l1:<dim>      l2:<dim>      linf:<dim>      lp:<p>:<dim>
        wlp:<p>:<w1,w2,...>         poly2d:@<path-to-json>

    The polygon file holds ``{"vertices": [[x, y], ...]}``.
    """
    text = text.strip()
    parts = text.split(":")
    try:
        if parts[0] == "l1" and len(parts) == 2:
            return LpSpace(1.0, int(parts[1]))
        if parts[0] == "l2" and len(parts) == 2:
            return LpSpace(2.0, int(parts[1]))
        if parts[0] == "linf" and len(parts) == 2:
            return LpSpace(math.inf, int(parts[1]))
        if parts[0] == "lp" and len(parts) == 3:
            return LpSpace(float(parts[1]), int(parts[2]))
        if parts[0] == "wlp" and len(parts) == 3:
            weights = [float(w) for w in parts[2].split(",")]
            return WeightedLpSpace(float(parts[1]), weights)
        if parts[0] == "poly2d" and len(parts) == 2 and parts[1].startswith("@"):
            path = Path(parts[1][1:])
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            data = json.loads(path.read_text())
            if not isinstance(data, dict) or "vertices" not in data:
                raise SpecParseError(f"{path}: expected a JSON object with 'vertices'")
            return PolygonSpace(data["vertices"])
    except SpecParseError:
        raise
    except (ValueError, OSError) as exc:
        # covers SpaceError subclasses too: a spec string that names an
        # unbuildable space is malformed from the caller's point of view
        raise SpecParseError(f"invalid space spec {text!r}: {exc}") from exc
    raise SpecParseError(f"invalid space spec {text!r}")
