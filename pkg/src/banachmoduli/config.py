"""Sampling configuration shared by every numerical routine in the package."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class SampleConfig:
    """Knobs controlling discretization, tolerances and reproducibility.

    Attributes
    ----------
    angular_samples : int
        Number of uniformly spaced angles used for unit-sphere sweeps in a
        plane.  Sweep grids are augmented with the exact corner angles of
        polyhedral norms, so this only controls the uniform part.
    subdifferential_samples : int
        Number of interior samples returned for a non-singleton set of
        support functionals, in addition to its extreme points.
    root_tol : float
        Absolute tolerance for one-dimensional root finding and
        minimization (bisection / golden-section).
    feas_tol : float
        Feasibility tolerance for membership tests (support functional
        attainment, quasiorthogonality certificates, unit-norm checks).
    slack : float
        Default tolerance granted to inequality checks in the direction
        where discretization bias can produce spurious violations.
    seed : int
        Seed for every randomized sampler (random sections, property-test
        case generation).  Identical seeds give bit-identical runs.
    section_samples : int
        Number of random central plane sections used to reduce a space of
        dimension >= 3 to two-dimensional computations.
    """

    angular_samples: int = 2048
    subdifferential_samples: int = 8
    root_tol: float = 1e-10
    feas_tol: float = 1e-9
    slack: float = 5e-3
    seed: int = 0
    section_samples: int = 64

    def __post_init__(self) -> None:
        if self.angular_samples < 16:
            raise ValueError("angular_samples must be at least 16")
        if self.angular_samples % 4 != 0:
            raise ValueError("angular_samples must be a multiple of 4")
        if self.subdifferential_samples < 0:
            raise ValueError("subdifferential_samples must be nonnegative")
        if not 0 < self.root_tol < 1e-2:
            raise ValueError("root_tol out of range")
        if not 0 < self.feas_tol < 1e-2:
            raise ValueError("feas_tol out of range")
        if not 0 <= self.slack < 1:
            raise ValueError("slack out of range")
        if self.section_samples < 1:
            raise ValueError("section_samples must be positive")

    @property
    def fingerprint(self) -> str:
        """Deterministic hex digest identifying this configuration."""
        payload = json.dumps(asdict(self), sort_keys=True)
        return hashlib.md5(payload.encode("ascii")).hexdigest()[:16]
