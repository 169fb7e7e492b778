"""Numerical moduli of convexity and smoothness for finite-dimensional
normed spaces.

The package computes five modulus curves (convexity, smoothness, the
ball-packing smoothness variant, and the supporting convexity /
smoothness pair built from supporting-hyperplane roots), estimates the
hyperplane metric-projection constant with explicit witnesses, and
verifies the inequality chains connecting all of these quantities on a
registry of checks with honest one-sided tolerances.
"""

from __future__ import annotations

from .config import SampleConfig
from .moduli import (
    CURVE_KINDS,
    DELTA,
    HILBERT_KINDS,
    LAMBDA_MINUS,
    LAMBDA_PLUS,
    RHO,
    RHO_BANAS,
    ModulusCurve,
    XiEstimate,
    delta_curve,
    delta_inverse,
    hilbert_reference,
    lambda_curve,
    lambda_curves,
    lambda_local,
    lambda_root,
    modulus_curve,
    rho_banas_curve,
    rho_curve,
    xi,
)
from .spaces import (
    LpSpace,
    NormedSpace,
    PolygonSpace,
    SectionSpace,
    SpaceError,
    SpecParseError,
    SupportFunctionalSet,
    WeightedLpSpace,
    central_section,
    is_quasiorthogonal,
    make_quasiorthogonal,
    metric_projection,
    parse_space,
    unit_sphere_points,
)
from .verify import (
    REGISTRY,
    InequalityCheck,
    InequalityEntry,
    InequalityReport,
    brute_force_modulus,
    explore_conjecture,
    property_suite,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "CURVE_KINDS",
    "DELTA",
    "HILBERT_KINDS",
    "LAMBDA_MINUS",
    "LAMBDA_PLUS",
    "RHO",
    "RHO_BANAS",
    "REGISTRY",
    "InequalityCheck",
    "InequalityEntry",
    "InequalityReport",
    "LpSpace",
    "ModulusCurve",
    "NormedSpace",
    "PolygonSpace",
    "SampleConfig",
    "SectionSpace",
    "SpaceError",
    "SpecParseError",
    "SupportFunctionalSet",
    "WeightedLpSpace",
    "XiEstimate",
    "brute_force_modulus",
    "central_section",
    "delta_curve",
    "delta_inverse",
    "explore_conjecture",
    "hilbert_reference",
    "is_quasiorthogonal",
    "lambda_curve",
    "lambda_curves",
    "lambda_local",
    "lambda_root",
    "make_quasiorthogonal",
    "metric_projection",
    "modulus_curve",
    "parse_space",
    "property_suite",
    "rho_banas_curve",
    "rho_curve",
    "run_checks",
    "unit_sphere_points",
    "xi",
    "__version__",
]
