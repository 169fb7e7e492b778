"""Shared fixtures: fast sampling configs and seeded random polygons."""

from __future__ import annotations

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from banachmoduli import PolygonSpace, SampleConfig


def make_seeded_polygon(seed: int, half_points: int = 7) -> PolygonSpace:
    """Centrally symmetric random polygon: hull of ``±`` a Gaussian cloud."""
    rng = np.random.default_rng(seed)
    half = rng.standard_normal((half_points, 2))
    pts = np.vstack([half, -half])
    hull = ConvexHull(pts)
    return PolygonSpace(pts[hull.vertices])


@pytest.fixture(scope="session")
def polygon_factory():
    return make_seeded_polygon


@pytest.fixture(scope="session")
def fast_config() -> SampleConfig:
    """Reduced sampling for unit tests; accuracy ~1e-4 instead of ~1e-6."""
    return SampleConfig(angular_samples=512, section_samples=8)
