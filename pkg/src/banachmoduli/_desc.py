"""Flat norm descriptors consumed by the numeric kernels.

A :class:`KernelDesc` reduces every two-dimensional working norm (native or
a central plane section of a higher-dimensional space) to one of four base
evaluation rules applied after an affine embedding of plane coordinates:

======  =============================  ==========================
kind    base rule on a row ``z``       fields used
======  =============================  ==========================
0       ``(sum |z_i|^p)^(1/p)``        ``p``
1       ``max |z_i|``                  --
2       ``(sum w_i |z_i|^p)^(1/p)``    ``p``, ``weights``
3       ``max_j <rows_j, z>``          ``rows`` (scaled edge normals)
======  =============================  ==========================

``emb`` has shape ``(2, D)``; a plane point ``(a, b)`` is evaluated at
``a * emb[0] + b * emb[1]`` in the base space.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

KIND_LP = 0
KIND_SUP = 1
KIND_WLP = 2
KIND_POLYGON = 3


class KernelDesc(NamedTuple):
    kind: int
    p: float
    weights: np.ndarray
    rows: np.ndarray
    emb: np.ndarray


def make_desc(kind: int, p: float, weights, rows, emb) -> KernelDesc:
    """Build a descriptor with C-contiguous float64 arrays."""
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    rows = np.ascontiguousarray(rows, dtype=np.float64)
    emb = np.ascontiguousarray(emb, dtype=np.float64)
    if emb.ndim != 2 or emb.shape[0] != 2:
        raise ValueError("emb must have shape (2, D)")
    if rows.size and (rows.ndim != 2 or rows.shape[1] != 2):
        raise ValueError("rows must have shape (K, 2)")
    return KernelDesc(int(kind), float(p), weights, rows, emb)
