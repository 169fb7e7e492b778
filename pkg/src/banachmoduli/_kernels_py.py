"""Pure-numpy implementation of the numeric kernels.

This backend is always available; the compiled extension
(:mod:`banachmoduli._kernels_cy`) provides the same functions with
identical semantics.  Heavy pair sweeps are chunked over rows to keep the
working set bounded.
"""

from __future__ import annotations

import numpy as np

from ._desc import KIND_LP, KIND_POLYGON, KIND_SUP, KIND_WLP, KernelDesc

BACKEND = "python"

# Rows processed per chunk in quadratic sweeps; chosen so a chunk of pair
# coordinates stays within a few tens of megabytes.
_CHUNK = 1 << 21


def base_norm_rows(kind: int, p: float, weights: np.ndarray, rows: np.ndarray,
                   Z: np.ndarray) -> np.ndarray:
    """Norm of every row of ``Z`` under the base rule ``kind``."""
    Z = np.asarray(Z, dtype=np.float64)
    if kind == KIND_LP:
        if p == 1.0:
            return np.abs(Z).sum(axis=1)
        if p == 2.0:
            return np.sqrt(np.einsum("ij,ij->i", Z, Z))
        A = np.abs(Z)
        m = A.max(axis=1)
        safe = np.where(m > 0.0, m, 1.0)
        s = ((A / safe[:, None]) ** p).sum(axis=1)
        return m * s ** (1.0 / p)
    if kind == KIND_SUP:
        return np.abs(Z).max(axis=1)
    if kind == KIND_WLP:
        if p == 1.0:
            return (weights * np.abs(Z)).sum(axis=1)
        if p == 2.0:
            return np.sqrt((weights * Z * Z).sum(axis=1))
        A = np.abs(Z)
        m = A.max(axis=1)
        safe = np.where(m > 0.0, m, 1.0)
        s = (weights * (A / safe[:, None]) ** p).sum(axis=1)
        return m * s ** (1.0 / p)
    if kind == KIND_POLYGON:
        return (Z @ rows.T).max(axis=1)
    raise ValueError(f"unknown kernel kind {kind}")


def gauge_many(desc: KernelDesc, P: np.ndarray) -> np.ndarray:
    """Norm of every plane point (row of ``P``, shape (m, 2))."""
    P = np.asarray(P, dtype=np.float64)
    return base_norm_rows(desc.kind, desc.p, desc.weights, desc.rows,
                          P @ desc.emb)


def _row_chunks(n_rows: int, n_cols: int):
    step = max(1, _CHUNK // max(1, n_cols))
    for i0 in range(0, n_rows, step):
        yield i0, min(n_rows, i0 + step)


def rho_pair_max(desc: KernelDesc, X: np.ndarray, D: np.ndarray,
                 tau: float) -> tuple[float, int, int]:
    """Maximum of (|x_i + tau d_j| + |x_i - tau d_j|)/2 - 1 with its argmax."""
    n, m = len(X), len(D)
    best = -np.inf
    bi = bj = 0
    for i0, i1 in _row_chunks(n, m):
        A = X[i0:i1, None, :] + tau * D[None, :, :]
        B = X[i0:i1, None, :] - tau * D[None, :, :]
        na = gauge_many(desc, A.reshape(-1, 2)).reshape(i1 - i0, m)
        nb = gauge_many(desc, B.reshape(-1, 2)).reshape(i1 - i0, m)
        V = 0.5 * (na + nb) - 1.0
        k = int(np.argmax(V))
        v = float(V.flat[k])
        if v > best:
            best = v
            bi, bj = i0 + k // m, k % m
    return best, bi, bj


def oracle_pair_stats(desc: KernelDesc, P: np.ndarray, eps: np.ndarray,
                      band: float) -> tuple[np.ndarray, np.ndarray]:
    """One exhaustive pair sweep feeding both dispersion statistics.

    Returns ``delta_min[k]`` = min of ``1 - |x+y|/2`` over pairs with
    ``||x-y| - eps[k]| <= band`` (``+inf`` when no pair qualifies) and
    ``banas_max[k]`` = max of the same quantity over pairs with
    ``|x-y| <= eps[k]``.
    """
    n = len(P)
    K = len(eps)
    delta_min = np.full(K, np.inf)
    banas_max = np.full(K, -np.inf)
    for i0, i1 in _row_chunks(n, n):
        diff = P[i0:i1, None, :] - P[None, :, :]
        summ = P[i0:i1, None, :] + P[None, :, :]
        dd = gauge_many(desc, diff.reshape(-1, 2))
        mm = 1.0 - 0.5 * gauge_many(desc, summ.reshape(-1, 2))
        for k in range(K):
            sel = np.abs(dd - eps[k]) <= band
            if sel.any():
                delta_min[k] = min(delta_min[k], float(mm[sel].min()))
            sel = dd <= eps[k]
            if sel.any():
                banas_max[k] = max(banas_max[k], float(mm[sel].max()))
    return delta_min, banas_max


def oracle_rho_max(desc: KernelDesc, X: np.ndarray, D: np.ndarray,
                   tau: float) -> float:
    """Exhaustive-sweep version of :func:`rho_pair_max` (value only)."""
    n, m = len(X), len(D)
    best = -np.inf
    for i0, i1 in _row_chunks(n, m):
        A = X[i0:i1, None, :] + tau * D[None, :, :]
        B = X[i0:i1, None, :] - tau * D[None, :, :]
        na = gauge_many(desc, A.reshape(-1, 2))
        nb = gauge_many(desc, B.reshape(-1, 2))
        best = max(best, float((0.5 * (na + nb) - 1.0).max()))
    return best


def oracle_lambda_scan(desc: KernelDesc, X: np.ndarray, Y: np.ndarray,
                       r: float, nsteps: int) -> np.ndarray:
    """First grid multiple of ``1/nsteps`` where |(1-t)x + r y| <= 1.

    A dense scan with no root-finding shortcuts; scans are performed in
    blocks of the parameter grid for all still-active pairs.
    """
    n = len(X)
    roots = np.full(n, 1.0)
    active = np.arange(n)
    block = 128
    for b0 in range(0, nsteps + 1, block):
        if active.size == 0:
            break
        lams = np.arange(b0, min(nsteps, b0 + block - 1) + 1) / nsteps
        Z = ((1.0 - lams)[None, :, None] * X[active, None, :]
             + r * Y[active, None, :])
        g = gauge_many(desc, Z.reshape(-1, 2)).reshape(active.size, lams.size)
        hit = g <= 1.0
        anyhit = hit.any(axis=1)
        if anyhit.any():
            first = np.argmax(hit[anyhit], axis=1)
            roots[active[anyhit]] = lams[first]
        active = active[~anyhit]
    return roots
