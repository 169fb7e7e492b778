# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementation of the numeric kernels.

Semantics match :mod:`banachmoduli._kernels_py` exactly; see that module
for documentation.  Loops run without the GIL on C buffers.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, pow, sqrt

BACKEND = "cython"

DEF MAX_DIM = 16


cdef inline double _base_norm(int kind, double p, const double* w, int D,
                              const double* rows, int K,
                              const double* z) noexcept nogil:
    cdef double s = 0.0
    cdef double m = 0.0
    cdef double a
    cdef int i
    if kind == 0:
        if p == 1.0:
            for i in range(D):
                s += fabs(z[i])
            return s
        if p == 2.0:
            for i in range(D):
                s += z[i] * z[i]
            return sqrt(s)
        for i in range(D):
            a = fabs(z[i])
            if a > m:
                m = a
        if m == 0.0:
            return 0.0
        for i in range(D):
            s += pow(fabs(z[i]) / m, p)
        return m * pow(s, 1.0 / p)
    elif kind == 1:
        for i in range(D):
            a = fabs(z[i])
            if a > m:
                m = a
        return m
    elif kind == 2:
        if p == 1.0:
            for i in range(D):
                s += w[i] * fabs(z[i])
            return s
        if p == 2.0:
            for i in range(D):
                s += w[i] * z[i] * z[i]
            return sqrt(s)
        for i in range(D):
            a = fabs(z[i])
            if a > m:
                m = a
        if m == 0.0:
            return 0.0
        for i in range(D):
            s += w[i] * pow(fabs(z[i]) / m, p)
        return m * pow(s, 1.0 / p)
    else:
        m = rows[0] * z[0] + rows[1] * z[1]
        for i in range(1, K):
            a = rows[2 * i] * z[0] + rows[2 * i + 1] * z[1]
            if a > m:
                m = a
        return m


cdef inline double _gauge_plane(int kind, double p, const double* w, int D,
                                const double* rows, int K, const double* emb,
                                double a, double b) noexcept nogil:
    cdef double z[MAX_DIM]
    cdef int i
    for i in range(D):
        z[i] = a * emb[i] + b * emb[D + i]
    return _base_norm(kind, p, w, D, rows, K, z)


cdef class _Desc:
    """Unpacked descriptor holding raw pointers for the nogil helpers."""
    cdef int kind, D, K
    cdef double p
    cdef double[::1] w
    cdef double[:, ::1] rows
    cdef double[:, ::1] emb
    cdef const double* wp
    cdef const double* rp
    cdef const double* ep

    def __init__(self, desc):
        self.kind = desc.kind
        self.p = desc.p
        self.w = desc.weights
        self.rows = desc.rows if desc.rows.size else np.zeros((0, 2))
        self.emb = desc.emb
        self.D = self.emb.shape[1]
        self.K = self.rows.shape[0]
        if self.D > MAX_DIM:
            raise ValueError("embedding dimension too large for this kernel")
        self.wp = &self.w[0] if self.w.shape[0] else NULL
        self.rp = &self.rows[0, 0] if self.K else NULL
        self.ep = &self.emb[0, 0]


def base_norm_rows(int kind, double p, weights, rows, Z):
    Z = np.ascontiguousarray(Z, dtype=np.float64)
    cdef double[:, ::1] zv = Z
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef double[:, ::1] rv = np.ascontiguousarray(
        rows if np.asarray(rows).size else np.zeros((0, 2)), dtype=np.float64)
    cdef Py_ssize_t n = zv.shape[0]
    cdef int D = zv.shape[1]
    cdef int K = rv.shape[0]
    cdef const double* wp = &w[0] if w.shape[0] else NULL
    cdef const double* rp = &rv[0, 0] if K else NULL
    out = np.empty(n)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            ov[i] = _base_norm(kind, p, wp, D, rp, K, &zv[i, 0])
    return out


def gauge_many(desc, P):
    P = np.ascontiguousarray(P, dtype=np.float64)
    cdef _Desc d = _Desc(desc)
    cdef double[:, ::1] pv = P
    cdef Py_ssize_t n = pv.shape[0]
    out = np.empty(n)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            ov[i] = _gauge_plane(d.kind, d.p, d.wp, d.D, d.rp, d.K, d.ep,
                                 pv[i, 0], pv[i, 1])
    return out


def rho_pair_max(desc, X, D, double tau):
    X = np.ascontiguousarray(X, dtype=np.float64)
    D = np.ascontiguousarray(D, dtype=np.float64)
    cdef _Desc dd = _Desc(desc)
    cdef double[:, ::1] xv = X
    cdef double[:, ::1] dv = D
    cdef Py_ssize_t n = xv.shape[0], m = dv.shape[0]
    cdef Py_ssize_t i, j, bi = 0, bj = 0
    cdef double best = -1e300, na, nb, v
    with nogil:
        for i in range(n):
            for j in range(m):
                na = _gauge_plane(dd.kind, dd.p, dd.wp, dd.D, dd.rp, dd.K,
                                  dd.ep, xv[i, 0] + tau * dv[j, 0],
                                  xv[i, 1] + tau * dv[j, 1])
                nb = _gauge_plane(dd.kind, dd.p, dd.wp, dd.D, dd.rp, dd.K,
                                  dd.ep, xv[i, 0] - tau * dv[j, 0],
                                  xv[i, 1] - tau * dv[j, 1])
                v = 0.5 * (na + nb) - 1.0
                if v > best:
                    best = v
                    bi = i
                    bj = j
    return best, int(bi), int(bj)


def oracle_pair_stats(desc, P, eps, double band):
    P = np.ascontiguousarray(P, dtype=np.float64)
    eps = np.ascontiguousarray(eps, dtype=np.float64)
    cdef _Desc dd = _Desc(desc)
    cdef double[:, ::1] pv = P
    cdef double[::1] ev = eps
    cdef Py_ssize_t n = pv.shape[0]
    cdef int K = ev.shape[0]
    delta_min = np.full(K, np.inf)
    banas_max = np.full(K, -np.inf)
    cdef double[::1] dm = delta_min
    cdef double[::1] bm = banas_max
    cdef Py_ssize_t i, j
    cdef int k
    cdef double d, mv
    with nogil:
        for i in range(n):
            for j in range(i, n):
                d = _gauge_plane(dd.kind, dd.p, dd.wp, dd.D, dd.rp, dd.K,
                                 dd.ep, pv[i, 0] - pv[j, 0],
                                 pv[i, 1] - pv[j, 1])
                mv = 1.0 - 0.5 * _gauge_plane(dd.kind, dd.p, dd.wp, dd.D,
                                              dd.rp, dd.K, dd.ep,
                                              pv[i, 0] + pv[j, 0],
                                              pv[i, 1] + pv[j, 1])
                for k in range(K):
                    if fabs(d - ev[k]) <= band and mv < dm[k]:
                        dm[k] = mv
                    if d <= ev[k] and mv > bm[k]:
                        bm[k] = mv
    return delta_min, banas_max


def oracle_rho_max(desc, X, D, double tau):
    X = np.ascontiguousarray(X, dtype=np.float64)
    D = np.ascontiguousarray(D, dtype=np.float64)
    cdef _Desc dd = _Desc(desc)
    cdef double[:, ::1] xv = X
    cdef double[:, ::1] dv = D
    cdef Py_ssize_t n = xv.shape[0], m = dv.shape[0]
    cdef Py_ssize_t i, j
    cdef double best = -1e300, na, nb, v
    with nogil:
        for i in range(n):
            for j in range(m):
                na = _gauge_plane(dd.kind, dd.p, dd.wp, dd.D, dd.rp, dd.K,
                                  dd.ep, xv[i, 0] + tau * dv[j, 0],
                                  xv[i, 1] + tau * dv[j, 1])
                nb = _gauge_plane(dd.kind, dd.p, dd.wp, dd.D, dd.rp, dd.K,
                                  dd.ep, xv[i, 0] - tau * dv[j, 0],
                                  xv[i, 1] - tau * dv[j, 1])
                v = 0.5 * (na + nb) - 1.0
                if v > best:
                    best = v
    return best


def oracle_lambda_scan(desc, X, Y, double r, int nsteps):
    X = np.ascontiguousarray(X, dtype=np.float64)
    Y = np.ascontiguousarray(Y, dtype=np.float64)
    cdef _Desc dd = _Desc(desc)
    cdef double[:, ::1] xv = X
    cdef double[:, ::1] yv = Y
    cdef Py_ssize_t n = xv.shape[0]
    out = np.full(n, 1.0)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    cdef int k
    cdef double lam, g
    with nogil:
        for i in range(n):
            for k in range(nsteps + 1):
                lam = k / (<double> nsteps)
                g = _gauge_plane(dd.kind, dd.p, dd.wp, dd.D, dd.rp, dd.K,
                                 dd.ep,
                                 (1.0 - lam) * xv[i, 0] + r * yv[i, 0],
                                 (1.0 - lam) * xv[i, 1] + r * yv[i, 1])
                if g <= 1.0:
                    ov[i] = lam
                    break
    return out
