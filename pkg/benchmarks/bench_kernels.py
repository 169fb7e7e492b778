"""Benchmark the compiled kernels against the pure-numpy fallback.

Runs each numeric kernel on a representative workload for every
importable backend and prints a timing table.  Usage::

    python benchmarks/bench_kernels.py [--repeat N]

The same workloads back the parity tests, so any timing difference here
is for identical answers.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from banachmoduli.kernels import get_backends, make_desc
from banachmoduli._desc import KIND_LP, KIND_POLYGON


def _sphere(desc, backend, n: int) -> np.ndarray:
    th = np.arange(n) * (2.0 * math.pi / n)
    P = np.stack([np.cos(th), np.sin(th)], axis=1)
    return P / backend.gauge_many(desc, P)[:, None]


def _workloads():
    eye = np.eye(2)
    none = np.zeros(0)
    lp3 = make_desc(KIND_LP, 3.0, none, np.zeros((0, 2)), eye)
    hexagon = np.array([[1.0, 0.0], [0.5, 1.0], [-0.5, 1.0],
                        [-1.0, 0.0], [-0.5, -1.0], [0.5, -1.0]])
    # rows of the polygon gauge: outward normals scaled to offset 1
    rows = []
    for i in range(len(hexagon)):
        a, b = hexagon[i], hexagon[(i + 1) % len(hexagon)]
        nrm = np.array([b[1] - a[1], a[0] - b[0]])
        rows.append(nrm / (nrm @ a))
    poly = make_desc(KIND_POLYGON, 0.0, none, np.asarray(rows), eye)

    rng = np.random.default_rng(0)
    big = rng.standard_normal((400_000, 2))

    def gauge_lp(backend):
        return backend.gauge_many(lp3, big)

    def gauge_poly(backend):
        return backend.gauge_many(poly, big)

    def rho_pairs(backend):
        P = _sphere(lp3, backend, 1024)
        return backend.rho_pair_max(lp3, P, P, 0.5)

    def pair_stats(backend):
        P = _sphere(lp3, backend, 1200)
        eps = np.array([0.5, 1.0, 1.5])
        return backend.oracle_pair_stats(lp3, P, eps, 2.0 * math.pi / 1200)

    def rho_oracle(backend):
        P = _sphere(poly, backend, 1200)
        return backend.oracle_rho_max(poly, P, P, 0.5)

    def lambda_scan(backend):
        P = _sphere(lp3, backend, 1000)
        Y = np.roll(P, 250, axis=0)
        return backend.oracle_lambda_scan(lp3, P, Y, 0.5, 2048)

    return [
        ("gauge_many lp(3) 400k", gauge_lp),
        ("gauge_many hexagon 400k", gauge_poly),
        ("rho_pair_max 1024^2", rho_pairs),
        ("oracle_pair_stats 1200^2 x3", pair_stats),
        ("oracle_rho_max 1200^2", rho_oracle),
        ("oracle_lambda_scan 1000x2048", lambda_scan),
    ]


def _time(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions per workload (best is kept)")
    args = ap.parse_args()

    backends = get_backends()
    names = list(backends)
    print(f"backends: {', '.join(names)}\n")
    header = f"{'workload':32s}" + "".join(f"{n:>12s}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, fn in _workloads():
        times = [_time(lambda b=backends[n]: fn(b), args.repeat)
                 for n in names]
        row = f"{label:32s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
