"""Backend selection for the numeric kernels.

The compiled extension is preferred when importable; the pure-numpy
fallback is used otherwise.  Set ``BANACHMODULI_PURE=1`` to force the
fallback (useful for parity testing and benchmarking).
"""

from __future__ import annotations

import os

from ._desc import (  # noqa: F401  (re-exported)
    KIND_LP,
    KIND_POLYGON,
    KIND_SUP,
    KIND_WLP,
    KernelDesc,
    make_desc,
)
from . import _kernels_py

if os.environ.get("BANACHMODULI_PURE", "0") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on build environment
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

base_norm_rows = _impl.base_norm_rows
gauge_many = _impl.gauge_many
rho_pair_max = _impl.rho_pair_max
oracle_pair_stats = _impl.oracle_pair_stats
oracle_rho_max = _impl.oracle_rho_max
oracle_lambda_scan = _impl.oracle_lambda_scan


def get_backends() -> dict[str, object]:
    """Importable backends keyed by name (for parity tests and benchmarks)."""
    backends: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels_cy
        backends["cython"] = _kernels_cy
    except ImportError:  # pragma: no cover
        pass
    return backends
