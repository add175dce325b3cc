"""Backend selection for the prime-field linear algebra kernels.

The compiled extension is preferred; set GALTAN_PURE=1 to force the
NumPy fallback (used by the benchmark and the backend-parity tests).
"""

import os

if os.environ.get("GALTAN_PURE"):
    from galtan import _fallback as _impl
else:
    try:
        from galtan import _speedups as _impl
    except ImportError:
        from galtan import _fallback as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_speedups") else "fallback"

matmul_mod = _impl.matmul_mod
rref_mod = _impl.rref_mod
reduce_rows_mod = _impl.reduce_rows_mod
