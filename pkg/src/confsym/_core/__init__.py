"""Backend selection for the exact row-echelon engine.

The compiled twin (confsym._core._speed, built from _speed.pyx) is preferred
when importable; otherwise the pure-Python twin is used.  Set CONFSYM_PURE=1
to force the pure backend, e.g. for benchmarking or debugging.  Both twins
implement the identical algorithm and must produce bit-identical output.
"""

import os

if os.environ.get("CONFSYM_PURE"):
    from . import pure as _backend
else:
    try:
        from . import _speed as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _backend

rref_sparse = _backend.rref_sparse
BACKEND_NAME = _backend.BACKEND_NAME
