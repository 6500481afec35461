"""Backend selection for the hot kernels.

The Cython extension is used when it was built; otherwise the pure-Python
module.  Set ``ECCSPEC_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from eccspec import _pykernels

python_backend = _pykernels

try:
    if os.environ.get("ECCSPEC_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend forced by ECCSPEC_PURE_PYTHON")
    from eccspec import _ckernels as _active
    compiled_backend = _active
    BACKEND = "cython"
except ImportError:
    try:
        from eccspec import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None
    _active = _pykernels
    BACKEND = "python"

jacobi_eigh = _active.jacobi_eigh
all_pairs_bfs = _active.all_pairs_bfs

__all__ = ["BACKEND", "all_pairs_bfs", "compiled_backend", "jacobi_eigh", "python_backend"]
