"""Kernel backend selection.

Prefers the compiled qdiv._kernels extension; falls back to the pure-Python
twin when the extension is unavailable or QDIV_PURE_PYTHON is set (any
non-empty value).  Everything downstream imports `kernels` from here.
"""

from __future__ import annotations

import os

if os.environ.get("QDIV_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]


def kernel_backend() -> str:
    """Name of the active kernel implementation: 'cython' or 'python'."""
    return kernels.BACKEND_NAME
