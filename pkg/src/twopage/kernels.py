"""Spine kernels: compiled extension when built, pure Python otherwise.

Set ``TWOPAGE_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("TWOPAGE_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"
crossing_pairs = _impl.crossing_pairs
two_colour_conflicts = _impl.two_colour_conflicts
