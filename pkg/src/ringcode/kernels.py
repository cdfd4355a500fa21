"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set ``RINGCODE_PURE_PYTHON=1`` to force the numpy fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("RINGCODE_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

span_weights = _impl.span_weights
nested_pair = _impl.nested_pair

__all__ = ["BACKEND", "span_weights", "nested_pair"]
