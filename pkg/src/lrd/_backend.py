"""Backend selection for the box-fitting hot loop.

The compiled Cython core is preferred when it imported cleanly; the
vectorized NumPy implementation is the fallback.  Both produce the same
numbers up to floating-point summation order.

The ``LRD_BACKEND`` environment variable overrides the choice:
``auto`` (default), ``ext`` (require the compiled core), ``pure``
(force the NumPy fallback).
"""

import os

from . import _boxfit_py

_requested = os.environ.get("LRD_BACKEND", "auto").lower()
if _requested not in ("auto", "ext", "pure"):
    raise RuntimeError(f"LRD_BACKEND must be auto, ext, or pure, not {_requested!r}")

if _requested == "pure":
    _ext = None
else:
    try:
        from . import _boxfit as _ext
    except ImportError:
        _ext = None
    if _ext is None and _requested == "ext":
        raise RuntimeError("LRD_BACKEND=ext but the compiled core is not available")

if _ext is not None:
    BACKEND = "ext"
    fit_boxes = _ext.fit_boxes
else:
    BACKEND = "pure"
    fit_boxes = _boxfit_py.fit_boxes


def available_backends() -> dict:
    """Map backend name to its fit_boxes callable, for benchmarks/tests."""
    out = {"pure": _boxfit_py.fit_boxes}
    if _ext is not None:
        out["ext"] = _ext.fit_boxes
    return out
