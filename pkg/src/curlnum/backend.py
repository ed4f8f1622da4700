"""Kernel backend selection.

CURLNUM_BACKEND=numba or numpy forces a backend; unset prefers numba and
falls back to numpy if the import fails.  Both modules export the same
functions over the same packed layout, so callers just grab the module.
"""

import os

_CHOICE = os.environ.get("CURLNUM_BACKEND", "").strip().lower()
if _CHOICE not in ("", "numba", "numpy"):
    raise ValueError("CURLNUM_BACKEND must be 'numba' or 'numpy', got %r" % _CHOICE)

_kernels = None
_name = None


def kernels():
    """The active kernel module (import deferred: numba compile is lazy anyway)."""
    global _kernels, _name
    if _kernels is None:
        if _CHOICE == "numpy":
            from . import _kern_numpy as mod
            _name = "numpy"
        elif _CHOICE == "numba":
            from . import _kern_numba as mod
            _name = "numba"
        else:
            try:
                from . import _kern_numba as mod
                _name = "numba"
            except ImportError:
                from . import _kern_numpy as mod
                _name = "numpy"
        _kernels = mod
    return _kernels


def backend_name():
    kernels()
    return _name


def shard_bounds(lo, hi, parts):
    """Split [lo, hi) into <= parts contiguous ranges of near-equal size."""
    total = hi - lo
    parts = max(1, min(parts, total)) if total else 1
    step, rem = divmod(total, parts)
    out = []
    at = lo
    for i in range(parts):
        size = step + (1 if i < rem else 0)
        if size == 0:
            continue
        out.append((at, at + size))
        at += size
    return out
