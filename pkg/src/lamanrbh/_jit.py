"""Kernel compilation switch.

Hot loops are written once as plain Python over numpy arrays and compiled
with numba.  Setting ``LAMANRBH_PURE_PYTHON=1`` before import (or running
without numba installed) leaves them uncompiled, which is slow but useful
for debugging and for the backend benchmark.
"""

import os

PURE_PYTHON = os.environ.get("LAMANRBH_PURE_PYTHON", "").strip() not in ("", "0")

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

JIT_ENABLED = numba is not None and not PURE_PYTHON


def njit(func=None, *, inline=False):
    """Compile ``func`` when the JIT is enabled; ``inline=True`` inlines it at call sites."""
    if func is None:
        return lambda f: njit(f, inline=inline)
    if JIT_ENABLED:
        opts = {"inline": "always"} if inline else {}
        return numba.njit(cache=True, nogil=True, **opts)(func)
    return func
