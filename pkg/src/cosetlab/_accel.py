"""Numba switch for the hot kernels.

Set ``COSETLAB_DISABLE_NUMBA=1`` to run every kernel as plain Python/numpy.
The kernels are written so that both paths return identical results; the
benchmark in ``benchmarks/`` compares them.
"""

import os

DISABLED = os.environ.get("COSETLAB_DISABLE_NUMBA", "") not in ("", "0")

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

ENABLED = numba is not None and not DISABLED


def njit(*args, **kwargs):
    """``numba.njit`` when acceleration is on, otherwise the identity."""
    if ENABLED:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda func: func
