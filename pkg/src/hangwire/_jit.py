"""Numba switch for the hot kernels.

Set ``HANGWIRE_DISABLE_JIT=1`` to run every kernel as plain Python over
numpy arrays. The same source runs either way, so the fallback doubles as
a reference implementation for the compiled path.
"""

import os

_DISABLE = os.environ.get("HANGWIRE_DISABLE_JIT", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLE:
        raise ImportError("disabled by HANGWIRE_DISABLE_JIT")
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def jit(func):
    """Compile ``func`` with numba when available, else return it unchanged."""
    if not HAVE_NUMBA:
        return func
    return _njit(cache=True, nogil=True)(func)


def python_impl(kernel):
    """Return the interpreted version of a kernel, compiled or not."""
    return getattr(kernel, "py_func", kernel)
