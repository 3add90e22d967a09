"""Optional numba acceleration.

Set ``SEMIEXP_DISABLE_NUMBA=1`` to run every kernel through its numpy/Python
fallback. The flag is read once at import time.
"""
import os

_FLAG = os.environ.get("SEMIEXP_DISABLE_NUMBA", "").strip().lower()
DISABLED = _FLAG in ("1", "true", "yes", "on")

try:
    if DISABLED:
        raise ImportError
    import numba
    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(fn):
    """Compile ``fn`` in nopython mode when numba is usable, else return it."""
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


BACKEND = "numba" if HAVE_NUMBA else "numpy"
