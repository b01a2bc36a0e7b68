"""Optional numba acceleration.

The hot simulation kernel is written in nopython-compatible Python. When
numba is importable and not explicitly disabled, the kernel is JIT-compiled;
otherwise the exact same code runs interpreted (slow, but bit-identical).

Set ``RTSIM_NUMBA=0`` in the environment to force the pure-Python path.
"""

from __future__ import annotations

import os

NUMBA_ENV_VAR = "RTSIM_NUMBA"


def _numba_requested() -> bool:
    return os.environ.get(NUMBA_ENV_VAR, "1").strip().lower() not in ("0", "false", "no", "off")


try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

NUMBA_AVAILABLE = _numba is not None
NUMBA_ENABLED = NUMBA_AVAILABLE and _numba_requested()


def njit(func):
    """Apply ``numba.njit(cache=True)`` when enabled, else return ``func`` unchanged."""
    if NUMBA_ENABLED:
        return _numba.njit(cache=True)(func)
    return func


def python_function(func):
    """Return the plain-Python callable behind a possibly-jitted function."""
    return getattr(func, "py_func", func)
