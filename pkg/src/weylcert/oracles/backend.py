"""Kernel backend selection.

The environment variable WEYLCERT_BACKEND picks the enumeration backend:
``numba`` (jit kernels, the default when numba imports) or ``numpy``
(pure-numpy fallback).  Both backends implement identical contracts and the
test suite cross-checks them.
"""

from __future__ import annotations

import os
from functools import lru_cache

_ENV = "WEYLCERT_BACKEND"


@lru_cache(maxsize=1)
def backend_name() -> str:
    choice = os.environ.get(_ENV, "").strip().lower()
    if choice in ("numba", "numpy"):
        if choice == "numba":
            _load("numba")  # fail loudly if requested but unavailable
        return choice
    if choice:
        raise ValueError(f"{_ENV}={choice!r}: expected 'numba' or 'numpy'")
    try:
        _load("numba")
        return "numba"
    except ImportError:
        return "numpy"


@lru_cache(maxsize=2)
def _load(name: str):
    if name == "numba":
        from . import _kern_numba as mod
    else:
        from . import _kern_numpy as mod
    return mod


def kernels():
    """Module implementing histogram_values and orbit_size."""
    return _load(backend_name())
