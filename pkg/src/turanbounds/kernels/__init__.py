"""Numerical kernels with a compiled core and a numpy fallback.

The compiled extension (``turanbounds.kernels._core``, built from Cython) is
preferred when importable; otherwise the numpy implementation in ``_ref`` is
used. Setting the environment variable ``TURANBOUNDS_NO_EXT`` forces the
fallback. Both backends implement identical semantics and are compared by
``benchmarks/bench_kernels.py`` and the kernel parity tests.
"""

from __future__ import annotations

import os

import numpy as np

from ..config import NO_EXT_ENV
from . import _ref

_impl = _ref
BACKEND = "fallback"

if not os.environ.get(NO_EXT_ENV):
    try:
        from . import _core  # type: ignore[attr-defined]

        _impl = _core
        BACKEND = "compiled"
    except ImportError:
        pass


def polyeval_boundary(z: np.ndarray, roots: np.ndarray, lead: complex,
                      eps_root: float) -> tuple[np.ndarray, np.ndarray]:
    """(log|p|, log|p'|) over evaluation points z for the root-form polynomial."""
    return _impl.polyeval_boundary(z, roots, lead, eps_root)


def available_backends() -> dict[str, object]:
    """Importable backend modules keyed by name (for benchmarks/tests)."""
    out: dict[str, object] = {"fallback": _ref}
    try:
        from . import _core  # type: ignore[attr-defined]

        out["compiled"] = _core
    except ImportError:
        pass
    return out
