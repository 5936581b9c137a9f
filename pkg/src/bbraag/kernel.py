"""Selects the canonical-labeling backend at import time.

The compiled extension is preferred when present; the pure-Python twin is the
fallback and the reference. ``BBRAAG_KERNEL=pure`` (or ``cython``) forces a
backend, which the tests and the benchmark use to compare the two.
"""

from __future__ import annotations

import os

from . import _canon_py

_choice = os.environ.get("BBRAAG_KERNEL", "auto").lower()

if _choice == "pure":
    _impl = _canon_py
elif _choice == "cython":
    from . import _canon_cy as _impl  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _canon_cy as _impl
    except ImportError:
        _impl = _canon_py

BACKEND: str = _impl.BACKEND
canon_key = _impl.canon_key


def available_backends():
    """Names and modules of every importable backend, reference first."""
    backends = [("pure-python", _canon_py)]
    try:
        from . import _canon_cy

        backends.append(("cython", _canon_cy))
    except ImportError:
        pass
    return backends
