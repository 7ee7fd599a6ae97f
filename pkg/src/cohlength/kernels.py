"""Backend selection for the F_p elimination kernel.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``COHLENGTH_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the numpy fallback is used.  Both expose
``rref_inplace(a, p) -> pivots`` and ``rank_inplace(a, p) -> rank`` on
C-contiguous int64 arrays with entries in ``[0, p)``.
"""
from __future__ import annotations

import os

from . import _rref_py

_force_py = os.environ.get("COHLENGTH_PURE_PYTHON", "") not in ("", "0")

if _force_py:
    _impl = _rref_py
    BACKEND = "python"
else:
    try:
        from . import _rref_c as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _rref_py
        BACKEND = "python"

rref_inplace = _impl.rref_inplace
rank_inplace = _impl.rank_inplace
