"""Backend selection for the hot numeric and modular kernels.

The compiled extension is used when importable; ``CONEHYP_PURE_PYTHON=1``
forces the pure Python implementation.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("CONEHYP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"

aberth_batch = _impl.aberth_batch
rank_mod_p = _impl.rank_mod_p
det_mod_p = _impl.det_mod_p

__all__ = ["BACKEND", "aberth_batch", "rank_mod_p", "det_mod_p"]
