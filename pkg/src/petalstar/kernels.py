"""Backend selection for the hot numerical kernels.

The compiled extension ``_kernels`` is used when it imports; otherwise the
numpy implementation in ``_kernels_py`` is used.  Setting the environment
variable ``PETALSTAR_PURE=1`` forces the pure-Python path.
"""
import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("PETALSTAR_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "compiled"

eval_m = _impl.eval_m
eval_m_points = _impl.eval_m_points
coeffs_batch = _impl.coeffs_batch


def available_backends():
    """Name -> module for every importable backend."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        return out
    out["compiled"] = _kernels
    return out
