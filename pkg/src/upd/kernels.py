"""Backend selection for the exponent-vector kernels.

The compiled extension ``upd._ckernels`` is used when it imports; otherwise,
or when ``UPD_PURE_PYTHON=1`` is set, the pure-Python twin is used.  The
compiled path works on int64 and falls back per call when an exponent does
not fit, so results never depend on which backend is active.
"""

from __future__ import annotations

import os

from . import _pykernels as _py

_c = None
if os.environ.get("UPD_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c  # type: ignore[no-redef]
    except ImportError:
        _c = None

BACKEND = "cython" if _c is not None else "python"

canon_key = _py.canon_key
divides = _py.divides


def _dispatch(name):
    pyfn = getattr(_py, name)
    if _c is None:
        return pyfn
    cfn = getattr(_c, name)

    def fn(*args):
        try:
            return cfn(*args)
        except OverflowError:
            return pyfn(*args)

    fn.__name__ = name
    fn.__doc__ = pyfn.__doc__
    return fn


divides_any = _dispatch("divides_any")
minimalize = _dispatch("minimalize")
pairwise_mul = _dispatch("pairwise_mul")
pairwise_lcm = _dispatch("pairwise_lcm")
colon_monomial = _dispatch("colon_monomial")

__all__ = [
    "BACKEND",
    "canon_key",
    "divides",
    "divides_any",
    "minimalize",
    "pairwise_mul",
    "pairwise_lcm",
    "colon_monomial",
]
