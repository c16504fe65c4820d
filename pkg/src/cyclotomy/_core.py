"""Kernel selection: the compiled module when importable, else pure Python.

Set ``CYCLOTOMY_PURE_PYTHON=1`` to force the fallback.  Compiled calls that
hit int64 overflow are transparently retried on the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

_ext = None
if not os.environ.get("CYCLOTOMY_PURE_PYTHON"):
    try:
        from . import _kernels as _ext  # type: ignore[no-redef]
    except ImportError:
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _dispatch(name):
    slow = getattr(_kernels_py, name)
    if _ext is None:
        return slow
    fast = getattr(_ext, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


binomial_product_series = _dispatch("binomial_product_series")
fold = _dispatch("fold")
poly_mul = _dispatch("poly_mul")
exact_div = _dispatch("exact_div")
