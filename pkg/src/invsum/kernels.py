"""Dispatch for the hot loops.

The compiled extension is used when it imports; otherwise the numpy
implementation. Set ``INVSUM_BACKEND=python`` to force the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_requested = os.environ.get("INVSUM_BACKEND", "").strip().lower()
if _requested and _requested not in ("python", "cython"):
    raise ImportError(f"unknown INVSUM_BACKEND {_requested!r}")
if _requested == "cython" and _ckernels is None:
    raise ImportError("INVSUM_BACKEND=cython but the extension is not built")

BACKEND = _requested or ("cython" if _ckernels is not None else "python")
_impl = BACKENDS[BACKEND]


def pair_histogram(values, base, ndigits=1):
    return _impl.pair_histogram(values, base, ndigits)


def self_convolution(weights, base, ndigits=1):
    return _impl.self_convolution(weights, base, ndigits)


def cw_power_sum(p, t):
    return _impl.cw_power_sum(p, t)
