"""Kernel selection: compiled extension when available, pure Python otherwise.

The exponent-vector kernels exist twice with one contract: ``_kernels_py``
(always importable) and ``_kernels_cy`` (Cython, built by setup.py).  The
choice happens here at import time and can be forced with the environment
variable ``GRAPHIDEALS_KERNELS=python|cython`` or switched at runtime with
:func:`use`.  Callers access the kernels through this module's attributes
(``kernels.divides(...)``) so a switch takes effect everywhere at once;
the benchmark relies on that.
"""

import os

from . import _kernels_py

try:
    from . import _kernels_cy
except ImportError:
    _kernels_cy = None

_IMPLS = {"python": _kernels_py}
if _kernels_cy is not None:
    _IMPLS["cython"] = _kernels_cy

_active = None

divides = None
lcm = None
any_divides = None
minimalize = None
intersect_rows = None
grlex_key = None


def available():
    """Names of the importable implementations."""
    return tuple(sorted(_IMPLS))


def active():
    """Name of the implementation currently bound."""
    return _active


def use(name):
    """Bind the named implementation; returns the name now active."""
    global _active, divides, lcm, any_divides, minimalize, intersect_rows, grlex_key
    try:
        impl = _IMPLS[name]
    except KeyError:
        raise ValueError(
            f"unknown kernel implementation {name!r}; available: {available()}"
        ) from None
    divides = impl.divides
    lcm = impl.lcm
    any_divides = impl.any_divides
    minimalize = impl.minimalize
    intersect_rows = impl.intersect_rows
    grlex_key = impl.grlex_key
    _active = name
    return name


use(os.environ.get("GRAPHIDEALS_KERNELS") or ("cython" if _kernels_cy else "python"))
