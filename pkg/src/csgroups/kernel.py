"""Kernel backend selection.

The compiled extension (_kernel_c) is preferred when present; the
pure-Python twin (_kernel_py) is always available.  Set CSGROUPS_KERNEL=py
to force the fallback (used by the benchmark and the parity tests).
Compiled calls overflowing 64-bit integers (possible for paracyclic
payloads) transparently retry in pure Python.
"""

import os

from . import _kernel_py as py

try:
    from . import _kernel_c as _c
except ImportError:
    _c = None

if os.environ.get("CSGROUPS_KERNEL", "") == "py":
    _c = None

BACKEND = "c" if _c is not None else "py"


def _wrap(name):
    c_fn = getattr(_c, name)
    py_fn = getattr(py, name)

    def call(*args):
        try:
            return c_fn(*args)
        except OverflowError:
            return py_fn(*args)

    call.__name__ = name
    return call


if _c is not None:
    ext_value = _wrap("ext_value")
    factor_window = _wrap("factor_window")
    window_of = _wrap("window_of")
    compose_nf = _wrap("compose_nf")
    star_nf = _wrap("star_nf")
    gap_preimage = _wrap("gap_preimage")
    dual_nf = _wrap("dual_nf")
    perm_of = _wrap("perm_of")
    group_compose = _wrap("group_compose")
    group_inverse = _wrap("group_inverse")
else:
    ext_value = py.ext_value
    factor_window = py.factor_window
    window_of = py.window_of
    compose_nf = py.compose_nf
    star_nf = py.star_nf
    gap_preimage = py.gap_preimage
    dual_nf = py.dual_nf
    perm_of = py.perm_of
    group_compose = py.group_compose
    group_inverse = py.group_inverse
