"""Kernel selection: the compiled extension when importable, pure Python otherwise.

Selection happens once at import. Set ``GCDSEQ_PURE_PYTHON=1`` in the
environment to force the fallback (the benchmark and some tests use this).
Even with the extension loaded, moduli at or above 2**63 are routed to the
pure-Python kernels.
"""

import os

from . import _kernels_py

if os.environ.get("GCDSEQ_PURE_PYTHON"):
    _ext = None
else:
    try:
        from . import _kernel as _ext
    except ImportError:
        _ext = None

_EXT_LIMIT = 1 << 63

HAVE_EXTENSION = _ext is not None


def backend_name():
    return "compiled" if HAVE_EXTENSION else "pure-python"


def b_mod_pair(t, x):
    if _ext is not None and x < _EXT_LIMIT and t < _EXT_LIMIT:
        return _ext.b_mod_pair(t, x)
    return _kernels_py.b_mod_pair(t, x)


def factorial_mod(m, x):
    if _ext is not None and x < _EXT_LIMIT and m < _EXT_LIMIT:
        return _ext.factorial_mod(m, x)
    return _kernels_py.factorial_mod(m, x)
