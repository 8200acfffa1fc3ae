"""Backend selection for the hot kernels.

The compiled extension is used when it imports; ``CSL_PURE_PYTHON=1``
forces the pure-Python fallback. ``BACKEND`` names the active one.
"""

import os

from . import _kernels_py

if os.environ.get("CSL_PURE_PYTHON") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

find_noncommutative = _impl.find_noncommutative
find_nonassociative = _impl.find_nonassociative
idempotents = _impl.idempotents
regular_witnesses = _impl.regular_witnesses
maximal_subgroup = _impl.maximal_subgroup
enumerate_commutative_semigroups = _impl.enumerate_commutative_semigroups
reduced_form_count_raw = _impl.reduced_form_count


def backends():
    """Map backend name -> module for every backend importable here."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
