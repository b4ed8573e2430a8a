"""Backend selection for the tableau kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``QLRINV_PURE_PYTHON`` is set to a non-empty value, the
pure-Python reference implementation is used.  Both expose the same
functions and raise the same exceptions.
"""

import os

from . import _pykernels

if os.environ.get("QLRINV_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND
column_insert = _impl.column_insert
reverse_extract = _impl.reverse_extract
prepend_column = _impl.prepend_column
sst_rows = _impl.sst_rows


def available_backends():
    """Map backend name to module for every backend importable here."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
