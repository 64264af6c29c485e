"""Select the coefficient-table kernel: compiled if available, else Python.

Set ``INDCOUNT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernel_py

if os.environ.get("INDCOUNT_PURE_PYTHON"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION = _impl.IMPLEMENTATION
prepare = _impl.prepare
fill_table = _impl.fill_table

python_kernel = _kernel_py


def compiled_kernel():
    """The compiled kernel module, or None if it was not built."""
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _kernel
