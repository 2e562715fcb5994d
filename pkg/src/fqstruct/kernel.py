"""Select the arithmetic kernel at import time.

The compiled kernel is used when it was built; set ``FQSTRUCT_PURE_PYTHON=1``
to force the pure-Python one.  ``BACKEND`` names whichever was picked.
"""

import os

from . import _pykernel

PyFieldKernel = _pykernel.FieldKernel

try:
    from ._ckernel import FieldKernel as CFieldKernel
except ImportError:  # extension not built
    CFieldKernel = None

if CFieldKernel is not None and os.environ.get("FQSTRUCT_PURE_PYTHON", "0") in ("", "0"):
    FieldKernel = CFieldKernel
    BACKEND = "cython"
else:
    FieldKernel = PyFieldKernel
    BACKEND = "python"

__all__ = ["BACKEND", "CFieldKernel", "FieldKernel", "PyFieldKernel"]
