"""Kernel selection: the compiled extension when it imports, otherwise the
pure Python fallback.  Set SCHURKIT_PURE_PYTHON=1 to force the fallback."""
import os

from . import _pykernels

NAME = "python"
snf = _pykernels.snf
bareiss_rank = _pykernels.bareiss_rank

if not os.environ.get("SCHURKIT_PURE_PYTHON"):
    try:
        from . import _kernels
    except ImportError:
        _kernels = None
    if _kernels is not None:
        NAME = "cython"
        snf = _kernels.snf
        bareiss_rank = _kernels.bareiss_rank
