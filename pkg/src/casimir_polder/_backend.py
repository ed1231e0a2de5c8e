"""Select the compiled or pure-Python kernel module at import time.

``CASIMIR_POLDER_BACKEND`` may be ``auto`` (default), ``cython`` or
``python``.  ``auto`` prefers the compiled extension and silently falls back.
"""
import os

_choice = os.environ.get("CASIMIR_POLDER_BACKEND", "auto").strip().lower()

if _choice == "python":
    from . import _pykernels as kernels
elif _choice in ("cython", "auto", ""):
    try:
        from . import _ckernels as kernels
    except ImportError:
        if _choice == "cython":
            raise
        from . import _pykernels as kernels
else:
    raise ImportError(f"unknown CASIMIR_POLDER_BACKEND={_choice!r}; use auto, cython or python")

BACKEND = "cython" if kernels.__name__.endswith("_ckernels") else "python"
