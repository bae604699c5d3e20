"""Selects the series-kernel implementation at import time.

The compiled extension (``machinpi._kernels``) is preferred when present;
the pure-Python module is the fallback.  Override with the environment
variable ``MACHINPI_BACKEND=pure|compiled|auto``.
"""

import os

from . import _kernels_py

_choice = os.environ.get("MACHINPI_BACKEND", "auto").lower()
if _choice not in ("auto", "pure", "compiled"):
    raise ImportError(f"MACHINPI_BACKEND must be auto, pure or compiled, not {_choice!r}")

compiled = None
if _choice != "pure":
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:
        compiled = None
        if _choice == "compiled":
            raise ImportError(
                "MACHINPI_BACKEND=compiled but the machinpi._kernels extension "
                "is not built; reinstall with a C compiler available"
            )

kernels = compiled if compiled is not None else _kernels_py


def backend_name() -> str:
    """Name of the kernel implementation in use: 'compiled' or 'pure'."""
    return getattr(kernels, "BACKEND", "pure")


def available_backends() -> dict:
    """Map of backend name to kernel module, for benchmarks and tests."""
    out = {"pure": _kernels_py}
    if compiled is not None:
        out["compiled"] = compiled
    return out
