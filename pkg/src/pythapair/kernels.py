"""Backend selection for the search loops.

The compiled extension is used when it was built; setting the environment
variable ``PYTHAPAIR_PURE=1`` forces the pure-Python loops.
"""
import os

if os.environ.get("PYTHAPAIR_PURE"):
    from ._kernels_py import curve_search, witness_scan

    BACKEND = "python"
else:
    try:
        from ._ckernels import curve_search, witness_scan

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import curve_search, witness_scan

        BACKEND = "python"

__all__ = ["BACKEND", "curve_search", "witness_scan"]
