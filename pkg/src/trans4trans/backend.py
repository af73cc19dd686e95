"""Kernel backend selection: compiled extension if available, NumPy otherwise.

The package ships a small Cython extension (``trans4trans._fused``) with
fused loops for the memory-bound kernels.  Importing this module picks the
backend once:

* ``T4T_KERNELS=fused``     require the extension (ImportError if missing)
* ``T4T_KERNELS=reference`` force the pure-NumPy path
* unset / ``auto``          use the extension when importable, else fall back

Whichever backend is active, results are deterministic run to run; the two
backends agree to float rounding (distinct summation orders), not bitwise.
``benchmarks/bench_kernels.py`` compares their throughput.
"""

import os

from . import kernels_ref

_choice = os.environ.get("T4T_KERNELS", "auto").lower()

if _choice not in ("auto", "fused", "reference"):
    raise ValueError(f"T4T_KERNELS must be auto|fused|reference, got {_choice!r}")

if _choice == "reference":
    kernels = kernels_ref
    BACKEND = "reference"
else:
    try:
        from . import _fused as kernels  # type: ignore[no-redef]

        BACKEND = "fused"
    except ImportError:
        if _choice == "fused":
            raise
        kernels = kernels_ref
        BACKEND = "reference"


def backend_name() -> str:
    return BACKEND
