"""Select the compiled kernels when available, else the pure-Python ones.

Set ``PRIMEFIG_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("PRIMEFIG_PURE") == "1":
    from ._pykernels import height_width_tables, sieve, subfigure_violations

    BACKEND = "python"
else:
    try:
        from ._ckernels import height_width_tables, sieve, subfigure_violations

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import height_width_tables, sieve, subfigure_violations

        BACKEND = "python"

__all__ = ["BACKEND", "height_width_tables", "sieve", "subfigure_violations"]
