"""Backend selection for the scalar chain kernel.

The compiled extension is preferred when it imported successfully at
package load; otherwise the pure-Python implementation is used.  Both can
be forced explicitly, which the equivalence tests and the benchmark do.
"""

from __future__ import annotations

import numpy as np

from . import _chain_py

try:
    from . import _chain_cy
except ImportError:  # extension not built
    _chain_cy = None

BACKEND = "cython" if _chain_cy is not None else "python"


def available_backends() -> tuple[str, ...]:
    return ("python",) if _chain_cy is None else ("python", "cython")


def chain_final_units(values, tol: int, backend: str | None = None) -> int:
    """Final incumbent of the worst-case scan over integer distance units.

    See hullstab._chain_py.chain_final_units for the decision rule.
    """
    which = BACKEND if backend is None else backend
    if which == "cython":
        if _chain_cy is None:
            raise RuntimeError("compiled chain kernel is not available")
        arr = np.ascontiguousarray(values, dtype=np.int64)
        return int(_chain_cy.chain_final_units(arr, tol))
    if which == "python":
        return _chain_py.chain_final_units(values, tol)
    raise ValueError(f"unknown backend {which!r}")
