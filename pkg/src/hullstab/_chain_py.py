"""Pure-Python fallback for the scalar reduction chain.

Reference semantics for the compiled kernel; kept deliberately simple.
"""

from __future__ import annotations


def chain_final_units(values, tol: int) -> int:
    """Run the worst-case scan over integer distance units.

    The incumbent advances to the newcomer whenever the newcomer is
    farther, or so close (within ``tol`` units) that the two are
    indistinguishable at working precision.  Returns the final incumbent.
    """
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    vals = values.tolist() if hasattr(values, "tolist") else list(values)
    if not vals:
        raise ValueError("empty value sequence")
    it = iter(vals)
    inc = next(it)
    floor = inc - tol
    for x in it:
        if x >= floor:
            inc = x
            floor = x - tol
    return inc
