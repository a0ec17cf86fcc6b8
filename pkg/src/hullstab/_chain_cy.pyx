# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the scalar reduction chain.

Same contract as hullstab._chain_py.chain_final_units; this is the hot
inner loop of the Monte Carlo experiment.
"""


def chain_final_units(const long long[::1] values, long long tol):
    cdef Py_ssize_t i, n = values.shape[0]
    cdef long long inc, floor, x
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    if n == 0:
        raise ValueError("empty value sequence")
    inc = values[0]
    floor = inc - tol
    for i in range(1, n):
        x = values[i]
        if x >= floor:
            inc = x
            floor = x - tol
    return inc
