# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hypergeometric series summation; same contract as
``_pykernels.series_sum``."""

from libc.math cimport fabs, isfinite

import numpy as np


def series_sum(upper, lower, double x, double rel_tol, long max_terms, long min_terms):
    cdef double[::1] up = np.ascontiguousarray(upper, dtype=np.float64)
    cdef double[::1] lo = np.ascontiguousarray(lower, dtype=np.float64)
    cdef Py_ssize_t nu = up.shape[0], nl = lo.shape[0], i
    cdef long k, quiet = 0
    cdef double term = 1.0, s = 1.0, comp = 0.0, ratio, t, rho, tail
    cdef double ax = fabs(x)
    for k in range(max_terms):
        ratio = x / (k + 1.0)
        for i in range(nu):
            ratio *= up[i] + k
        for i in range(nl):
            ratio /= lo[i] + k
        term *= ratio
        if term == 0.0:
            return s + comp, k + 1, True
        t = s + term
        if fabs(s) >= fabs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        rho = fabs(ratio)
        if rho < ax:
            rho = ax
        if k + 1 >= min_terms and rho < 1.0:
            tail = fabs(term) * rho / (1.0 - rho)
            if tail <= rel_tol * fabs(s + comp) or tail < 1e-300:
                quiet += 1
                if quiet >= 3:
                    return s + comp, k + 2, True
            else:
                quiet = 0
        else:
            quiet = 0
        if not isfinite(s):
            break
    return s + comp, max_terms, False
