"""Pure-Python/numpy implementations of the hot loops.

Same call signatures as the compiled ``_ckernels`` module.  Used when the
extension is not built or when ``ALPHARM_BACKEND=python`` is set.
"""

import math

import numpy as np


def series_sum(upper, lower, x, rel_tol, max_terms, min_terms):
    """Sum a generalized hypergeometric series.

    Returns ``(value, n_terms, converged)``.  Summation is compensated
    (Neumaier); stopping needs the geometric tail bound
    ``|t_k| rho / (1 - rho) <= rel_tol |S|`` on three consecutive terms.
    """
    term = 1.0
    s = 1.0
    comp = 0.0
    quiet = 0
    ax = abs(x)
    for k in range(max_terms):
        ratio = x / (k + 1.0)
        for a in upper:
            ratio *= a + k
        for b in lower:
            ratio /= b + k
        term *= ratio
        if term == 0.0:
            return s + comp, k + 1, True
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        rho = max(abs(ratio), ax)
        if k + 1 >= min_terms and rho < 1.0:
            tail = abs(term) * rho / (1.0 - rho)
            if tail <= rel_tol * abs(s + comp) or tail < 1e-300:
                quiet += 1
                if quiet >= 3:
                    return s + comp, k + 2, True
            else:
                quiet = 0
        else:
            quiet = 0
        if not math.isfinite(s):
            break
    return s + comp, max_terms, False


def _dist2(r, d):
    # |1 - r e^{i d}|^2, stable near d = 0, r -> 1
    sh = np.sin(0.5 * d)
    return (1.0 - r) ** 2 + 4.0 * r * sh * sh


def kernel_eval(alpha, calpha, r, s, t):
    t = np.asarray(t, dtype=float)
    num = calpha * ((1.0 - r) * (1.0 + r)) ** (alpha + 1.0)
    return num * _dist2(r, t - s) ** (-0.5 * (alpha + 2.0))


def kernel_dbar_eval(alpha, calpha, r, s, t):
    t = np.asarray(t, dtype=float)
    one_m_r2 = (1.0 - r) * (1.0 + r)
    z = r * np.exp(1j * s)
    e = np.exp(1j * t)
    num = 2.0 * (1.0 + alpha) * z - e * (2.0 + alpha + alpha * r * r)
    den = r * np.exp(1j * (t - s)) - 1.0
    scale = calpha * one_m_r2**alpha * _dist2(r, t - s) ** (-0.5 * (alpha + 2.0))
    return scale * num / den


def power_cos_weight(r, m, b):
    # (1 + r^2 + 2 r cos b)^m written as (1-r)^2 + 4 r cos^2(b/2)
    b = np.asarray(b, dtype=float)
    ch = np.cos(0.5 * b)
    base = (1.0 - r) ** 2 + 4.0 * r * ch * ch
    with np.errstate(divide="ignore"):
        return base**m
