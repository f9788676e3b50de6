"""Special functions: gamma, Pochhammer symbols, real binomials and
hypergeometric series.

The hypergeometric routines sum their defining power series with a
compensated accumulator and a geometric tail bound.  ``hyp2f1`` adds the
``x -> 1 - x`` connection formulas so that arguments close to 1 (disk points
close to the boundary) stay cheap; ``hyp_pfq`` is the plain series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import digamma

from ._backend import kernels
from .errors import DomainError, NonConvergenceError

_INT_SNAP = 1e-9
_CONNECT_ABOVE = 0.9


@dataclass(frozen=True)
class SeriesConfig:
    rel_tol: float = 1e-15
    max_terms: int = 2_000_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


DEFAULT_SERIES = SeriesConfig()


@dataclass(frozen=True)
class HypArg:
    """Parameters and argument of ``mFn(upper; lower; x)``."""

    upper: tuple[float, ...]
    lower: tuple[float, ...]
    x: float

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(float(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in self.lower))
        for b in self.lower:
            if _is_nonpositive_int(b):
                raise DomainError(f"lower parameter {b} is a nonpositive integer")
        terminating = any(_is_nonpositive_int(a) for a in self.upper)
        if abs(self.x) > 1 and not terminating:
            raise DomainError(f"|x| = {abs(self.x)} > 1")
        if abs(self.x) == 1 and not terminating:
            if not sum(self.lower) - sum(self.upper) > 0:
                raise DomainError("series diverges at |x| = 1")


def _nearest_int(x: float) -> int | None:
    n = round(x)
    if abs(x - n) <= _INT_SNAP * max(1.0, abs(x)):
        return int(n)
    return None


def _is_nonpositive_int(x: float) -> bool:
    n = _nearest_int(x)
    return n is not None and n <= 0


def gamma(x: float) -> float:
    """Gamma function, raising `DomainError` at the poles."""
    if x <= 0 and float(x).is_integer():
        raise DomainError(f"gamma has a pole at {x}")
    return math.gamma(x)


def rgamma(x: float) -> float:
    """Reciprocal gamma, zero at the poles."""
    if x <= 0 and float(x).is_integer():
        return 0.0
    return 1.0 / math.gamma(x)


def pochhammer(y: float, k: int) -> float:
    """Rising factorial ``y (y+1) ... (y+k-1)``."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    out = 1.0
    for j in range(k):
        out *= y + j
    return out


def binom_real(a: float, k: int) -> float:
    """Binomial coefficient ``a (a-1) ... (a-k+1) / k!`` for real ``a``."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    out = 1.0
    for j in range(k):
        out *= (a - j) / (j + 1)
    return out


def _sum_series(upper, lower, x, cfg: SeriesConfig) -> float:
    params = list(upper) + list(lower)
    # Tail bound is only trusted once every shifted parameter is positive.
    min_terms = int(max([0.0] + [-p for p in params])) + 2
    value, n, ok = kernels.series_sum(
        [float(a) for a in upper], [float(b) for b in lower], float(x),
        float(cfg.rel_tol), int(cfg.max_terms), min_terms,
    )
    if not ok:
        raise NonConvergenceError(
            f"hypergeometric series at x={x} not converged after {n} terms"
        )
    return value


def _terminating_sum(upper, lower, x) -> float:
    # Exact polynomial for a nonpositive-integer upper parameter.
    n = min(-_nearest_int(a) for a in upper if _is_nonpositive_int(a))
    upper = [float(-n) if _is_nonpositive_int(a) and -_nearest_int(a) == n else a
             for a in upper]
    total, term = 1.0, 1.0
    for k in range(n):
        num = x
        for a in upper:
            num *= a + k
        for b in lower:
            num /= b + k
        term *= num / (k + 1)
        total += term
    return total


def _gauss_sum(a, b, c) -> float:
    return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)


def _connect_noninteger(a, b, c, x, d, cfg) -> float:
    y = 1.0 - x
    out = 0.0
    w1 = gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b)
    if w1 != 0.0:
        out += w1 * _hyp2f1_near0(a, b, 1.0 - d, y, cfg)
    w2 = gamma(c) * gamma(-d) * rgamma(a) * rgamma(b)
    if w2 != 0.0:
        out += w2 * y**d * _hyp2f1_near0(c - a, c - b, 1.0 + d, y, cfg)
    return out


def _connect_integer(a, b, n, x, cfg) -> float:
    # c = a + b + n with n >= 0 an integer: logarithmic case.
    y = 1.0 - x
    c = a + b + n
    log_y = math.log(y)
    head = 0.0
    if n > 0:
        term = 1.0
        acc = 1.0
        for k in range(1, n):
            term *= (a + k - 1) * (b + k - 1) / (k * (k - n)) * y
            acc += term
        head = gamma(n) * gamma(c) * rgamma(a + n) * rgamma(b + n) * acc
    pref = gamma(c) * rgamma(a) * rgamma(b)
    if pref == 0.0:
        return head
    # sum_k (a+n)_k (b+n)_k / (k! (k+n)!) y^k [log y - psi(k+1) - psi(k+n+1)
    #                                           + psi(a+k+n) + psi(b+k+n)]
    total = 0.0
    coef = 1.0 / math.factorial(n)
    quiet = 0
    for k in range(cfg.max_terms):
        bracket = (log_y - digamma(k + 1.0) - digamma(k + n + 1.0)
                   + digamma(a + k + n) + digamma(b + k + n))
        piece = coef * bracket
        total += piece
        if k > abs(a) + abs(b) + n + 2 and abs(piece) <= cfg.rel_tol * abs(total):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
        coef *= (a + n + k) * (b + n + k) / ((k + 1) * (k + n + 1)) * y
        if coef == 0.0:
            break
    else:
        raise NonConvergenceError(f"log-case connection series at x={x}")
    return head - (x - 1.0) ** n * pref * total


def _hyp2f1_near0(a, b, c, x, cfg) -> float:
    if x == 0.0:
        return 1.0
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _terminating_sum([a, b], [c], x)
    return _sum_series((a, b), (c,), x, cfg)


def hyp2f1(a: float, b: float, c: float, x: float,
           cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Gauss hypergeometric function ``2F1(a, b; c; x)`` for real arguments.

    Valid for ``|x| < 1`` and for ``x = 1`` when ``c - a - b > 0``.
    Arguments above 0.9 go through the connection formulas around ``x = 1``.
    """
    if _is_nonpositive_int(c):
        raise DomainError(f"c = {c} is a nonpositive integer")
    if x == 0.0:
        return 1.0
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _terminating_sum([a, b], [c], x)
    d = c - a - b
    if x == 1.0:
        if not d > 0:
            raise DomainError("2F1 diverges at x = 1 unless c - a - b > 0")
        return _gauss_sum(a, b, c)
    if abs(x) > 1.0:
        raise DomainError(f"|x| = {abs(x)} > 1")
    if x <= _CONNECT_ABOVE:
        return _sum_series((a, b), (c,), x, cfg)
    n = _nearest_int(d)
    if n is not None:
        if n < 0:
            # Euler: 2F1(a,b;c;x) = (1-x)^(c-a-b) 2F1(c-a, c-b; c; x)
            a2, b2 = c - a, c - b
            if _is_nonpositive_int(a2) or _is_nonpositive_int(b2):
                return (1.0 - x) ** d * _terminating_sum([a2, b2], [c], x)
            return (1.0 - x) ** d * _connect_integer(a2, b2, -n, x, cfg)
        return _connect_integer(a, b, n, x, cfg)
    if abs(d - round(d)) < 1e-4:
        # Cancellation in the connection formula; fall back to the series.
        return _sum_series((a, b), (c,), x, cfg)
    return _connect_noninteger(a, b, c, x, d, cfg)


def hyp_pfq(arg: HypArg, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Generalized hypergeometric series ``mFn(upper; lower; x)``."""
    if arg.x == 0.0:
        return 1.0
    if any(_is_nonpositive_int(a) for a in arg.upper):
        return _terminating_sum(list(arg.upper), list(arg.lower), arg.x)
    return _sum_series(arg.upper, arg.lower, arg.x, cfg)


def hyp3f2(a1, a2, a3, b1, b2, x, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    return hyp_pfq(HypArg((a1, a2, a3), (b1, b2), x), cfg)
