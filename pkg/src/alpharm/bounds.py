"""Closed-form sharp bounds for alpha-harmonic functions.

Value bounds (Hardy class ``h^p``)::

    |f(z)| <= B(r) (1 - r^2)^(-1/p) ||f||_p <= b (1 - r^2)^(-1/p) ||f||_p

Gradient bounds::

    |Df(z)| <= C(r) (1 - r^2)^(-1-1/p) ||f||_p,   |Df(0)| <= df0 ||f||_p

plus the Schwarz-type majorant for self-maps of the disk fixing 0 and the
conjectured sharp gradient bound for bounded data.  ``B``, ``b``, ``df0``
and the Schwarz majorant are exact closed forms; ``C`` needs one circle
integral (``V_term``).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import specfun
from ._backend import kernels
from .errors import DomainError
from .kernel import Params, c_alpha
from .quadrature import DEFAULT_QUAD, TWO_PI, QuadratureConfig, circle_integral
from .specfun import DEFAULT_SERIES, HypArg, SeriesConfig

_LOG2 = math.log(2.0)
_LOG_SQRT_PI = 0.5 * math.log(math.pi)


@dataclass(frozen=True)
class BoundValue:
    """A bound ``total = prefactor * coefficient`` multiplying ``||f||_p``."""

    prefactor: float
    coefficient: float

    @property
    def total(self) -> float:
        return self.prefactor * self.coefficient

    def to_dict(self) -> dict:
        return {**asdict(self), "total": self.total}


def m_exponent(params: Params) -> float:
    """``m = q (1 + alpha/2) - 1``, the power of ``1 + r^2 + 2 r cos b``."""
    q = params.q
    if math.isinf(q):
        raise DomainError("m is undefined for p = 1")
    return q * (1.0 + params.alpha / 2.0) - 1.0


def _one_minus_r2(r: float) -> float:
    return (1.0 - r) * (1.0 + r)


def _require_radius(r: float, closed: bool) -> None:
    if not (0.0 <= r <= 1.0 if closed else 0.0 <= r < 1.0):
        rng = "0 <= r <= 1" if closed else "0 <= r < 1"
        raise DomainError(f"radius must satisfy {rng}, got {r}")


def _power_cos_mean_r1(m: float) -> float:
    # (1/2pi) int (2 + 2 cos b)^m db = 4^m Gamma(m + 1/2) / (sqrt(pi) Gamma(m + 1))
    if not m > -0.5:
        raise DomainError(f"integral diverges at r = 1 for m = {m} <= -1/2")
    return math.exp(2 * m * _LOG2 + math.lgamma(m + 0.5) - math.lgamma(m + 1.0)
                    - _LOG_SQRT_PI)


def B_func(params: Params, r: float, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Sharp coefficient ``B_{alpha,p}(r)`` of the value bound (``p > 1``)."""
    if params.p == 1:
        raise DomainError("B_func needs p > 1; use B1_func for p = 1")
    _require_radius(r, closed=True)
    if r == 1.0:
        return b_const(params)
    q = params.q
    m = m_exponent(params)
    rr = r * r
    x = 4.0 * rr / (1.0 + rr) ** 2
    mean = (1.0 + rr) ** m * specfun.hyp2f1(0.5 - m / 2, -m / 2, 1.0, x, cfg)
    return c_alpha(params.alpha) * mean ** (1.0 / q)


def b_const(params: Params) -> float:
    """``b_{alpha,p} = max_r B_{alpha,p}(r) = B_{alpha,p}(1)``."""
    if params.p == 1:
        raise DomainError("b_const needs p > 1")
    q = params.q
    if not q * (1.0 + params.alpha / 2.0) > 0.5:
        raise DomainError("need q (1 + alpha/2) > 1/2 for a finite constant")
    return c_alpha(params.alpha) * _power_cos_mean_r1(m_exponent(params)) ** (1.0 / q)


def B1_func(alpha: float, r: float) -> float:
    """Coefficient of the ``p = 1`` value bound: ``c_alpha (1 + r)^(alpha+2)``.

    Multiplied by ``1/(1 - r^2)`` it is the supremum of the kernel.
    """
    _require_radius(r, closed=False)
    return c_alpha(alpha) * (1.0 + r) ** (alpha + 2.0)


def pointwise_bound(params: Params, r: float) -> BoundValue:
    """Right-hand side of ``|f(z)| <= total * ||f||_p`` at ``|z| = r``."""
    _require_radius(r, closed=False)
    if params.p == 1:
        return BoundValue(1.0 / _one_minus_r2(r), B1_func(params.alpha, r))
    pref = 1.0 if math.isinf(params.p) else _one_minus_r2(r) ** (-1.0 / params.p)
    return BoundValue(pref, B_func(params, r))


def P_term(alpha: float, r: float, q: float) -> float:
    return q * (2.0 * (1.0 + alpha)) ** (q - 1.0) * alpha * r


def Q_term(alpha: float, q: float) -> float:
    return (2.0 + alpha) ** q


def U_term(alpha: float, q: float) -> float:
    """``int_0^{2pi} (2 + 2 cos b)^m db`` in gamma form, ``m = q(1+alpha/2) - 1``."""
    m = q * (1.0 + alpha / 2.0) - 1.0
    if not m > -0.5:
        raise DomainError("need q (1 + alpha/2) > 1/2")
    return TWO_PI * _power_cos_mean_r1(m)


def extremal_direction(m: float) -> float:
    """Maximizer of ``eta -> int |cos(b + eta)|^q (1 + r^2 + 2 r cos b)^m db``.

    ``pi/2`` for ``0 <= m <= 1`` (flat at m = 0 and m = 1), ``0`` otherwise.
    """
    return math.pi / 2 if 0.0 <= m <= 1.0 else 0.0


def V_term(params: Params, r: float, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """``max_eta int_0^{2pi} |cos(b + eta)|^q (1 + r^2 + 2 r cos b)^m db``."""
    q = params.q
    if math.isinf(q):
        raise DomainError("V_term needs p > 1")
    _require_radius(r, closed=True)
    m = m_exponent(params)
    if r == 1.0 and not m > -0.5:
        raise DomainError("integral diverges at r = 1")
    eta = extremal_direction(m)

    def integrand(b):
        return np.abs(np.cos(b + eta)) ** q * kernels.power_cos_weight(r, m, b)

    return float(circle_integral(integrand, quad, peak=math.pi,
                                 width=max(1.0 - r, 1e-15),
                                 breakpoints=(math.pi / 2 - eta, 1.5 * math.pi - eta)))


def C_func(params: Params, r: float, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Coefficient ``C_{alpha,p}(r)`` of the gradient bound.

    ``c_alpha [(P U + Q V) / (2 pi)]^(1/q)``; the majorization behind ``P``
    holds for ``alpha >= 0`` only.
    """
    q = params.q
    if math.isinf(q):
        raise DomainError("the gradient bound needs p > 1")
    if params.alpha < 0:
        raise DomainError("the gradient bound C is only valid for alpha >= 0")
    _require_radius(r, closed=True)
    alpha = params.alpha
    inner = (P_term(alpha, r, q) * U_term(alpha, q)
             + Q_term(alpha, q) * V_term(params, r, quad)) / TWO_PI
    return c_alpha(alpha) * inner ** (1.0 / q)


def c_const(params: Params, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    return C_func(params, 1.0, quad)


def gradient_bound(params: Params, r: float,
                   quad: QuadratureConfig = DEFAULT_QUAD) -> BoundValue:
    """Right-hand side of ``|Df(z)| <= total * ||f||_p`` at ``|z| = r``."""
    _require_radius(r, closed=False)
    pref = _one_minus_r2(r) ** (-1.0 - (0.0 if math.isinf(params.p) else 1.0 / params.p))
    return BoundValue(pref, C_func(params, r, quad))


def df0_bound(params: Params) -> float:
    """Sharp constant in ``|Df(0)| <= df0 ||f||_p``."""
    q = params.q
    lead = (2.0 + params.alpha) * c_alpha(params.alpha)
    if math.isinf(q):
        return lead
    # normalized L^q norm of cos: [Gamma((1+q)/2) / (sqrt(pi) Gamma(1+q/2))]^(1/q)
    log_mean = math.lgamma((1.0 + q) / 2) - _LOG_SQRT_PI - math.lgamma(1.0 + q / 2)
    return lead * math.exp(log_mean / q)


def schwarz_bound(alpha: float, r: float, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Majorant of ``|f(z)|``, ``|z| = r``, for alpha-harmonic ``f`` mapping
    the disk into itself with ``f(0) = 0``."""
    _require_radius(r, closed=False)
    if r == 0.0:
        return 0.0
    rr = r * r
    x = 4.0 * rr / (1.0 + rr) ** 2
    lead = (2.0 * (2.0 + alpha) * r * _one_minus_r2(r) ** (1.0 + alpha)
            * c_alpha(alpha) / ((1.0 + rr) ** (2.0 + alpha / 2) * math.pi))
    series = specfun.hyp_pfq(
        HypArg((1.0, 1.0 + alpha / 4, 1.5 + alpha / 4), (1.5, 1.5), x), cfg)
    return lead * series


def grad_bound_conjecture(alpha: float, r: float) -> float:
    """Conjectured sharp bound on ``|Df(z)| / ||f||_inf``:
    ``c_alpha [(1+r)^(2+alpha) - (1-r)^(2+alpha)] / (pi r (1 - r^2))``."""
    if not alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    _require_radius(r, closed=False)
    k = 2.0 + alpha
    c = c_alpha(alpha)
    if r == 0.0:
        return 2.0 * k * c / math.pi
    # (1+r)^k - (1-r)^k without cancellation for small r
    diff = (1.0 - r) ** k * math.expm1(2.0 * k * math.atanh(r))
    return c * diff / (math.pi * r * _one_minus_r2(r))
