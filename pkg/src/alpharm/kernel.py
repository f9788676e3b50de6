"""The alpha-harmonic Poisson kernel and the extension operator.

For ``alpha > -1`` the kernel is

    K_alpha(w) = c_alpha (1 - |w|^2)^(alpha+1) / |1 - w|^(alpha+2),
    c_alpha    = Gamma(1 + alpha/2)^2 / Gamma(1 + alpha),

and the extension of boundary data ``f`` to the disk is the circle average
of ``K_alpha(z e^{-it}) f(e^{it})``.  Gradients are taken through the
Wirtinger derivative ``2 dbar_z K_alpha(z e^{-it})`` in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import specfun
from ._backend import kernels
from .errors import DomainError
from .quadrature import (DEFAULT_QUAD, TWO_PI, QuadratureConfig,
                         circle_integral)


@dataclass(frozen=True)
class Params:
    """Exponent ``alpha`` and integrability ``p``; ``q`` is the conjugate."""

    alpha: float
    p: float

    def __post_init__(self):
        if not self.alpha > -1:
            raise DomainError(f"alpha must exceed -1, got {self.alpha}")
        if not self.p >= 1:
            raise DomainError(f"p must be at least 1, got {self.p}")

    @property
    def q(self) -> float:
        if math.isinf(self.p):
            return 1.0
        if self.p == 1:
            return math.inf
        q = self.p / (self.p - 1.0)
        n = round(q)
        # 4/3 -> 4.000000000000001; snap so exponent arithmetic stays exact
        return float(n) if abs(q - n) < 1e-12 * q else q


@dataclass(frozen=True)
class DiskPoint:
    r: float
    s: float = 0.0

    def __post_init__(self):
        if not 0 <= self.r < 1:
            raise DomainError(f"need 0 <= r < 1, got {self.r}")
        object.__setattr__(self, "s", float(self.s) % TWO_PI)

    @classmethod
    def from_complex(cls, z: complex) -> "DiskPoint":
        return cls(abs(z), math.atan2(z.imag, z.real))

    @property
    def z(self) -> complex:
        return self.r * complex(math.cos(self.s), math.sin(self.s))

    def rotated(self, angle: float) -> "DiskPoint":
        return DiskPoint(self.r, self.s + angle)


@dataclass(frozen=True)
class DerivMatrix:
    fz: complex
    fzbar: complex

    @property
    def op_norm(self) -> float:
        return abs(self.fz) + abs(self.fzbar)

    def as_real_matrix(self) -> np.ndarray:
        """``[[u_x, u_y], [v_x, v_y]]`` for ``f = u + i v``."""
        fx = self.fz + self.fzbar
        fy = 1j * (self.fz - self.fzbar)
        return np.array([[fx.real, fy.real], [fx.imag, fy.imag]])


def c_alpha(alpha: float) -> float:
    """Normalization ``Gamma(1 + alpha/2)^2 / Gamma(1 + alpha)``."""
    if not alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    return math.exp(2 * math.lgamma(1 + alpha / 2) - math.lgamma(1 + alpha))


def kernel_value(alpha: float, z: DiskPoint, t):
    """``K_alpha(z e^{-it})``; vectorized over ``t``."""
    out = kernels.kernel_eval(alpha, c_alpha(alpha), z.r, z.s, np.asarray(t, float))
    return out if np.ndim(t) else float(out)


def kernel_dbar(alpha: float, z: DiskPoint, t):
    """``2 dbar_z [K_alpha(z e^{-it})]``, the complex gradient of the kernel."""
    out = kernels.kernel_dbar_eval(alpha, c_alpha(alpha), z.r, z.s,
                                   np.asarray(t, float))
    return out if np.ndim(t) else complex(out)


class BoundaryFunction:
    """Boundary data on the unit circle, evaluated at angles ``t``.

    Instances come from the named constructors below.  ``breakpoints`` lists
    angles where the data jumps or has a kink, so that quadrature can split
    there.
    """

    def __init__(self, kind: str, func: Callable[[np.ndarray], np.ndarray],
                 breakpoints: Sequence[float] = (), info: dict | None = None):
        self.kind = kind
        self._func = func
        self.breakpoints = tuple(float(b) % TWO_PI for b in breakpoints)
        self.info = dict(info or {})

    def __call__(self, t):
        return self._func(np.asarray(t, dtype=float))

    def __repr__(self):
        return f"BoundaryFunction({self.kind!r}, {self.info})"

    def rotated(self, angle: float) -> "BoundaryFunction":
        """Data ``t -> f(t - angle)``."""
        return BoundaryFunction(f"{self.kind}+rot", lambda t: self._func(t - angle),
                                [b + angle for b in self.breakpoints],
                                {**self.info, "rotation": angle})

    def scaled(self, factor: complex) -> "BoundaryFunction":
        return BoundaryFunction(self.kind, lambda t: factor * self._func(t),
                                self.breakpoints, {**self.info, "scale": factor})

    def lp_norm(self, p: float, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
        """Normalized ``L^p`` norm over the circle."""
        if math.isinf(p):
            t = np.linspace(0.0, TWO_PI, 8192, endpoint=False)
            t = np.concatenate([t, np.asarray(self.breakpoints) + 1e-12,
                                np.asarray(self.breakpoints) - 1e-12])
            return float(np.max(np.abs(self(t))))
        bps = self.breakpoints
        if not (p % 2 == 0 or bps):
            probe = self(np.linspace(0.0, TWO_PI, 64))
            if np.isrealobj(probe):
                bps = tuple(_periodic_roots(lambda t: self(t)))
        val = circle_integral(lambda t: np.abs(self(t)) ** p, quad, breakpoints=bps)
        return float(val / TWO_PI) ** (1.0 / p)

    # constructors

    @classmethod
    def constant(cls, c: complex = 1.0) -> "BoundaryFunction":
        return cls("constant", lambda t: np.full(t.shape, c), info={"c": c})

    @classmethod
    def cosine(cls) -> "BoundaryFunction":
        return cls("cosine", np.cos)

    @classmethod
    def sign_of_sine(cls) -> "BoundaryFunction":
        """+1 on the upper half circle, -1 on the lower half."""
        return cls("sign_of_sine", lambda t: np.where(np.sin(t) >= 0, 1.0, -1.0),
                   breakpoints=(0.0, math.pi))

    @classmethod
    def from_callable(cls, func, breakpoints: Sequence[float] = (),
                      label: str = "custom") -> "BoundaryFunction":
        return cls(label, func, breakpoints)

    @classmethod
    def sampled(cls, values) -> "BoundaryFunction":
        """Trigonometric interpolant of samples on a uniform grid of ``[0, 2pi)``."""
        values = np.asarray(values, dtype=complex)
        n = values.size
        if n < 16:
            raise DomainError("sampled boundary data needs at least 16 points")
        grid = TWO_PI * np.arange(n) / n
        ks = np.arange(-(n // 2), n - n // 2)
        coef = np.exp(-1j * np.outer(ks, grid)) @ values / n
        if n % 2 == 0:
            # split the Nyquist mode so real samples give a real interpolant
            coef = np.concatenate([coef, coef[:1] / 2])
            coef[0] /= 2
            ks = np.concatenate([ks, [n // 2]])
        real = bool(np.all(values.imag == 0))

        def func(t):
            flat = t.ravel()
            out = np.empty(flat.size, dtype=complex)
            for i in range(0, flat.size, 4096):
                chunk = flat[i:i + 4096]
                out[i:i + 4096] = np.exp(1j * np.outer(chunk, ks)) @ coef
            out = out.reshape(t.shape)
            return out.real if real else out

        return cls("sampled", func, info={"n": n})

    @classmethod
    def holder_extremal(cls, params: Params, z: DiskPoint,
                        quad: QuadratureConfig = DEFAULT_QUAD) -> "BoundaryFunction":
        """Unit-norm data attaining Hoelder equality for the value at ``z``.

        Proportional to ``K_alpha(z e^{-it})^(q-1)``; identically 1 for
        ``p = inf``.
        """
        q = params.q
        if math.isinf(q):
            raise DomainError("no L^1 extremal function exists (q = inf)")
        info = {"alpha": params.alpha, "p": params.p, "r": z.r, "s": z.s}
        if q == 1.0:
            return cls("holder_extremal", lambda t: np.ones(t.shape), info=info)
        alpha = params.alpha
        power = lambda t: kernel_value(alpha, z, t) ** (q - 1.0)
        mean_kq = circle_integral(lambda t: kernel_value(alpha, z, t) ** q, quad,
                                  peak=z.s, width=1.0 - z.r) / TWO_PI
        norm = mean_kq ** (1.0 / params.p)
        return cls("holder_extremal", lambda t: power(t) / norm, info=info)

    @classmethod
    def gradient_extremal(cls, params: Params, z: DiskPoint,
                          direction: float | None = None,
                          quad: QuadratureConfig = DEFAULT_QUAD) -> "BoundaryFunction":
        """Unit-norm real data attaining Hoelder equality for the directional
        derivative at ``z`` along ``e^{i direction}``.

        With ``g(t) = Re[2 dbar K(z e^{-it}) e^{-i direction}]`` the data is
        ``sgn(g) |g|^(q-1)`` normalized.  When ``direction`` is None the
        direction maximizing ``||g||_q`` is searched for.
        """
        q = params.q
        if math.isinf(q):
            raise DomainError("no L^1 extremal function exists (q = inf)")
        alpha = params.alpha
        if direction is None:
            direction = _best_direction(alpha, q, z, quad)

        def g(t):
            return np.real(kernel_dbar(alpha, z, t) * np.exp(-1j * direction))

        roots = _periodic_roots(g)
        info = {"alpha": alpha, "p": params.p, "r": z.r, "s": z.s,
                "direction": direction}
        if q == 1.0:
            return cls("gradient_extremal", lambda t: np.sign(g(t)), roots, info)
        mean_gq = circle_integral(lambda t: np.abs(g(t)) ** q, quad,
                                  peak=z.s, width=1.0 - z.r,
                                  breakpoints=roots) / TWO_PI
        norm = mean_gq ** (1.0 / params.p)
        return cls("gradient_extremal",
                   lambda t: np.sign(g(t)) * np.abs(g(t)) ** (q - 1.0) / norm,
                   roots, info)


def _periodic_roots(g, n: int = 4096) -> list[float]:
    t = np.linspace(0.0, TWO_PI, n + 1)
    v = g(t)
    roots = []
    for i in np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)[0]:
        roots.append(brentq(lambda x: float(g(np.array([x]))[0]),
                            t[i], t[i + 1], xtol=1e-15))
    roots.extend(t[:-1][v[:-1] == 0.0])
    return roots


def _direction_norm(alpha, q, z, tau, quad):
    def g(t):
        return np.abs(np.real(kernel_dbar(alpha, z, t) * np.exp(-1j * tau))) ** q

    return circle_integral(g, quad, peak=z.s, width=1.0 - z.r,
                           breakpoints=_periodic_roots(
                               lambda t: np.real(kernel_dbar(alpha, z, t)
                                                 * np.exp(-1j * tau)), 512))


def _best_direction(alpha, q, z, quad) -> float:
    if z.r == 0.0:
        return 0.0
    coarse = QuadratureConfig(1e-8, 1e-6, quad.max_depth)
    taus = np.linspace(0.0, math.pi, 37)
    vals = [_direction_norm(alpha, q, z, tau, coarse) for tau in taus]
    i = int(np.argmax(vals))
    h = taus[1] - taus[0]
    res = minimize_scalar(lambda tau: -_direction_norm(alpha, q, z, tau, coarse),
                          bounds=(taus[i] - h, taus[i] + h), method="bounded",
                          options={"xatol": 1e-9})
    return float(res.x) % math.pi


def extend(alpha: float, f: BoundaryFunction, z: DiskPoint,
           quad: QuadratureConfig = DEFAULT_QUAD) -> complex:
    """The alpha-harmonic extension of ``f`` evaluated at ``z``."""
    val = circle_integral(lambda t: kernel_value(alpha, z, t) * f(t), quad,
                          peak=z.s, width=1.0 - z.r, breakpoints=f.breakpoints)
    return complex(val / TWO_PI)


def deriv_matrix(alpha: float, f: BoundaryFunction, z: DiskPoint,
                 quad: QuadratureConfig = DEFAULT_QUAD) -> DerivMatrix:
    """Wirtinger derivatives of the extension of ``f`` at ``z``."""

    def integrand(t):
        half = 0.5 * kernel_dbar(alpha, z, t)
        ft = f(t)
        return np.stack([np.conj(half) * ft, half * ft])

    fz, fzbar = circle_integral(integrand, quad, peak=z.s, width=1.0 - z.r,
                                breakpoints=f.breakpoints) / TWO_PI
    return DerivMatrix(complex(fz), complex(fzbar))


def kernel_mean(alpha: float, z: DiskPoint,
                quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Circle average of the kernel, computed by quadrature."""
    val = circle_integral(lambda t: kernel_value(alpha, z, t), quad,
                          peak=z.s, width=1.0 - z.r)
    return float(val / TWO_PI)


def kernel_mean_closed(alpha: float, r: float) -> float:
    """``c_alpha (1-r^2)^(1+alpha) 2F1(1+alpha/2, 1+alpha/2; 1; r^2)``."""
    a = 1.0 + alpha / 2
    return (c_alpha(alpha) * ((1 - r) * (1 + r)) ** (1 + alpha)
            * specfun.hyp2f1(a, a, 1.0, r * r))
