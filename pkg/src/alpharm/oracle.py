"""Brute-force verifiers for the closed forms.

Everything here integrates the original circle integrals directly or scans
a grid; nothing calls the hypergeometric closed forms, so agreement between
the two routes is a meaningful check.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .bounds import grad_bound_conjecture, schwarz_bound
from .errors import DomainError, PreconditionError
from .kernel import (BoundaryFunction, DiskPoint, Params, c_alpha, extend,
                     kernel_value)
from .quadrature import DEFAULT_QUAD, TWO_PI, QuadratureConfig, circle_integral


@dataclass(frozen=True)
class GridSpec:
    """Uniform inclusive grid ``lo, ..., hi`` with ``n`` points."""

    lo: float
    hi: float
    n: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"grid needs lo < hi, got {self.lo}, {self.hi}")
        if self.n < 2:
            raise DomainError("grid needs at least 2 points")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        lo, hi, n = text.split(":")
        return cls(float(lo), float(hi), int(n))

    @property
    def step(self) -> float:
        return (self.hi - self.lo) / (self.n - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.n)

    def refined(self) -> "GridSpec":
        """The ``2n - 1`` grid containing every point of this one."""
        return GridSpec(self.lo, self.hi, 2 * self.n - 1)

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "n": self.n}


@dataclass
class ScanReport:
    name: str
    grid: dict
    argmax: dict
    max_value: float
    claim_holds: bool
    tolerance: float
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "grid": {k: g.to_dict() for k, g in self.grid.items()},
            "argmax": self.argmax,
            "max_value": self.max_value,
            "claim_holds": self.claim_holds,
            "tolerance": self.tolerance,
            "details": self.details,
        }


def _map(func, items, workers: int = 1):
    if workers <= 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _edge_width(r: float) -> float:
    return max(1.0 - r, 1e-15)


def integral_power_cos(m: float, r: float,
                       quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """``int_0^{2pi} (1 + r^2 + 2 r cos s)^m ds`` by quadrature."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"radius {r} out of range")
    if r == 1.0 and not m > -0.5:
        raise DomainError("integral diverges at r = 1 for m <= -1/2")
    # shifted by pi so the peak (a singularity when r = 1, m < 0) sits at 0,
    # where offsets from it are exact: 1 + r^2 - 2 r cos u = (1-r)^2 + 4 r sin^2(u/2)
    def integrand(u):
        return ((1.0 - r) ** 2 + 4.0 * r * np.sin(0.5 * u) ** 2) ** m

    # a true singularity: grade down far enough that the panel holding it is negligible
    width = 1e-150 if r == 1.0 and m < 0 else _edge_width(r)
    return float(circle_integral(integrand, quad, peak=0.0, width=width))


def q_norm_kernel(params: Params, r: float,
                  quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Normalized ``L^q`` norm of ``t -> K_alpha(r e^{-it})``."""
    q = params.q
    if math.isinf(q):
        raise DomainError("q_norm_kernel needs p > 1")
    z = DiskPoint(r, 0.0)
    val = circle_integral(lambda t: kernel_value(params.alpha, z, t) ** q, quad,
                          peak=0.0, width=1.0 - r)
    return float(val / TWO_PI) ** (1.0 / q)


def lemma_h(q: float, r: float, m: float, y: float,
            quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """``H(y) = int_0^{2pi} |cos x|^q (1 + r^2 + 2 r cos(x - y))^m dx``."""

    def integrand(x):
        return np.abs(np.cos(x)) ** q * kernels.power_cos_weight(r, m, x - y)

    return float(circle_integral(integrand, quad, peak=y + math.pi,
                                 width=_edge_width(r),
                                 breakpoints=(math.pi / 2, 1.5 * math.pi)))


def _classify(ys, vals, tol) -> str:
    top = float(np.max(vals))
    if float(np.max(vals) - np.min(vals)) <= tol * abs(top):
        return "flat"
    y = float(ys[int(np.argmax(vals))]) % math.pi
    step = float(ys[1] - ys[0]) if len(ys) > 1 else math.pi
    if min(y, math.pi - y) <= step:
        return "0"
    if abs(y - math.pi / 2) <= step:
        return "pi/2"
    return f"{y:.6g}"


def lemma_marte_scan(q: float, r: float, m: float, grid: GridSpec,
                     quad: QuadratureConfig = DEFAULT_QUAD,
                     tol: float = 1e-8) -> ScanReport:
    """Scan ``H(y)`` over ``grid`` and test where its maximum sits.

    The claim under test: the maximum is at ``pi/2`` for ``m <= 1`` and at
    ``0`` for ``m >= 1`` (constant at ``m = 1``).
    """
    if q < 0:
        raise DomainError("q must be nonnegative")
    if r == 1.0 and not m > -0.5:
        raise DomainError("H diverges at r = 1 for m <= -1/2")
    ys = grid.points()
    vals = np.array([lemma_h(q, r, m, y, quad) for y in ys])
    i = int(np.argmax(vals))
    predicted = math.pi / 2 if m <= 1 else 0.0
    h_pred = lemma_h(q, r, m, predicted, quad)
    top = float(vals[i])
    holds = h_pred >= top - tol * abs(top)
    classification = _classify(ys, vals, tol)
    if m == 1:
        holds = holds and classification == "flat"
    return ScanReport(
        "lemma-marte", {"y": grid}, {"y": float(ys[i])}, top, bool(holds), tol,
        {"q": q, "r": r, "m": m, "predicted": predicted, "value_at_predicted": h_pred,
         "classification": classification, "min_value": float(vals.min())},
    )


def lemma_b(k: float, m: float, r: float, x: float,
            quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """``B(r, x) = int_{-pi}^{pi} |cos(b - x)|^k (1 + r^2 + 2 r cos b)^m db``."""

    def integrand(b):
        return np.abs(np.cos(b - x)) ** k * kernels.power_cos_weight(r, m, b)

    return float(circle_integral(integrand, quad, peak=math.pi, width=_edge_width(r),
                                 breakpoints=(x + math.pi / 2, x - math.pi / 2)))


def lemma_bele_scan(k: float, m: float, r_grid: GridSpec, x_grid: GridSpec,
                    quad: QuadratureConfig = DEFAULT_QUAD,
                    tol: float = 1e-8) -> ScanReport:
    """Check ``B(r, x) <= B(1, x*)`` on the grid, ``x* = 0`` if ``m > 1``
    else ``pi/2``."""
    if k < 0 or not m > -0.5:
        raise DomainError("need k >= 0 and m > -1/2")
    if r_grid.lo < 0 or r_grid.hi > 1:
        raise DomainError("radii must lie in [0, 1]")
    x_star = 0.0 if m > 1 else math.pi / 2
    ceiling = lemma_b(k, m, 1.0, x_star, quad)
    rs, xs = r_grid.points(), x_grid.points()
    table = np.array([[lemma_b(k, m, r, x, quad) for x in xs] for r in rs])
    i, j = np.unravel_index(int(np.argmax(table)), table.shape)
    top = float(table[i, j])
    holds = top <= ceiling * (1 + tol)
    return ScanReport(
        "lemma-bele", {"r": r_grid, "x": x_grid},
        {"r": float(rs[i]), "x": float(xs[j])}, top, bool(holds), tol,
        {"k": k, "m": m, "x_star": x_star, "ceiling": ceiling},
    )


def phi_roots(alpha: float, r: float, t: float) -> tuple[float, float]:
    """Zeros ``b1, b2`` of ``(2+alpha) cos(b+t) - alpha r cos t``."""
    c = math.acos(alpha * r * math.cos(t) / (2.0 + alpha))
    return -t - c, -t + c


def phi(alpha: float, r: float, t: float,
        quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """``Phi(t) = int_{-pi}^{pi} |(2+alpha) cos(b+t) - alpha r cos t|
    (1 + r^2 + 2 r cos b)^(alpha/2) / (1 - r^2) db``."""
    if not 0.0 < r < 1.0:
        raise DomainError("phi needs 0 < r < 1")
    lin = alpha * r * math.cos(t)

    def integrand(b):
        return (np.abs((2.0 + alpha) * np.cos(b + t) - lin)
                * kernels.power_cos_weight(r, alpha / 2.0, b))

    val = circle_integral(integrand, quad, peak=math.pi, width=1.0 - r,
                          breakpoints=phi_roots(alpha, r, t))
    return float(val) / ((1.0 - r) * (1.0 + r))


def phi_prime_closed(alpha: float, r: float, t: float) -> float:
    """Closed form of ``Phi'(t)`` for ``alpha = 2`` and ``alpha = 4``."""
    ct, st = math.cos(t), math.sin(t)
    one = (1.0 - r) * (1.0 + r)
    if alpha == 2:
        inner = (2.0 * one * math.asin(0.5 * r * ct)
                 + 3.0 * r * ct * math.sqrt(4.0 - r * r * ct * ct))
        return 4.0 * r * inner * st / one
    if alpha == 4:
        inner = (27.0 * (2.0 - r**2 - r**4) * math.asin(2.0 * r * ct / 3.0) * st
                 + r * math.sqrt(9.0 - 4.0 * r * r * ct * ct)
                 * (9.0 + 31.0 * r * r + 10.0 * r * r * math.cos(2.0 * t))
                 * math.sin(2.0 * t))
        return 16.0 * r / (27.0 * one) * inner
    raise DomainError("closed form of Phi' known only for alpha in {2, 4}")


_RECONCILE_RADII = (0.25, 0.5, 0.75)


def phi_normalization(quad: QuadratureConfig = DEFAULT_QUAD) -> tuple[float, float]:
    """Factor ``kappa`` with ``grad_bound_conjecture = kappa c_alpha Phi(pi/2)``.

    Fitted on the proven case alpha = 2 at three radii; returns
    ``(kappa, relative spread)``.
    """
    ks = [grad_bound_conjecture(2.0, r) / (c_alpha(2.0) * phi(2.0, r, math.pi / 2, quad))
          for r in _RECONCILE_RADII]
    kappa = float(np.mean(ks))
    return kappa, float((max(ks) - min(ks)) / kappa)


def conjecture_scan(alpha: float, r_grid: GridSpec, t_grid: GridSpec,
                    quad: QuadratureConfig = DEFAULT_QUAD, tol: float = 1e-9,
                    workers: int = 1) -> ScanReport:
    """For each radius, locate ``argmax_t Phi(t)`` on ``[0, pi/2]``.

    The claim: the maximum sits at ``t = pi/2`` for every radius, which is
    equivalent to the conjectured sharp gradient bound.
    """
    if not alpha > 0:
        raise DomainError("the conjecture concerns alpha > 0")
    if r_grid.lo <= 0 or r_grid.hi >= 1:
        raise DomainError("radii must lie in (0, 1)")
    kappa, spread = phi_normalization(quad)
    ts = t_grid.points()
    ca = c_alpha(alpha)

    def row(r):
        vals = np.array([phi(alpha, r, t, quad) for t in ts])
        i = int(np.argmax(vals))
        at_half = phi(alpha, r, math.pi / 2, quad)
        top = max(float(vals[i]), at_half)
        ok = at_half >= top - tol * top
        return {"r": float(r), "argmax_t": float(ts[i]), "max_phi": top,
                "phi_pi_half": at_half, "at_pi_half": bool(ok),
                "implied_bound": kappa * ca * top,
                "conjectured_bound": grad_bound_conjecture(alpha, float(r))}

    rows = _map(row, r_grid.points(), workers)
    worst = max(rows, key=lambda d: d["max_phi"] - d["phi_pi_half"])
    return ScanReport(
        "conjecture", {"r": r_grid, "t": t_grid},
        {"r": worst["r"], "t": worst["argmax_t"]},
        max(d["max_phi"] for d in rows),
        all(d["at_pi_half"] for d in rows), tol,
        {"alpha": alpha, "kappa": kappa, "kappa_spread": spread, "rows": rows},
    )


def schwarz_oracle(alpha: float, r: float,
                   quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """``(c_alpha/2pi) [int_0^pi - int_pi^{2pi}] (1-r^2)^(alpha+1)
    (1 + r^2 - 2 r sin t)^(-alpha/2-1) dt`` by quadrature."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"need 0 <= r < 1, got {r}")
    num = ((1.0 - r) * (1.0 + r)) ** (alpha + 1.0)

    def integrand(t):
        # 1 + r^2 - 2 r sin t = (1 - r)^2 + 4 r sin^2(pi/4 - t/2)
        base = (1.0 - r) ** 2 + 4.0 * r * np.sin(math.pi / 4 - t / 2) ** 2
        return np.where(np.sin(t) >= 0, 1.0, -1.0) * num * base ** (-alpha / 2 - 1.0)

    val = circle_integral(integrand, quad, peak=math.pi / 2, width=1.0 - r,
                          breakpoints=(0.0, math.pi))
    return c_alpha(alpha) / TWO_PI * float(val)


def schwarz_monotone_check(alpha: float, f: BoundaryFunction, r_grid: GridSpec,
                           s_grid: GridSpec, quad: QuadratureConfig = DEFAULT_QUAD,
                           tol: float = 1e-9) -> ScanReport:
    """Check ``|P_alpha[f](z)| <= schwarz_bound(alpha, |z|)`` on a polar grid.

    ``f`` must be bounded by 1 and its extension must vanish at the origin.
    """
    if f.lp_norm(math.inf) > 1.0 + 1e-12:
        raise PreconditionError("boundary data exceeds 1 in modulus")
    at0 = abs(extend(alpha, f, DiskPoint(0.0, 0.0), quad))
    if at0 > 1e-9:
        raise PreconditionError(f"extension at 0 is {at0:.3g}, not 0")
    worst_excess, where, worst_ratio = -math.inf, None, 0.0
    for r in r_grid.points():
        if not 0.0 <= r < 1.0:
            raise DomainError("radii must lie in [0, 1)")
        bound = schwarz_bound(alpha, float(r))
        for s in s_grid.points():
            val = abs(extend(alpha, f, DiskPoint(float(r), float(s)), quad))
            if val - bound > worst_excess:
                worst_excess, where = val - bound, {"r": float(r), "s": float(s)}
            if bound > 0:
                worst_ratio = max(worst_ratio, val / bound)
    return ScanReport(
        "schwarz-monotone", {"r": r_grid, "s": s_grid}, where, worst_excess,
        bool(worst_excess <= tol), tol,
        {"alpha": alpha, "max_ratio": worst_ratio, "kind": f.kind},
    )


# Seeded random boundary data

def random_trig(rng: np.random.Generator, degree: int = 6) -> BoundaryFunction:
    """Real trigonometric polynomial with decaying random coefficients."""
    k = np.arange(degree + 1)
    a = rng.standard_normal(degree + 1) / (1 + k)
    b = rng.standard_normal(degree + 1) / (1 + k)

    def func(t):
        kt = np.multiply.outer(t, k)
        return np.cos(kt) @ a + np.sin(kt) @ b

    return BoundaryFunction("random_trig", func)


def random_sign_pattern(rng: np.random.Generator, pieces: int = 6,
                        antiperiodic: bool = False) -> BoundaryFunction:
    """Random +-1 step function; with ``antiperiodic`` it satisfies
    ``f(t + pi) = -f(t)`` and so has mean zero."""
    span = math.pi if antiperiodic else TWO_PI
    cuts = np.sort(rng.uniform(0.0, span, pieces - 1))
    signs = rng.choice([-1.0, 1.0], size=pieces)

    def base(t):
        return signs[np.searchsorted(cuts, t, side="right")]

    if antiperiodic:
        def func(t):
            t = np.mod(t, TWO_PI)
            upper = t >= math.pi
            return np.where(upper, -base(t - math.pi * upper), base(t))
        bps = list(cuts) + list(cuts + math.pi) + [0.0, math.pi]
    else:
        def func(t):
            return base(np.mod(t, TWO_PI))
        bps = list(cuts) + [0.0]
    return BoundaryFunction("random_sign", func, bps)


def random_unimodular(rng: np.random.Generator, degree: int = 3) -> BoundaryFunction:
    """``exp(i phi(t))`` with ``phi(t + pi) = phi(t) + pi``: unimodular with
    mean zero."""
    j = 2 * int(rng.integers(0, 3)) + 1
    k = 2 * np.arange(1, degree + 1)
    a = rng.standard_normal(degree) / k
    b = rng.standard_normal(degree) / k
    shift = rng.uniform(0.0, TWO_PI)

    def func(t):
        kt = np.multiply.outer(t, k)
        return np.exp(1j * (j * t + shift + np.cos(kt) @ a + np.sin(kt) @ b))

    return BoundaryFunction("random_unimodular", func)


def normalized(f: BoundaryFunction, p: float,
               quad: QuadratureConfig = DEFAULT_QUAD) -> BoundaryFunction:
    """``f`` scaled to unit normalized ``L^p`` norm."""
    return f.scaled(1.0 / f.lp_norm(p, quad))


def random_unit_function(rng: np.random.Generator, p: float,
                         quad: QuadratureConfig = DEFAULT_QUAD) -> BoundaryFunction:
    """Random real boundary data with ``||f||_p = 1``.

    Step functions for ``p = inf`` (where the sup norm is exact), smooth
    trigonometric polynomials otherwise.
    """
    if math.isinf(p):
        return random_sign_pattern(rng, pieces=int(rng.integers(2, 9)))
    return normalized(random_trig(rng, int(rng.integers(1, 9))), p, quad)
