"""Quadrature over the circle and over intervals.

Smooth periodic integrands use the uniform trapezoid rule with repeated
node doubling, which converges geometrically.  Integrands with a sharp peak
(kernels with ``r`` near 1), kinks or jumps are split into panels graded
geometrically toward the peak and the listed breakpoints, then refined
adaptively with Gauss-Legendre panels.

Integrands take a 1-d array of nodes and return an array whose last axis
matches the nodes; leading axes are integrated componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, QuadratureError

TWO_PI = 2.0 * np.pi

# Peaks narrower than this go to graded panels instead of the trapezoid rule.
SHARP_WIDTH = 0.1
_MAX_DOUBLINGS = 16
_GL_X, _GL_W = np.polynomial.legendre.leggauss(16)
_EPS = np.finfo(float).eps

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_depth: int = 24

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_depth < 1:
            raise DomainError("max_depth must be at least 1")

    def tolerance(self, estimate) -> float:
        return max(self.abs_tol, self.rel_tol * float(np.max(np.abs(estimate))))


DEFAULT_QUAD = QuadratureConfig()


def periodic_trapezoid(func: Integrand, cfg: QuadratureConfig = DEFAULT_QUAD,
                       start: float = 0.0, n0: int = 64):
    """Integrate a 2*pi-periodic function over one period.

    The node count doubles until two successive refinements change the
    estimate by less than the tolerance.
    """
    n = n0
    h = TWO_PI / n
    total = np.sum(func(start + h * np.arange(n)), axis=-1) * h
    hits = 0
    for _ in range(min(cfg.max_depth, _MAX_DOUBLINGS)):
        mids = start + h * (np.arange(n) + 0.5)
        refined = 0.5 * (total + h * np.sum(func(mids), axis=-1))
        change = float(np.max(np.abs(refined - total)))
        total = refined
        n *= 2
        h *= 0.5
        if change <= cfg.tolerance(total):
            hits += 1
            if hits >= 2:
                return total
        else:
            hits = 0
    raise QuadratureError(f"trapezoid rule not converged with {n} nodes")


def _gauss(func: Integrand, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    half = 0.5 * (b - a)
    x = (0.5 * (a + b))[:, None] + half[:, None] * _GL_X
    y = np.asarray(func(x.ravel()))
    y = y.reshape(y.shape[:-1] + x.shape)
    return (y @ _GL_W) * half


def integrate_panels(func: Integrand, edges: Iterable[float],
                     cfg: QuadratureConfig = DEFAULT_QUAD):
    """Adaptive Gauss-Legendre quadrature starting from the given panels.

    Each panel is compared with its two halves; the panels with the largest
    discrepancies are bisected until the summed error estimate meets the
    tolerance.
    """
    edges = np.unique(np.asarray(list(edges), dtype=float))
    if edges.size < 2:
        raise DomainError("need at least two distinct panel edges")
    a, b = edges[:-1], edges[1:]
    coarse = _gauss(func, a, b)
    depth = np.zeros(a.size, dtype=int)
    done = np.zeros(coarse.shape[:-1], dtype=coarse.dtype)
    done_err = 0.0
    while True:
        m = 0.5 * (a + b)
        both = _gauss(func, np.concatenate([a, m]), np.concatenate([m, b]))
        left, right = both[..., : a.size], both[..., a.size:]
        fine = left + right
        diff = np.abs(fine - coarse)
        err = diff.reshape(-1, a.size).max(axis=0)
        floor = 64 * _EPS * np.abs(fine).reshape(-1, a.size).max(axis=0)
        err = np.where(err <= floor, 0.0, err)
        estimate = done + fine.sum(axis=-1)
        if not np.all(np.isfinite(estimate)):
            raise QuadratureError("integrand is not finite on the panels")
        tol = cfg.tolerance(estimate)
        if done_err + err.sum() <= tol:
            return estimate
        # accept smallest errors while they fit in half the budget
        order = np.argsort(err)
        room = 0.5 * tol - done_err
        accept = np.zeros(a.size, dtype=bool)
        if room > 0:
            accept[order[np.cumsum(err[order]) <= room]] = True
        accept |= err == 0.0
        done = done + fine[..., accept].sum(axis=-1)
        done_err += float(err[accept].sum())
        keep = ~accept
        if np.any(depth[keep] >= cfg.max_depth):
            raise QuadratureError(
                f"adaptive quadrature exceeded depth {cfg.max_depth}"
            )
        a = np.concatenate([a[keep], m[keep]])
        b = np.concatenate([m[keep], b[keep]])
        coarse = np.concatenate([left[..., keep], right[..., keep]], axis=-1)
        depth = np.concatenate([depth[keep], depth[keep]]) + 1


def graded_offsets(width: float, span: float) -> np.ndarray:
    """Offsets ``width * 2**k`` (k = 0, 1, ...) strictly below ``span``."""
    width = max(float(width), 1e-300)
    k = np.arange(int(np.ceil(np.log2(span / width))) + 1)
    offs = width * 2.0**k
    return offs[offs < span]


def interval_integral(func: Integrand, a: float, b: float,
                      cfg: QuadratureConfig = DEFAULT_QUAD, *,
                      points: Iterable[float] = (),
                      peaks: Iterable[tuple[float, float]] = ()):
    """Integrate over ``[a, b]``; ``peaks`` holds ``(location, width)`` pairs
    around which the initial panels are graded."""
    edges = [a, b] + [p for p in points if a < p < b]
    for loc, width in peaks:
        edges.append(min(max(loc, a), b))
        for off in graded_offsets(width, b - a):
            edges.extend([loc - off, loc + off])
    edges = [e for e in edges if a <= e <= b]
    return integrate_panels(func, edges, cfg)


def circle_integral(func: Integrand, cfg: QuadratureConfig = DEFAULT_QUAD, *,
                    peak: float | None = None, width: float | None = None,
                    breakpoints: Iterable[float] = (), n0: int = 64):
    """Integrate a 2*pi-periodic function over one period.

    ``peak``/``width`` describe a sharp feature (a kernel peak or an
    integrable singularity); ``breakpoints`` lists kinks and jumps.
    """
    bps = [float(x) % TWO_PI for x in breakpoints]
    sharp = peak is not None and width is not None and width < SHARP_WIDTH
    if not bps and not sharp:
        return periodic_trapezoid(func, cfg, n0=n0)
    origin = float(peak) if peak is not None else bps[0]
    # the span is centred on the peak so that nodes near it keep full relative
    # precision in their offset from it
    rel = [(x - origin + np.pi) % TWO_PI - np.pi for x in bps]
    edges = [-np.pi, 0.0, np.pi] + rel
    if sharp:
        offs = graded_offsets(width, np.pi)
        edges.extend(offs)
        edges.extend(-offs)
    # a few extra panels so that smooth stretches start reasonably fine
    edges.extend(np.linspace(-np.pi, np.pi, 9)[1:-1])
    return integrate_panels(func, origin + np.asarray(edges), cfg)
