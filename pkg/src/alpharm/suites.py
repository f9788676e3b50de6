"""Verification suites run by ``alpharm verify``.

Each suite compares a closed form against its brute-force route over a grid
and returns a record ``{name, grid, max_deviation, tolerance, passed,
details}``.  Default grids and tolerances are the package's acceptance
thresholds.
"""

from __future__ import annotations

import math

import numpy as np

from . import bounds, oracle
from .kernel import (BoundaryFunction, DiskPoint, Params, deriv_matrix, extend,
                     kernel_mean, kernel_mean_closed)
from .oracle import GridSpec
from .quadrature import DEFAULT_QUAD, QuadratureConfig

ALPHAS = (-0.5, 0.0, 1.0, 2.0, 2.5)
PS = (4.0 / 3.0, 2.0, 4.0, math.inf)
RADII = (0.0, 0.25, 0.5, 0.75, 0.9)


def _record(name, grid, deviation, tolerance, passed, **details):
    return {"name": name, "grid": grid, "max_deviation": float(deviation),
            "tolerance": tolerance, "passed": bool(passed), "details": details}


def _p_label(p):
    return "inf" if math.isinf(p) else p


def kernel_mean_suite(alphas=(-0.5, 0.0, 1.0, 2.5), radii=(0.0, 0.3, 0.6, 0.9),
                      quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-9):
    worst = 0.0
    for a in alphas:
        for r in radii:
            mean = kernel_mean(a, DiskPoint(r, 0.4), quad)
            ref = 1.0 if a == 0 else kernel_mean_closed(a, r)
            worst = max(worst, abs(mean - ref))
    return _record("kernel-mean", {"alpha": list(alphas), "r": list(radii)},
                   worst, tol, worst <= tol)


def pointwise_suite(alphas=ALPHAS, ps=PS, radii=RADII,
                   quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-8):
    worst = 0.0
    for a in alphas:
        for p in ps:
            params = Params(a, p)
            for r in radii:
                closed = bounds.pointwise_bound(params, r).total
                brute = oracle.q_norm_kernel(params, r, quad)
                worst = max(worst, abs(closed - brute) / brute)
    return _record("pointwise", {"alpha": list(alphas), "p": [_p_label(p) for p in ps],
                                "r": list(radii)}, worst, tol, worst <= tol)


def power_cos_suite(ms=(-0.25, 0.0, 0.5, 1.0, 2.0, 3.5), radii=RADII + (1.0,),
                    quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-9):
    from .specfun import hyp2f1

    worst = 0.0
    for m in ms:
        for r in radii:
            brute = oracle.integral_power_cos(m, r, quad)
            if r == 1.0:
                closed = bounds.U_term(2.0 * m, 1.0)
            else:
                rr = r * r
                closed = (2 * math.pi * (1 + rr) ** m
                          * hyp2f1(0.5 - m / 2, -m / 2, 1.0, 4 * rr / (1 + rr) ** 2))
            worst = max(worst, abs(brute - closed) / closed)
    return _record("power-cos", {"m": list(ms), "r": list(radii)}, worst, tol,
                   worst <= tol)


def holder_suite(alphas=ALPHAS, ps=PS, radii=RADII,
                 quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-6):
    worst = 0.0
    for a in alphas:
        for p in ps:
            params = Params(a, p)
            for r in radii:
                z = DiskPoint(r, 1.1)
                f = BoundaryFunction.holder_extremal(params, z, quad)
                ratio = abs(extend(a, f, z, quad)) / bounds.pointwise_bound(params, r).total
                worst = max(worst, abs(1.0 - ratio))
    return _record("holder", {"alpha": list(alphas), "p": [_p_label(p) for p in ps],
                              "r": list(radii)}, worst, tol, worst <= tol)


def b_const_suite(params_list=(Params(1.0, 2.0), Params(0.0, 4.0), Params(2.5, math.inf),
                               Params(-0.5, 4.0 / 3.0)), n=10_000, tol=1e-6):
    worst = 0.0
    for params in params_list:
        b = bounds.b_const(params)
        grid_max = max(bounds.B_func(params, r) for r in np.linspace(0.0, 1.0, n))
        worst = max(worst, abs(grid_max - b), abs(bounds.B_func(params, 1.0) - b))
    return _record("b-const", {"params": [(p.alpha, _p_label(p.p)) for p in params_list],
                               "n": n}, worst, tol, worst <= tol)


def df0_suite(alphas=(0.0, 1.0, 2.0), ps=(2.0, math.inf),
              quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-6):
    worst = 0.0
    origin = DiskPoint(0.0, 0.0)
    for a in alphas:
        for p in ps:
            params = Params(a, p)
            f = BoundaryFunction.gradient_extremal(params, origin, 0.0, quad)
            got = deriv_matrix(a, f, origin, quad).op_norm
            worst = max(worst, abs(got - bounds.df0_bound(params)))
    return _record("df0", {"alpha": list(alphas), "p": [_p_label(p) for p in ps]},
                   worst, tol, worst <= tol)


def lemma_marte_suite(qs=(1.0, 2.0, 3.0), ms=(0.5, 1.0, 3.0), radii=(0.3, 0.7, 1.0),
                      n=33, quad: QuadratureConfig = DEFAULT_QUAD):
    failures = []
    reports = []
    for q in qs:
        for m in ms:
            for r in radii:
                g = GridSpec(0.0, math.pi, n)
                a = oracle.lemma_marte_scan(q, r, m, g, quad)
                b = oracle.lemma_marte_scan(q, r, m, g.refined(), quad)
                same = a.details["classification"] == b.details["classification"]
                ok = a.claim_holds and b.claim_holds and same
                reports.append({"q": q, "m": m, "r": r,
                                "classification": a.details["classification"], "ok": ok})
                if not ok:
                    failures.append((q, m, r))
    return _record("lemma-marte", {"q": list(qs), "m": list(ms), "r": list(radii), "n": n},
                   len(failures), 0, not failures, scans=reports)


def lemma_bele_suite(ks=(1.0, 2.0, 3.0), ms=(0.5, 1.0, 3.0), n=9,
                     quad: QuadratureConfig = DEFAULT_QUAD):
    failures = []
    reports = []
    for k in ks:
        for m in ms:
            rg, xg = GridSpec(0.0, 1.0, n), GridSpec(0.0, math.pi, n)
            a = oracle.lemma_bele_scan(k, m, rg, xg, quad)
            b = oracle.lemma_bele_scan(k, m, rg.refined(), xg.refined(), quad)
            ok = a.claim_holds and b.claim_holds
            reports.append({"k": k, "m": m, "argmax": a.argmax, "ok": ok})
            if not ok:
                failures.append((k, m))
    return _record("lemma-bele", {"k": list(ks), "m": list(ms), "n": n},
                   len(failures), 0, not failures, scans=reports)


def schwarz_suite(alphas=(-0.5, 0.0, 1.0, 2.0, 4.0),
                  radii=(0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99),
                  quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-9):
    worst = 0.0
    for a in alphas:
        for r in radii:
            worst = max(worst, abs(bounds.schwarz_bound(a, r) - oracle.schwarz_oracle(a, r, quad)))
    for r in radii:
        worst = max(worst, abs(bounds.schwarz_bound(0.0, r) - 4 / math.pi * math.atan(r)))
    return _record("schwarz", {"alpha": list(alphas), "r": list(radii)}, worst, tol,
                   worst <= tol)


def schwarz_extremal_suite(alphas=(-0.5, 0.0, 1.0, 2.0, 4.0), radii=(0.2, 0.5, 0.8),
                           seed=0, count=10, quad: QuadratureConfig = DEFAULT_QUAD,
                           tol=1e-6):
    worst = 0.0
    sgn = BoundaryFunction.sign_of_sine()
    for a in alphas:
        for r in radii:
            val = extend(a, sgn, DiskPoint(r, math.pi / 2), quad).real
            worst = max(worst, abs(val - bounds.schwarz_bound(a, r)))
    rng = np.random.default_rng(seed)
    excess = -math.inf
    for i in range(count):
        f = (oracle.random_unimodular(rng) if i % 2 else
             oracle.random_sign_pattern(rng, pieces=int(rng.integers(1, 5)), antiperiodic=True))
        a = float(rng.choice(alphas))
        rep = oracle.schwarz_monotone_check(a, f, GridSpec(0.1, 0.9, 5),
                                            GridSpec(0.0, 2 * math.pi * 7 / 8, 8), quad)
        excess = max(excess, rep.max_value)
    ok = worst <= tol and excess <= 1e-9
    return _record("schwarz-extremal", {"alpha": list(alphas), "r": list(radii),
                                        "seed": seed, "count": count},
                   worst, tol, ok, max_random_excess=excess)


def conjecture_suite(alphas=(2.0, 4.0), quad: QuadratureConfig = DEFAULT_QUAD):
    radii = np.round(np.arange(0.1, 0.95, 0.1), 10)
    ts = np.linspace(0.0, math.pi / 2, 201)
    min_pp = min(oracle.phi_prime_closed(a, r, t) for a in alphas for r in radii for t in ts)
    verdicts = {}
    for a in alphas:
        rep = oracle.conjecture_scan(a, GridSpec(0.05, 0.95, 19),
                                     GridSpec(0.0, math.pi / 2, 33), quad)
        verdicts[a] = rep.claim_holds
    rs = np.linspace(0.0, 0.99, 100)
    rational = {2.0: lambda r: 4 * (1 + r * r) / (math.pi * (1 - r * r)),
                4.0: lambda r: (6 + 20 * r * r + 6 * r**4) / (3 * math.pi * (1 - r * r))}
    dev = max(abs(bounds.grad_bound_conjecture(a, r) / rational[a](r) - 1)
              for a in (2.0, 4.0) for r in rs)
    ok = min_pp >= -1e-12 and all(verdicts.values()) and dev <= 1e-12
    return _record("conjecture", {"alpha": list(alphas)}, dev, 1e-12, ok,
                   min_phi_prime=min_pp, verdicts={str(k): v for k, v in verdicts.items()})


def gradient_suite(alphas=(0.0, 1.0, 2.0), ps=(2.0, 4.0, math.inf), radii=(0.0, 0.5, 0.9),
                   seed=0, count=200, quad: QuadratureConfig = DEFAULT_QUAD, tol=1e-8):
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for p in ps:
        funcs = [oracle.random_unit_function(rng, p, quad) for _ in range(count)]
        angles = rng.uniform(0.0, 2 * math.pi, count)
        for a in alphas:
            params = Params(a, p)
            for r in radii:
                coeff = bounds.C_func(params, r, quad)
                scale = (1 - r * r) ** (1 + (0.0 if math.isinf(p) else 1 / p))
                for f, s in zip(funcs, angles):
                    got = deriv_matrix(a, f, DiskPoint(r, s), quad).op_norm * scale
                    worst = max(worst, got - coeff)
    return _record("gradient", {"alpha": list(alphas), "p": [_p_label(p) for p in ps],
                                "r": list(radii), "seed": seed, "count": count},
                   worst, tol, worst <= tol)


SUITES = {
    "kernel-mean": kernel_mean_suite,
    "pointwise": pointwise_suite,
    "power-cos": power_cos_suite,
    "holder": holder_suite,
    "b-const": b_const_suite,
    "df0": df0_suite,
    "lemma-marte": lemma_marte_suite,
    "lemma-bele": lemma_bele_suite,
    "schwarz": schwarz_suite,
    "schwarz-extremal": schwarz_extremal_suite,
    "conjecture": conjecture_suite,
    "gradient": gradient_suite,
}
