"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one ``criterion N [PASS|FAIL]`` line; the lines are also
collected in the pytest terminal summary.
"""

import math

import mpmath
import numpy as np
import pytest

from alpharm import bounds, oracle
from alpharm.kernel import (BoundaryFunction, DiskPoint, Params, c_alpha,
                            deriv_matrix, extend, kernel_mean, kernel_mean_closed)
from alpharm.oracle import GridSpec

ALPHAS = (-0.5, 0.0, 1.0, 2.0, 2.5)
PS = (4.0 / 3.0, 2.0, 4.0, math.inf)
RADII = (0.0, 0.25, 0.5, 0.75, 0.9)
GRID = [(a, p, r) for a in ALPHAS for p in PS for r in RADII]


def test_c01_kernel_normalization(criterion):
    dev0 = max(abs(kernel_mean(0.0, DiskPoint(r, 0.7)) - 1.0) for r in RADII)
    edge = 1.0 - 1e-6
    dev_edge = 0.0
    for a in (-0.5, 1.0, 2.5):
        quad_mean = kernel_mean(a, DiskPoint(edge, 0.7))
        dev_edge = max(dev_edge, abs(quad_mean - 1.0),
                       abs(kernel_mean_closed(a, edge) - 1.0))
    criterion(1, "kernel normalization", dev0 <= 1e-10 and dev_edge <= 1e-3,
              f"alpha=0 dev {dev0:.2e} <= 1e-10; edge dev {dev_edge:.2e} <= 1e-3")


def test_c02_pointwise_closed_vs_oracle(criterion):
    worst = 0.0
    for a, p, r in GRID:
        params = Params(a, p)
        if math.isinf(p):
            # q = 1: the kernel's L^1 mean, by quadrature of the kernel itself
            brute = kernel_mean(a, DiskPoint(r, 0.0))
        else:
            brute = oracle.q_norm_kernel(params, r)
        closed = bounds.pointwise_bound(params, r).total
        worst = max(worst, abs(closed - brute) / brute)
    criterion(2, "pointwise bound = kernel q-norm", worst <= 1e-8,
              f"max rel dev {worst:.2e} <= 1e-8 on {len(GRID)} points")


def test_c03_pointwise_sharpness(criterion):
    worst = math.inf
    for a, p, r in GRID:
        params = Params(a, p)
        z = DiskPoint(r, 2.3)
        f = BoundaryFunction.holder_extremal(params, z)
        assert f.lp_norm(p) == pytest.approx(1.0, rel=1e-9)
        ratio = abs(extend(a, f, z)) / bounds.pointwise_bound(params, r).total
        worst = min(worst, ratio)
    criterion(3, "Hoelder extremal attains the bound", worst >= 1 - 1e-6,
              f"min ratio {worst:.12f} >= 1 - 1e-6")


def _b_reference(params):
    # (1/2pi) int (2 + 2 cos s)^m ds = (2/pi) int_0^{pi/2} (2 sin u)^(2m) du by mpmath
    # quadrature, independent of the gamma form.  u = w^(1/(2m+1)) absorbs the
    # endpoint singularity u^(2m).
    m = mpmath.mpf(params.q) * (1 + mpmath.mpf(params.alpha) / 2) - 1
    e = 2 * m + 1

    def smooth(w):
        u = w ** (1 / e)
        return (2 * mpmath.sinc(u)) ** (2 * m) / e

    mean = 2 / mpmath.pi * mpmath.quad(smooth, [0, (mpmath.pi / 2) ** e])
    return c_alpha(params.alpha) * float(mean) ** (1 / params.q)


def test_c04_b_const_is_grid_max(criterion):
    rs = np.linspace(0.0, 1.0, 10_000)
    worst_grid = worst_edge = 0.0
    for a in ALPHAS:
        for p in PS:
            params = Params(a, p)
            b = bounds.b_const(params)
            grid_max = max(bounds.B_func(params, float(r)) for r in rs)
            worst_grid = max(worst_grid, abs(grid_max - b))
            worst_edge = max(worst_edge, abs(bounds.B_func(params, 1.0) - b),
                             abs(_b_reference(params) - b))
    criterion(4, "b = max_r B(r) = B(1)", worst_grid <= 1e-6 and worst_edge <= 1e-10,
              f"grid dev {worst_grid:.2e} <= 1e-6; B(1) dev {worst_edge:.2e} <= 1e-10")


def test_c05_classical_reductions(criterion):
    params = Params(0.0, math.inf)
    rs = np.linspace(0.0, 0.99, 34)
    dev_val = max(abs(bounds.pointwise_bound(params, float(r)).total - 1.0) for r in rs)
    dev_df0 = abs(bounds.df0_bound(params) - 4 / math.pi)
    dev_c = max(abs(bounds.C_func(params, float(r)) - 4 / math.pi)
                for r in np.append(rs, 1.0))
    ok = dev_val <= 1e-12 and dev_df0 <= 1e-12 and dev_c <= 1e-10
    criterion(5, "classical harmonic reductions", ok,
              f"value {dev_val:.1e}, df0 {dev_df0:.1e}, C {dev_c:.1e}")


def test_c06_df0_sharp_at_origin(criterion):
    origin = DiskPoint(0.0, 0.0)
    worst = 0.0
    for a in (0.0, 1.0, 2.0):
        for p in (2.0, math.inf):
            params = Params(a, p)
            f = BoundaryFunction.gradient_extremal(params, origin, 0.0)
            assert f.lp_norm(p) == pytest.approx(1.0, rel=1e-9)
            got = deriv_matrix(a, f, origin).op_norm
            worst = max(worst, abs(got - bounds.df0_bound(params)))
    criterion(6, "df0 attained at the origin", worst <= 1e-6, f"max dev {worst:.2e} <= 1e-6")


def _expected_marte(m):
    return "flat" if m == 1 else ("pi/2" if m < 1 else "0")


def test_c07_lemma_scans(criterion):
    bad = []
    for q in (1.0, 2.0, 3.0):
        for m in (0.5, 1.0, 3.0):
            for r in (0.3, 0.7, 1.0):
                for n in (33, 65):
                    rep = oracle.lemma_marte_scan(q, r, m, GridSpec(0.0, math.pi, n))
                    if rep.details["classification"] != _expected_marte(m) or not rep.claim_holds:
                        bad.append(("marte", q, m, r, n))
            for n in (9, 17):
                rep = oracle.lemma_bele_scan(q, m, GridSpec(0.0, 1.0, n),
                                             GridSpec(0.0, math.pi, n))
                if not rep.claim_holds:
                    bad.append(("bele", q, m, n))
    criterion(7, "lemma argmax classifications", not bad,
              f"{len(bad)} failing scans" + (f": {bad[:3]}" if bad else ""))


def test_c08_schwarz(criterion):
    rs = [0.0, 0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99]
    dev_atan = max(abs(bounds.schwarz_bound(0.0, r) - 4 / math.pi * math.atan(r)) for r in rs)
    dev_oracle = max(abs(bounds.schwarz_bound(a, r) - oracle.schwarz_oracle(a, r))
                     for a in (-0.5, 0.0, 1.0, 2.0, 4.0) for r in rs)
    sgn = BoundaryFunction.sign_of_sine()
    dev_eq = max(abs(extend(a, sgn, DiskPoint(r, math.pi / 2)) - bounds.schwarz_bound(a, r))
                 for a in (-0.5, 0.0, 1.0, 2.0, 4.0) for r in (0.2, 0.5, 0.8))
    rng = np.random.default_rng(8)
    excess = -math.inf
    for i in range(12):
        f = (oracle.random_unimodular(rng) if i % 2
             else oracle.random_sign_pattern(rng, int(rng.integers(1, 5)), antiperiodic=True))
        a = (-0.5, 0.0, 1.0, 2.0, 4.0)[i % 5]
        rep = oracle.schwarz_monotone_check(a, f, GridSpec(0.1, 0.9, 5),
                                            GridSpec(0.0, 2 * math.pi * 11 / 12, 12))
        excess = max(excess, rep.max_value)
    ok = dev_atan <= 1e-10 and dev_oracle <= 1e-9 and dev_eq <= 1e-6 and excess <= 1e-9
    criterion(8, "Schwarz majorant", ok,
              f"atan {dev_atan:.1e}, oracle {dev_oracle:.1e}, equality {dev_eq:.1e}, "
              f"random excess {excess:.2e}")


def test_c09_conjecture_proven_cases(criterion):
    ts = np.linspace(0.0, math.pi / 2, 401)
    radii = [0.1 * k for k in range(1, 10)]
    min_pp = min(oracle.phi_prime_closed(a, r, t)
                 for a in (2.0, 4.0) for r in radii for t in ts)
    verdicts = [oracle.conjecture_scan(a, GridSpec(0.05, 0.95, 19),
                                       GridSpec(0.0, math.pi / 2, 33)).claim_holds
                for a in (2.0, 4.0)]
    rs = np.linspace(0.0, 0.99, 100)
    dev = 0.0
    for r in rs:
        r2 = 4 * (1 + r * r) / (math.pi * (1 - r * r))
        r4 = (6 + 20 * r * r + 6 * r**4) / (3 * math.pi * (1 - r * r))
        dev = max(dev, abs(bounds.grad_bound_conjecture(2.0, r) / r2 - 1),
                  abs(bounds.grad_bound_conjecture(4.0, r) / r4 - 1))
    ok = min_pp >= -1e-12 and all(verdicts) and dev <= 1e-12
    criterion(9, "gradient conjecture, alpha in {2, 4}", ok,
              f"min Phi' {min_pp:.2e}, verdicts {verdicts}, rational dev {dev:.1e}")


def test_c10_gradient_bound_validity(criterion):
    rng = np.random.default_rng(2024)
    worst = -math.inf
    checked = 0
    for p in (2.0, 4.0, math.inf):
        funcs = [oracle.random_unit_function(rng, p) for _ in range(200)]
        angles = rng.uniform(0.0, 2 * math.pi, 200)
        for a in (0.0, 1.0, 2.0):
            params = Params(a, p)
            for r in (0.0, 0.5, 0.9):
                coeff = bounds.C_func(params, r)
                scale = (1 - r * r) ** (1 + (0.0 if math.isinf(p) else 1 / p))
                for f, s in zip(funcs, angles):
                    got = deriv_matrix(a, f, DiskPoint(r, float(s))).op_norm * scale
                    worst = max(worst, got - coeff)
                    checked += 1
    criterion(10, "gradient bound never exceeded", worst <= 1e-8,
              f"max excess {worst:.2e} <= 1e-8 over {checked} checks")
