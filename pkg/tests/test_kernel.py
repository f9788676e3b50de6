import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alpharm import bounds
from alpharm.errors import DomainError
from alpharm.kernel import (BoundaryFunction, DerivMatrix, DiskPoint, Params, c_alpha,
                            deriv_matrix, extend, kernel_dbar, kernel_mean,
                            kernel_mean_closed, kernel_value)


@pytest.mark.parametrize("alpha, expected", [(0, 1.0), (2, 0.5), (4, 1 / 6)])
def test_c_alpha(alpha, expected):
    assert c_alpha(alpha) == pytest.approx(expected, rel=1e-14)


def test_c_alpha_domain():
    with pytest.raises(DomainError):
        c_alpha(-1.0)


def test_params_conjugate_exponent():
    assert Params(0.0, 2.0).q == 2.0
    assert Params(0.0, math.inf).q == 1.0
    assert math.isinf(Params(0.0, 1.0).q)
    assert Params(0.0, 4.0 / 3.0).q == 4.0
    with pytest.raises(DomainError):
        Params(0.0, 0.5)
    with pytest.raises(DomainError):
        Params(-1.0, 2.0)


def test_disk_point():
    z = DiskPoint(0.5, 2 * math.pi + 0.25)
    assert z.s == pytest.approx(0.25)
    assert DiskPoint.from_complex(z.z).s == pytest.approx(0.25)
    with pytest.raises(DomainError):
        DiskPoint(1.0, 0.0)


def test_kernel_examples():
    for a in (-0.5, 0.0, 3.0):
        assert kernel_value(a, DiskPoint(0.0, 0.0), 1.234) == pytest.approx(c_alpha(a))
    assert kernel_value(0.0, DiskPoint(0.5, 0.0), 0.0) == pytest.approx(3.0, rel=1e-14)
    assert kernel_value(2.0, DiskPoint(0.5, 0.0), math.pi) == pytest.approx(
        0.5 * 0.75**3 / 1.5**4, rel=1e-14)


def test_kernel_positive():
    rng = np.random.default_rng(0)
    t = np.linspace(0, 2 * math.pi, 101)
    for _ in range(50):
        a = rng.uniform(-0.99, 6)
        z = DiskPoint(rng.uniform(0, 0.9999), rng.uniform(0, 2 * math.pi))
        assert np.all(kernel_value(a, z, t) > 0)


def test_kernel_dbar_at_origin():
    assert kernel_dbar(0.0, DiskPoint(0.0, 0.0), 0.0) == pytest.approx(2.0)
    for a in (-0.5, 1.0, 2.5):
        for t in (0.0, 1.0, 4.0):
            got = kernel_dbar(a, DiskPoint(0.0, 0.0), t)
            assert got == pytest.approx(c_alpha(a) * (2 + a) * np.exp(1j * t), abs=1e-14)


def test_kernel_dbar_finite_difference():
    rng = np.random.default_rng(1)
    h = 1e-5
    for _ in range(100):
        a = rng.uniform(-0.9, 4.0)
        z = DiskPoint(rng.uniform(0.0, 0.9), rng.uniform(0, 2 * math.pi))
        t = rng.uniform(0, 2 * math.pi)

        def k(w):
            return kernel_value(a, DiskPoint.from_complex(w), t)

        dx = (k(z.z + h) - k(z.z - h)) / (2 * h)
        dy = (k(z.z + 1j * h) - k(z.z - 1j * h)) / (2 * h)
        # 2 dbar K = K_x + i K_y
        assert abs(kernel_dbar(a, z, t) - (dx + 1j * dy)) < 1e-6


def test_kernel_mean_identity():
    for a in (-0.5, 0.0, 1.0, 2.5):
        for r in (0.0, 0.3, 0.6, 0.9):
            z = DiskPoint(r, 1.0)
            assert kernel_mean(a, z) == pytest.approx(kernel_mean_closed(a, r), abs=1e-9)
    for r in (0.0, 0.3, 0.9):
        assert kernel_mean(0.0, DiskPoint(r, 0.0)) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("alpha", [-0.5, 1.0, 2.5])
def test_kernel_mean_boundary_limit(alpha):
    means = [kernel_mean(alpha, DiskPoint(1 - 10.0**-k, 0.3)) for k in range(2, 7)]
    gaps = [abs(m - 1) for m in means]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-3


def test_extend_examples():
    one = BoundaryFunction.constant(1.0)
    for z in (DiskPoint(0.0, 0.0), DiskPoint(0.7, 2.0), DiskPoint(0.99, 5.0)):
        assert extend(0.0, one, z) == pytest.approx(1.0, abs=1e-10)
    assert extend(2.0, one, DiskPoint(0.0, 0.0)) == pytest.approx(0.5)
    cos = BoundaryFunction.cosine()
    for r, s in ((0.5, 0.0), (0.3, 1.2), (0.95, 4.0)):
        assert extend(0.0, cos, DiskPoint(r, s)) == pytest.approx(r * math.cos(s), abs=1e-10)


def test_deriv_examples():
    assert deriv_matrix(0.0, BoundaryFunction.cosine(), DiskPoint(0.0, 0.0)).op_norm == \
        pytest.approx(1.0)
    assert deriv_matrix(0.0, BoundaryFunction.constant(), DiskPoint(0.6, 1.0)).op_norm < 1e-10
    # Re z has the same derivative everywhere
    d = deriv_matrix(0.0, BoundaryFunction.cosine(), DiskPoint(0.8, 2.0))
    np.testing.assert_allclose(d.as_real_matrix(), [[1, 0], [0, 0]], atol=1e-9)


def test_deriv_matrix_real_form():
    d = DerivMatrix(0.3 + 0.1j, -0.2 + 0.4j)
    sv = np.linalg.svd(d.as_real_matrix(), compute_uv=False)
    assert sv[0] == pytest.approx(d.op_norm)


def test_df0_extremal_at_origin():
    params = Params(2.0, math.inf)
    f = BoundaryFunction.gradient_extremal(params, DiskPoint(0.0, 0.0), 0.0)
    got = deriv_matrix(2.0, f, DiskPoint(0.0, 0.0)).op_norm
    assert got == pytest.approx(bounds.df0_bound(params), rel=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(-0.5, 3.0), st.floats(0.0, 0.95), st.floats(0, 6.28), st.floats(0, 6.28))
def test_rotation_equivariance(alpha, r, s, angle):
    f = BoundaryFunction.from_callable(lambda t: np.cos(t) + 0.3 * np.sin(3 * t) ** 2)
    direct = extend(alpha, f.rotated(angle), DiskPoint(r, s).rotated(angle))
    assert direct == pytest.approx(extend(alpha, f, DiskPoint(r, s)), abs=1e-10)


def test_sampled_interpolation():
    t = 2 * math.pi * np.arange(32) / 32
    f = BoundaryFunction.sampled(np.cos(3 * t) + 1j * np.sin(t))
    x = np.linspace(0, 2 * math.pi, 17)
    np.testing.assert_allclose(f(x), np.cos(3 * x) + 1j * np.sin(x), atol=1e-12)
    real = BoundaryFunction.sampled(np.cos(t))
    assert np.isrealobj(real(x))
    with pytest.raises(DomainError):
        BoundaryFunction.sampled(np.ones(4))


def test_lp_norms():
    sgn = BoundaryFunction.sign_of_sine()
    for p in (1.0, 2.0, 3.5, math.inf):
        assert sgn.lp_norm(p) == pytest.approx(1.0, rel=1e-12)
    cos = BoundaryFunction.cosine()
    assert cos.lp_norm(2.0) == pytest.approx(math.sqrt(0.5), rel=1e-12)
    assert cos.lp_norm(1.0) == pytest.approx(2 / math.pi, rel=1e-12)
    assert cos.lp_norm(math.inf) == pytest.approx(1.0)


def test_holder_extremal_normalized():
    for p in (4 / 3, 2.0, 4.0):
        params = Params(1.0, p)
        f = BoundaryFunction.holder_extremal(params, DiskPoint(0.8, 1.0))
        assert f.lp_norm(p) == pytest.approx(1.0, rel=1e-9)
    with pytest.raises(DomainError):
        BoundaryFunction.holder_extremal(Params(1.0, 1.0), DiskPoint(0.5, 0.0))
