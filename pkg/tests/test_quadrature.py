import math

import numpy as np
import pytest

from alpharm.errors import DomainError, QuadratureError
from alpharm.quadrature import (TWO_PI, QuadratureConfig, circle_integral, graded_offsets,
                                integrate_panels, interval_integral, periodic_trapezoid)


def test_trapezoid_smooth():
    # int exp(cos t) dt = 2 pi I_0(1)
    val = periodic_trapezoid(lambda t: np.exp(np.cos(t)))
    assert val == pytest.approx(TWO_PI * 1.2660658777520082, rel=1e-14)


def test_vector_valued_integrand():
    val = circle_integral(lambda t: np.stack([np.cos(t) ** 2, np.sin(t) ** 2]))
    np.testing.assert_allclose(val, [math.pi, math.pi], rtol=1e-13)


def test_sharp_peak():
    # Poisson kernel at r close to 1 integrates to 2 pi
    r = 1 - 1e-7

    def poisson(t):
        return (1 - r) * (1 + r) / ((1 - r) ** 2 + 4 * r * np.sin(t / 2) ** 2)

    assert circle_integral(poisson, peak=0.0, width=1 - r) == pytest.approx(TWO_PI, rel=1e-10)


def test_breakpoints_handle_jumps():
    val = circle_integral(lambda t: np.where(np.sin(t) >= 0, np.exp(t), 0.0),
                          breakpoints=(0.0, math.pi))
    assert val == pytest.approx(math.expm1(math.pi), rel=1e-12)


def test_interval_with_endpoint_singularity():
    val = interval_integral(lambda x: x ** -0.5, 0.0, 1.0, peaks=[(0.0, 1e-12)])
    assert val == pytest.approx(2.0, rel=1e-8)


def test_depth_limit():
    with pytest.raises(QuadratureError):
        integrate_panels(lambda x: np.sin(1 / np.maximum(x, 1e-300)), [0.0, 1.0],
                         QuadratureConfig(max_depth=3))


def test_config_validation():
    with pytest.raises(DomainError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadratureConfig(max_depth=0)


def test_graded_offsets():
    offs = graded_offsets(1e-3, 1.0)
    assert offs[0] == 1e-3 and offs[-1] < 1.0
    np.testing.assert_allclose(offs[1:] / offs[:-1], 2.0)


def test_nonfinite_integrand_rejected():
    with pytest.raises(QuadratureError):
        integrate_panels(lambda x: 1.0 / x, [0.0, 1.0])
