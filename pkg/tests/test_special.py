import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import special

from diffint.special import bessel_jn, gegenbauer, spherical_jn


def test_j0_and_removable_singularity():
    z = np.array([0.1, 1.0, 7.3])
    assert spherical_jn(0, z) == pytest.approx(np.sin(z) / z, rel=1e-15)
    assert spherical_jn(0, 0.0) == 1.0
    assert spherical_jn(3, 0.0) == 0.0


def test_j3_at_pi():
    assert spherical_jn(3, math.pi) == pytest.approx((15 - math.pi**2) / math.pi**3, rel=1e-14)


def test_gegenbauer_chebyshev_u2():
    x = np.linspace(-1, 1, 9)
    assert gegenbauer(2, 1, x) == pytest.approx(4 * x**2 - 1)


# scipy returns nan for subnormal arguments
@given(st.integers(0, 12), st.floats(-40, 40).filter(lambda z: z == 0 or abs(z) > 1e-100))
def test_spherical_bessel_vs_scipy(n, z):
    assert spherical_jn(n, z) == pytest.approx(special.spherical_jn(n, z), abs=5e-15)


def test_series_branch_near_zero():
    # scipy loses ~1e-14 relative here, so the reference is mpmath
    for n in range(6):
        for z in (1e-8, 1e-4, 0.01, 0.49):
            ref = float(mpmath.sqrt(mpmath.pi / (2 * mpmath.mpf(z))) * mpmath.besselj(n + 0.5, z))
            assert spherical_jn(n, z) == pytest.approx(ref, rel=1e-15)


def test_bessel_small_argument():
    for n in range(5):
        for z in (1e-200, 1e-10, 0.5):
            assert bessel_jn(n, z) == pytest.approx(float(mpmath.besselj(n, z)), rel=1e-15, abs=1e-300)


@given(st.integers(0, 15), st.floats(-30, 30))
def test_bessel_vs_scipy(n, z):
    assert bessel_jn(n, z) == pytest.approx(special.jv(n, z), abs=1e-14)


@given(st.integers(0, 10), st.floats(0.1, 8), st.floats(-1, 1))
def test_gegenbauer_vs_scipy(n, lam, x):
    ref = special.eval_gegenbauer(n, lam, x)
    assert gegenbauer(n, lam, x) == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        spherical_jn(-1, 1.0)
    with pytest.raises(ValueError):
        bessel_jn(-1, 1.0)
