"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (summary lines appear at the
end of the session) or ``python tests/test_acceptance.py``.
"""

import math
import sys
import time
from fractions import Fraction
from itertools import combinations
from math import comb

import mpmath
import numpy as np
import pytest
from scipy import integrate

from diffint.cli import main as cli_main
from diffint.design import (
    design_derivative_filter,
    design_min_ralpha,
    design_min_rinf,
    design_smoothing_filter,
    finite_difference_kernel,
    least_squares_oracle,
)
from diffint.estimate import (
    continuous_estimator,
    convergence_probe,
    kernel_estimator,
    kernel_leading_error,
    predicted_leading_error,
)
from diffint.measures import (
    centered_gram,
    chebyshev1,
    gram,
    leading_k,
    legendre,
    moment,
    norm_h,
    poly_coeffs,
    symmetric_hahn,
    symmetric_krawtchouk,
    weights,
)
from diffint.transfer import (
    butterworth,
    characteristic_continuous,
    characteristic_discrete,
    flatness_check,
    fourier_bessel,
    greville_P,
    greville_Q,
    hahn_fourier_bessel_pfaff,
    hahn_p2n_at_zero,
    lanczos_h,
    maxflat_factored,
    min_ralpha_phi,
    min_rinf_phi,
    min_rinf_phi_beta,
    multiterm_h13,
    sg_first_order_direct,
    sg_first_order_from_hahn,
    sg_first_order_h,
    stability_scan,
)

F = Fraction
OMEGA_8 = 8 * np.arange(1, 65) / 65
OMEGA_2PI = 2 * np.pi * np.arange(1, 65) / 65
TIME_BUDGET = 60.0


@pytest.fixture(autouse=True)
def _desk_scale():
    t0 = time.perf_counter()
    yield
    assert time.perf_counter() - t0 < TIME_BUDGET


def _discrete_families(N, alphas=(0, 1, 2, 5)):
    yield gram(N + 1)
    yield centered_gram(N)
    yield symmetric_krawtchouk(N)
    for a in alphas:
        yield symmetric_hahn(a, N)


# 1 ----------------------------------------------------------------------------

def test_criterion_01_exact_orthogonality(criterion):
    criterion(1, "exact orthogonality and moment identity, N <= 8")
    for N in range(1, 9):
        for fam in _discrete_families(N):
            w = weights(fam)
            vals = [[poly_coeffs(fam, n)(x) for x in fam.support] for n in range(fam.max_degree + 1)]
            for a, b in combinations(range(fam.max_degree + 1), 2):
                assert sum(wi * pa * pb for wi, pa, pb in zip(w, vals[a], vals[b])) == 0, (fam, a, b)
            for n in range(min(8, fam.max_degree) + 1):
                # integral x^n p_n dmu = h_n / k_n, summed directly in rationals
                direct = sum((F(x) ** n * p * wi for x, p, wi in zip(fam.support, vals[n], w)), F(0))
                assert isinstance(direct, Fraction)
                assert direct == norm_h(fam, n) / leading_k(fam, n) == moment(fam, n)


# 2 ----------------------------------------------------------------------------

def test_criterion_02_oracle_equivalence(criterion):
    criterion(2, "orthogonal-polynomial design equals normal-equation oracle")
    cases = 0
    for N in range(1, 7):
        for fam in _discrete_families(N, alphas=(0, 1, 2)):
            for n in range(min(6, fam.max_degree) + 1):
                for m in range(n + 1):
                    k = design_derivative_filter(fam, m, n)
                    o = least_squares_oracle(0, weights(fam), m, n, offsets=fam.support)
                    assert k.offsets == o.offsets and k.coeffs == o.coeffs, (fam, m, n)
                    assert all(isinstance(c, Fraction) for c in k.coeffs)
                    cases += 1
    assert cases >= 300


# 3 ----------------------------------------------------------------------------

def test_criterion_03_known_kernels(criterion):
    criterion(3, "known kernels: xi/10, five-point smoother, finite differences")
    assert design_derivative_filter(centered_gram(2), 1, 1).coeffs == tuple(F(x, 10) for x in range(-2, 3))
    assert design_smoothing_filter(centered_gram(2), 1).coeffs == tuple(F(c, 35) for c in (-3, 12, 17, 12, -3))
    for n in range(1, 7):
        fd = finite_difference_kernel(n)
        assert fd.coeffs == tuple((-1) ** (n - x) * comb(n, x) for x in range(n + 1))
        # same kernel from the Gram family on n + 1 points
        assert design_derivative_filter(gram(n + 1), n, n).coeffs == fd.coeffs


# 4 ----------------------------------------------------------------------------

def test_criterion_04_convergence_orders(criterion):
    criterion(4, "convergence slopes 2, 4, 1 and leading-error signs")
    L = legendre()
    lanczos = convergence_probe(continuous_estimator(L, 1, 1), np.exp, 1.0, 0.0, 0.1 * 2.0 ** -np.arange(8))
    multi = convergence_probe(continuous_estimator(L, 1, 3), np.exp, 1.0, 0.0, 0.5 * 2.0 ** -np.arange(7))
    fd_kernel = finite_difference_kernel(1)
    fd = convergence_probe(kernel_estimator(fd_kernel), np.exp, 1.0, 0.0, 0.1 * 2.0 ** -np.arange(8))
    assert abs(lanczos.slope - 2) <= 0.15
    assert abs(multi.slope - 4) <= 0.2
    assert abs(fd.slope - 1) <= 0.1

    # observed leading coefficients carry the sign of the p_{n+1} formula
    pred_l = predicted_leading_error(L, 1, 2, 1.0)
    pred_m = predicted_leading_error(L, 1, 4, 1.0)
    pred_fd = kernel_leading_error(fd_kernel, lambda j: 1.0)[1]
    assert pred_l == pytest.approx(0.1) and pred_m == pytest.approx(-1 / 504)
    assert np.sign(lanczos.leading_coefficient) == np.sign(pred_l)
    assert np.sign(multi.leading_coefficient) == np.sign(pred_m) == -1
    assert np.sign(fd.leading_coefficient) == np.sign(pred_fd)
    # in the frequency domain the first correction to H / (i omega) is negative
    w = np.array([1e-3, 2e-3])
    assert np.all((lanczos_h(w) / (1j * w) - 1).real / w**2 == pytest.approx(-0.1, rel=1e-4))


# 5 ----------------------------------------------------------------------------

def _quad_characteristic(m, n, w):
    fam = legendre()
    terms = [(poly_coeffs(fam, j), float(poly_coeffs(fam, j).deriv_at0(m) * (2 * j + 1)) / 2)
             for j in range(m, n, 2)]

    def rho(xi):
        return sum(c * float(p(xi)) for p, c in terms)

    re = integrate.quad(lambda t: rho(t) * math.cos(w * t), -1, 1, epsabs=1e-13, epsrel=1e-13, limit=200)[0]
    im = integrate.quad(lambda t: rho(t) * math.sin(w * t), -1, 1, epsabs=1e-13, epsrel=1e-13, limit=200)[0]
    return re + 1j * im


def test_criterion_05_transfer_cross_checks(criterion):
    criterion(5, "Lanczos/two-term closed forms vs quadrature; first-order SG closed form vs direct sum")
    quad_l = np.array([_quad_characteristic(1, 2, w) for w in OMEGA_8])
    quad_m = np.array([_quad_characteristic(1, 4, w) for w in OMEGA_8])
    assert np.max(np.abs(lanczos_h(OMEGA_8) - quad_l)) <= 1e-9
    assert np.max(np.abs(multiterm_h13(OMEGA_8) - quad_m)) <= 1e-9
    assert np.max(np.abs(characteristic_continuous(legendre(), 1, 2, 1.0, OMEGA_8) - quad_l)) <= 1e-9
    assert np.max(np.abs(characteristic_continuous(legendre(), 1, 4, 1.0, OMEGA_8) - quad_m)) <= 1e-9
    for N in (1, 2, 5):
        for w in (OMEGA_8, OMEGA_2PI):
            assert np.max(np.abs(sg_first_order_h(N, w) - sg_first_order_direct(N, w))) <= 1e-12


# 6 ----------------------------------------------------------------------------

def _quad_complex(f, a, b):
    re = integrate.quad(lambda t: f(t).real, a, b, epsabs=1e-13, epsrel=1e-13, limit=200)[0]
    im = integrate.quad(lambda t: f(t).imag, a, b, epsabs=1e-13, epsrel=1e-13, limit=200)[0]
    return re + 1j * im


def _direct_hahn(fam, n, theta):
    """Brute-force sum over the support from exact rationals in extended precision."""
    wp = [(x, wi * poly_coeffs(fam, n)(x)) for x, wi in zip(fam.support, weights(fam))]
    with mpmath.workdps(40):
        terms = [(x, mpmath.mpf(c.numerator) / c.denominator) for x, c in wp]
        return np.array([complex(mpmath.fsum(c * mpmath.expj(-mpmath.mpf(float(t)) * x) for x, c in terms))
                         for t in theta])


def test_criterion_06_fourier_bessel(criterion):
    criterion(6, "Fourier-Bessel closed forms: Legendre, Chebyshev, Hahn, SG reduction")
    L, T = legendre(), chebyshev1()
    for n in range(7):
        p = poly_coeffs(L, n)
        ref = np.array([_quad_complex(lambda t: float(p(t)) * np.exp(-1j * w * t), -1, 1) for w in OMEGA_8])
        assert np.max(np.abs(fourier_bessel(L, n, OMEGA_8) - ref)) <= 1e-9
        # x = cos(theta) removes the endpoint singularity of the Chebyshev weight
        ref = np.array([_quad_complex(lambda t: math.cos(n * t) * np.exp(-1j * w * math.cos(t)), 0, math.pi)
                        for w in OMEGA_8])
        assert np.max(np.abs(fourier_bessel(T, n, OMEGA_8) - ref)) <= 1e-9
    for N in range(1, 9):
        for a in (0, 1, 2, 5):
            fam = symmetric_hahn(a, N)
            for n in range(2 * N + 1):
                ref = _direct_hahn(fam, n, OMEGA_2PI)
                # unnormalized weights reach 1e9 here, so the bound scales with the values
                tol = 1e-9 * max(1.0, np.max(np.abs(ref)))
                assert np.max(np.abs(fourier_bessel(fam, n, OMEGA_2PI) - ref)) <= tol, (N, a, n)
                assert np.max(np.abs(hahn_fourier_bessel_pfaff(N, n, a, OMEGA_2PI) - ref)) <= tol, (N, a, n)
    for N in (1, 2, 5):
        assert np.max(np.abs(sg_first_order_from_hahn(N, OMEGA_2PI) - sg_first_order_h(N, OMEGA_2PI))) <= 1e-12


# 7 ----------------------------------------------------------------------------

def test_criterion_07_greville_formulas(criterion):
    criterion(7, "minimum-R_alpha and R_infinity closed forms; factored identity")
    for N in range(1, 7):
        for n in range(N):
            for a in (0, 1, 2):
                direct = characteristic_discrete(design_min_ralpha(N, n, a), 1.0, OMEGA_2PI)
                assert np.max(np.abs(min_ralpha_phi(N, n, a, OMEGA_2PI) - direct)) <= 1e-10
            kraw = design_smoothing_filter(symmetric_krawtchouk(N), n)
            direct = characteristic_discrete(kraw, 1.0, OMEGA_2PI)
            assert np.max(np.abs(min_rinf_phi(N, n, OMEGA_2PI) - direct)) <= 1e-10
    s = np.linspace(0, 1, 101)
    omega = 2 * np.arcsin(np.sqrt(s))
    for N in range(1, 11):
        for n in range(N):
            series = min_rinf_phi(N, n, omega, check=False)
            form_p, form_q = maxflat_factored(N, n, omega)
            assert np.max(np.abs(series - form_p)) <= 1e-12
            assert np.max(np.abs(series - form_q)) <= 1e-12
            assert np.all(greville_P(N, n, s) > 0) and np.all(greville_Q(N, n, s) > 0)


# 8 ----------------------------------------------------------------------------

def test_criterion_08_stability_and_flatness(criterion):
    criterion(8, "stability of minimum-R smoothers; maximal flatness at pi")
    for N in range(1, 7):
        for n in range(N):
            for a in (0, 1, 2):
                rep = stability_scan(design_min_ralpha(N, n, a))
                assert rep.stable and rep.min_margin > 0, (N, n, a)
            rinf = design_min_rinf(N, n)
            rep = stability_scan(rinf)
            assert rep.stable and rep.min_margin > 0, (N, n)
            w = np.linspace(0, np.pi, 2001)
            phi = characteristic_discrete(rinf, 1.0, w)
            assert np.max(np.abs(phi.imag)) <= 1e-14
            # 0 <= phi < 1 off the origin; phi < 1 is certified by the scan above
            assert np.all(phi.real >= -1e-14)
            exact_form = min_rinf_phi_beta(N, n, w)
            assert np.all(exact_form >= 0)
            # monotone decreasing: the incomplete beta function is monotone in its argument
            assert np.all(np.diff(exact_form) <= 0)
            assert np.all(np.diff(phi.real) <= 1e-14)
            assert flatness_check(N, n) == 2 * (N - n)


# 9 ----------------------------------------------------------------------------

def test_criterion_09_p2n_at_zero(criterion):
    criterion(9, "closed-form p_2n(0) equals direct Hahn evaluation exactly")
    for N in range(1, 9):
        for a in (0, 1, 2, 5, F(1, 2)):
            fam = symmetric_hahn(a, N)
            for n in range(min(4, N) + 1):
                value = hahn_p2n_at_zero(N, n, a)
                assert isinstance(value, Fraction)
                assert value == poly_coeffs(fam, 2 * n)(0), (N, a, n)


# 10 ---------------------------------------------------------------------------

def _first_departure(w, mag, tol=0.01):
    bad = np.abs(mag / w - 1) > tol
    return w[np.argmax(bad)] if bad.any() else np.inf


def test_criterion_10_figures(criterion, tmp_path, capsys):
    criterion(10, "figure tables: unit slopes, 1% departure ordering, Butterworth cutoff")
    assert cli_main(["figures", "--outdir", str(tmp_path)]) == 0
    capsys.readouterr()
    tables = {}
    for name in ("fig1_n1", "fig1_n3", "fig2_N1", "fig2_N2"):
        data = np.loadtxt(tmp_path / f"{name}.csv", delimiter=",", skiprows=1)
        tables[name] = (10 ** data[:, 0], 10 ** data[:, 1])
        lw, lm = data[:, 0], data[:, 1]
        sel = (lw >= -2 - 1e-12) & (lw <= -1 + 1e-12)
        slope = np.polyfit(lw[sel], lm[sel], 1)[0]
        assert abs(slope - 1) <= 0.05, (name, slope)
    w1 = _first_departure(*tables["fig1_n1"])
    w3 = _first_departure(*tables["fig1_n3"])
    assert w3 > w1
    for m in (0, 1, 2):
        for n in (m + 1, m + 2, 7):
            for w0 in (0.5, 1.0, 3.0):
                mag, _ = butterworth(m, n, w0, w0)
                assert mag == pytest.approx(w0**m / math.sqrt(2), rel=1e-12, abs=0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
