import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from diffint.design import (
    design_derivative_filter,
    design_smoothing_filter,
    finite_difference_kernel,
    least_squares_oracle,
)
from diffint.errors import DiffintError, InputError
from diffint.estimate import (
    Signal,
    apply_kernel,
    continuous_estimator,
    convergence_probe,
    estimate_continuous,
    kernel_estimate,
    kernel_estimator,
    kernel_leading_error,
    predicted_leading_error,
    read_signal_csv,
    write_signal_csv,
)
from diffint.measures import (
    centered_gram,
    chebyshev1,
    gauss_rule,
    gram,
    leading_k,
    legendre,
    norm_h,
    poly_coeffs,
    shifted_legendre,
    symmetric_krawtchouk,
)

LANCZOS_GRID = 0.1 * 2.0 ** -np.arange(8)
MULTI_GRID = 0.5 * 2.0 ** -np.arange(7)


# --- apply_kernel ----------------------------------------------------------

def test_apply_linear_signal():
    k = design_derivative_filter(centered_gram(2), 1, 1)
    s = Signal.sample(lambda x: 3.0 - 1.5 * x, 0.2, 0.05, 30)
    out = apply_kernel(k, s)
    assert len(out) == 26
    assert out.samples == pytest.approx(-1.5, abs=1e-12)
    assert out.x[0] == pytest.approx(0.2 + 2 * 0.05)


def test_apply_second_difference():
    k = least_squares_oracle(1, [1, 1, 1], 2, 2)
    s = Signal.sample(lambda x: x**2, -1.0, 0.1, 20)
    assert apply_kernel(k, s).samples == pytest.approx(2.0, rel=1e-12)


def test_apply_smoother_reproduces_cubic():
    k = design_smoothing_filter(centered_gram(2), 1)
    cubic = np.polynomial.Polynomial([0.3, -1, 2, 0.7])
    s = Signal.sample(cubic, 0.0, 0.1, 25)
    out = apply_kernel(k, s)
    assert out.samples == pytest.approx(cubic(out.x), rel=1e-12, abs=1e-13)


def test_apply_forward_difference_alignment():
    k = finite_difference_kernel(1)
    s = Signal.sample(np.exp, 0.0, 0.01, 5)
    out = apply_kernel(k, s)
    assert len(out) == 4 and out.x[0] == 0.0


def test_apply_short_signal():
    k = design_derivative_filter(centered_gram(2), 1, 1)
    assert len(apply_kernel(k, Signal(np.arange(5.0), 1.0))) == 1
    with pytest.raises(InputError):
        apply_kernel(k, Signal(np.arange(4.0), 1.0))


def test_signal_validation():
    with pytest.raises(InputError):
        Signal(np.arange(3.0), 0.0)
    with pytest.raises(InputError):
        Signal(np.array([]), 1.0)


def test_white_noise_variance():
    # variance of the filtered noise is sigma^2 * sum rho^2 (3 sigma band)
    rng = np.random.default_rng(7)
    k = design_smoothing_filter(centered_gram(4), 1)
    y = rng.normal(0, 1.0, 200_000)
    out = apply_kernel(k, Signal(y, 1.0)).samples
    expected = float(sum(c * c for c in k.coeffs))
    # estimate the standard error of the sample variance from non-overlapping blocks
    thin = out[:: len(k.offsets)]
    se = expected * math.sqrt(2 / thin.size)
    assert abs(thin.var() - expected) < 3 * se


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.data())
def test_exact_on_polynomials(N, data):
    fam = data.draw(st.sampled_from([centered_gram(N), symmetric_krawtchouk(N)]))
    n = data.draw(st.integers(0, 2 * N))
    m = data.draw(st.integers(0, n))
    k = design_derivative_filter(fam, m, n)
    deg = k.exactness_degree
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=deg + 1, max_size=deg + 1))
    p = np.polynomial.Polynomial(coeffs)
    delta = data.draw(st.sampled_from([0.5, 0.1, 1.0]))
    x0 = data.draw(st.sampled_from([0.0, 0.3, -1.0]))
    est = kernel_estimate(k, p, x0, delta)
    true = p.deriv(m)(x0) if m else p(x0)
    assert est == pytest.approx(true, rel=1e-10, abs=1e-9 * delta**-m)


# --- continuous estimator ------------------------------------------------------

def test_continuous_examples():
    L = legendre()
    for d in (0.1, 1.0, 3.0):
        assert estimate_continuous(L, 1, 1, lambda x: x**2, 0.0, d) == pytest.approx(0.0, abs=1e-14)
    ref = 1.5 * integrate.quad(lambda t: math.exp(t) * t, -1, 1, epsabs=1e-15)[0]
    assert estimate_continuous(L, 1, 1, np.exp, 0.0, 1.0) == pytest.approx(ref, rel=1e-14)
    assert ref == pytest.approx(3 / math.e, rel=1e-14)
    quartic = np.polynomial.Polynomial([1, -2, 0.5, 3, -1.25])
    for x0, d in ((0.3, 0.7), (-1.0, 0.1)):
        assert estimate_continuous(L, 1, 3, quartic, x0, d) == pytest.approx(quartic.deriv()(x0), rel=1e-12)


def test_continuous_single_term_pathway():
    # m = n: estimate equals k_n n! / (h_n delta^n) times the single integral
    L = legendre()
    for n in range(1, 9):
        assert poly_coeffs(L, n).deriv_at0(n) == leading_k(L, n) * math.factorial(n)
    # the integral is O(delta^n) built from O(1) terms, so both sides lose about
    # eps / delta^n; at delta = 1 and n <= 4 that stays below the tolerance
    for n in range(1, 5):
        nodes, w = gauss_rule(L, max(32, n + 8))
        for d in (1.0,):
            integral = float(np.dot(w * np.exp(0.2 + d * nodes), special.eval_legendre(n, nodes)))
            ref = float(leading_k(L, n) * math.factorial(n) / norm_h(L, n)) / d**n * integral
            assert estimate_continuous(L, n, n, np.exp, 0.2, d) == pytest.approx(ref, rel=1e-12)


def test_continuous_single_term_vs_mpmath():
    # at delta = 1 the integral is well conditioned for small n
    L = legendre()
    mpmath.mp.dps = 30
    for n in range(1, 5):
        integral = mpmath.quad(lambda t: mpmath.exp(0.2 + t) * mpmath.legendre(n, t), [-1, 1])
        pref = leading_k(L, n) * math.factorial(n) / norm_h(L, n)
        ref = float(integral * pref.numerator / pref.denominator)
        assert estimate_continuous(L, n, n, np.exp, 0.2, 1.0) == pytest.approx(ref, rel=1e-12)


def test_continuous_other_families():
    for fam in (chebyshev1(), shifted_legendre()):
        est = estimate_continuous(fam, 1, 4, np.sin, 0.4, 0.05)
        assert est == pytest.approx(math.cos(0.4), rel=1e-6)


def test_continuous_errors():
    with pytest.raises(DiffintError):
        estimate_continuous(legendre(), 1, 1, np.exp, 0.0, 0.0)
    with pytest.raises(DiffintError):
        estimate_continuous(legendre(), 2, 1, np.exp, 0.0, 0.1)
    with pytest.raises(DiffintError):
        estimate_continuous(centered_gram(2), 1, 1, np.exp, 0.0, 0.1)


# --- convergence probe -------------------------------------------------------

def test_probe_lanczos():
    rep = convergence_probe(continuous_estimator(legendre(), 1, 1), np.exp, 1.0, 0.0, LANCZOS_GRID)
    assert rep.slope == pytest.approx(2, abs=0.15)
    assert rep.leading_coefficient == pytest.approx(predicted_leading_error(legendre(), 1, 2, 1.0), rel=1e-3)


def test_probe_multiterm():
    rep = convergence_probe(continuous_estimator(legendre(), 1, 3), np.exp, 1.0, 0.0, MULTI_GRID)
    assert rep.slope == pytest.approx(4, abs=0.2)
    pred = predicted_leading_error(legendre(), 1, 4, 1.0)
    assert pred < 0
    assert rep.leading_coefficient == pytest.approx(pred, rel=1e-2)


def test_probe_forward_difference():
    fd = finite_difference_kernel(1)
    rep = convergence_probe(kernel_estimator(fd), np.exp, 1.0, 0.0, LANCZOS_GRID)
    assert rep.slope == pytest.approx(1, abs=0.1)
    order, coef = kernel_leading_error(fd, lambda j: 1.0)
    assert order == 1 and coef == 0.5
    assert rep.leading_coefficient == pytest.approx(coef, rel=0.05)


@pytest.mark.parametrize("x0", [0.0, 0.3])
@pytest.mark.parametrize("f,df", [(np.exp, math.exp), (np.sin, math.cos)])
def test_probe_slopes_across_functions(x0, f, df):
    for n, grid, p in ((1, LANCZOS_GRID, 2), (3, MULTI_GRID, 4)):
        rep = convergence_probe(continuous_estimator(legendre(), 1, n), f, df(x0), x0, grid)
        assert rep.slope == pytest.approx(p, abs=0.15)


def test_probe_exact_polynomial():
    p = np.polynomial.Polynomial([1, 2, 3])
    rep = convergence_probe(continuous_estimator(legendre(), 1, 1), p, 2.0, 0.0, LANCZOS_GRID)
    assert rep.exact and math.isnan(rep.slope)
    rep = convergence_probe(kernel_estimator(finite_difference_kernel(1)), lambda x: 2 * x, 2.0, 0.0,
                            [1.0, 0.5, 0.25, 0.125])
    assert rep.exact


def test_probe_validation():
    est = continuous_estimator(legendre(), 1, 1)
    with pytest.raises(InputError):
        convergence_probe(est, np.exp, 1.0, 0.0, [0.1, 0.05, 0.02])
    with pytest.raises(InputError):
        convergence_probe(est, np.exp, 1.0, 0.0, [0.1, 0.2, 0.05, 0.01])


def test_leading_error_formulas_agree():
    # kernel moment route and the p_{n+1} route coincide when p_{n+1} exists
    for fam in (centered_gram(3), symmetric_krawtchouk(3), gram(6)):
        for n in range(0, 4):
            for m in range(0, n + 1):
                k = design_derivative_filter(fam, m, n)
                j = k.exactness_degree + 1
                if j > fam.max_degree:
                    continue
                order, coef = kernel_leading_error(k, lambda i: 1.0)
                pred = predicted_leading_error(fam, m, j - 1, 1.0)
                assert coef == pytest.approx(pred, rel=1e-12, abs=1e-15)
    with pytest.raises(DiffintError):
        predicted_leading_error(gram(2), 1, 1, 1.0)


def test_leading_error_sign_pattern():
    # even measure, n - m odd: sign is -(-1)^((n-m+1)/2)
    L = legendre()
    for m in range(0, 4):
        for n in range(m + 1, m + 8, 2):
            c = predicted_leading_error(L, m, n, 1.0)
            assert np.sign(c) == -((-1) ** ((n - m + 1) // 2))


# --- CSV ---------------------------------------------------------------------------

def test_signal_csv_round_trip(tmp_path):
    s = Signal.sample(np.sin, 0.1, 0.01, 50)
    back = read_signal_csv(write_signal_csv(s, tmp_path / "s.csv"))
    assert back.delta == pytest.approx(0.01, rel=1e-12)
    assert back.samples == pytest.approx(s.samples, rel=0, abs=0)


@pytest.mark.parametrize("body", [
    "x,y\n0,1\n0.1,2\n0.3,3\n",
    "x,y\n0,1\n0,2\n0.1,3\n",
    "a,b\n0,1\n1,2\n",
    "x,y\n0,1\n",
    "x,y\n0,1\n1,abc\n",
])
def test_signal_csv_rejects(tmp_path, body):
    p = tmp_path / "bad.csv"
    p.write_text(body)
    with pytest.raises(InputError):
        read_signal_csv(p)
