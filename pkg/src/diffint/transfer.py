"""Characteristic (transfer) functions, closed forms and stability tests.

Sign convention: a filter is probed with ``f(xi) = exp(i*omega*xi)`` and
evaluated at 0, so a discrete kernel has

    phi(omega) = delta**-m * sum_xi rho(xi) * exp(+i*delta*omega*xi).

Smoothers (even kernels) therefore have real ``phi`` and ``m``-th derivative
filters behave like ``(i*omega)**m`` near 0.  Fourier-Bessel functions keep
the opposite sign, ``integral p_n(x) exp(-i*omega*x) dmu(x)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from pathlib import Path
from typing import Callable, Sequence

import mpmath
import numpy as np
from scipy.special import betainc

from .design import FilterKernel, _integer_alpha
from .errors import DiffintError
from .measures import (
    CENTERED_GRAM,
    CHEBYSHEV1,
    HAHN,
    LEGENDRE,
    Family,
    leading_k,
    norm_h,
    poly_coeffs,
    symmetric_hahn,
)
from .polynomial import PolyCoeffs, pochhammer
from .special import bessel_jn, gegenbauer, spherical_jn

__all__ = [
    "TransferSample",
    "characteristic_discrete",
    "characteristic_continuous",
    "fourier_bessel",
    "hahn_fourier_bessel_pfaff",
    "hahn_fourier_bessel_trig",
    "smoothing_phi",
    "smoothing_phi_derivative",
    "lanczos_h",
    "multiterm_h13",
    "sg_first_order_h",
    "sg_first_order_direct",
    "sg_first_order_from_hahn",
    "hahn_p2n_at_zero",
    "greville_constant",
    "greville_dphi_ds",
    "min_ralpha_phi",
    "min_rinf_phi",
    "min_rinf_phi_beta",
    "greville_P",
    "greville_Q",
    "maxflat_factored",
    "StabilityReport",
    "stability_scan",
    "flatness_check",
    "butterworth",
    "butterworth_impulse",
    "CLOSED_FORMS",
    "closed_form",
    "transfer_samples",
    "write_transfer_csv",
    "write_loglog_csv",
    "figure_tables",
]

# Below |delta*omega| < SERIES_THRESHOLD the trigonometric closed forms cancel
# catastrophically; spherical Bessel series are used instead.
SERIES_THRESHOLD = 0.5


@dataclass(frozen=True)
class TransferSample:
    omega: float
    value: complex


def _arr(omega) -> np.ndarray:
    return np.asarray(omega, dtype=float)


def _ret(a):
    a = np.asarray(a)
    return a if a.ndim else a[()]


# ---------------------------------------------------------------------------
# generic characteristic functions

def characteristic_discrete(kernel: FilterKernel, delta: float, omega):
    """``delta**-m * sum_xi rho(xi) exp(i*delta*omega*xi)``."""
    w = _arr(omega)
    rho = kernel.as_float()
    x = np.asarray(kernel.offsets, dtype=float)
    phase = np.exp(1j * delta * np.multiply.outer(w, x))
    return _ret(phase @ rho / delta**kernel.m)


def fourier_bessel(family: Family, n: int, omega):
    """Fourier-Bessel function ``integral p_n(x) exp(-i*omega*x) dmu(x)``.

    Closed forms: ``2 i^-n j_n`` (Legendre), ``pi i^-n J_n`` (Chebyshev1) and
    the Gegenbauer expression for the shifted symmetric Hahn polynomials
    (centered Gram is the ``alpha = 0`` case up to the ``(-2N)_n`` factor).
    """
    w = _arr(omega)
    kind = family.kind
    if kind == LEGENDRE:
        return _ret(2 * (1j) ** (-n) * spherical_jn(n, w))
    if kind == CHEBYSHEV1:
        return _ret(math.pi * (1j) ** (-n) * bessel_jn(n, w))
    if kind == HAHN:
        return _ret(_hahn_fb(family.N, n, family.alpha, w))
    if kind == CENTERED_GRAM:
        N = family.N
        return _ret(float(pochhammer(Fraction(-2 * N), n)) * _hahn_fb(N, n, Fraction(0), w))
    raise DiffintError(f"no Fourier-Bessel closed form for {family}")


def _hahn_fb(N: int, n: int, alpha, theta: np.ndarray) -> np.ndarray:
    if n > 2 * N:
        raise DiffintError(f"degree {n} exceeds 2N={2 * N}")
    pre = float(pochhammer(Fraction(alpha) + 1, n) / pochhammer(Fraction(-2 * N), n))
    lam = n + float(alpha) + 1
    return (pre * (1j) ** (-n) * (2 * np.sin(theta / 2)) ** n
            * gegenbauer(2 * N - n, lam, np.cos(theta / 2)))


def hahn_fourier_bessel_pfaff(N: int, n: int, alpha, theta):
    """Hahn Fourier-Bessel function from the terminating 2F1 at ``1 - exp(-i theta)``.

    The polynomial in ``z`` alternates and cancels for ``|z|`` near 2, so it
    is summed in mpmath with exact rational coefficients.
    """
    a = Fraction(alpha)
    th = _arr(theta)
    pre = (pochhammer(2 * a + 2, 2 * N + n)
           / (2 ** (2 * n) * factorial(2 * N) * pochhammer(a + Fraction(3, 2), n)))
    # 2F1(n-2N, n+a+1; 2n+2a+2; z) terminates after 2N-n terms
    coeffs = [Fraction(1)]
    for k in range(2 * N - n):
        coeffs.append(coeffs[-1] * (n - 2 * N + k) * (n + a + 1 + k) / ((2 * n + 2 * a + 2 + k) * (k + 1)))
    out = np.empty(th.shape, dtype=complex)
    with mpmath.workdps(30 + 2 * N):
        cs = [mpmath.mpf(c.numerator) / c.denominator for c in coeffs]
        pre_mp = mpmath.mpf(pre.numerator) / pre.denominator
        for idx, t in np.ndenumerate(th):
            tm = mpmath.mpf(float(t))
            z = 1 - mpmath.expj(-tm)
            out[idx] = complex(pre_mp * mpmath.expj(N * tm) * z**n * mpmath.polyval(cs[::-1], z))
    return _ret(out)


def hahn_fourier_bessel_trig(N: int, n: int, alpha, theta):
    """Finite trigonometric form of ``sum_x w_x p_n(x) exp(+i x theta)`` for integer alpha.

    The number of terms is ``n + alpha + 1`` regardless of ``N``.  The sum
    cancels heavily for small ``theta`` and is evaluated with mpmath at a
    working precision sized to the cancellation.
    """
    a = _integer_alpha(alpha)
    th = _arr(theta)
    out = np.empty(th.shape, dtype=complex)
    ratios = [(-1) ** k * comb(n + a, k)
              * pochhammer(Fraction(-2 * N - 2 * a - n - 1), k) / pochhammer(Fraction(-2 * N - a), k)
              for k in range(n + a + 1)]
    for idx, t in np.ndenumerate(th):
        s2 = abs(2 * math.sin(t / 2))
        if s2 == 0:
            raise DiffintError("trigonometric form is singular at theta = 0 mod 2 pi")
        lost = (n + 2 * a + 1) * max(0.0, -math.log10(s2)) + math.log10(comb(2 * N + a, a) + 1)
        with mpmath.workdps(30 + int(lost) + 2 * (n + a)):
            tm = mpmath.mpf(float(t))
            total = mpmath.fsum(mpmath.mpf(r.numerator) / r.denominator
                                * mpmath.sin((2 * N + 2 * a + n - 2 * k + 1) * tm / 2)
                                for k, r in enumerate(ratios))
            val = (2 * mpmath.mpc(0, 1) ** (n + 2 * a) * comb(2 * N + a, a)
                   * (2 * mpmath.sin(tm / 2)) ** (-n - 2 * a - 1) * total)
            out[idx] = complex(val)
    return _ret(out)


def smoothing_phi(family: Family, n: int, omega):
    """Characteristic function of ``r(x) = K_{2n}(x, 0)`` via Fourier-Bessel functions."""
    w = _arr(omega)
    total = np.zeros(w.shape, dtype=complex)
    for j in range(n + 1):
        c = poly_coeffs(family, 2 * j)(0) / norm_h(family, 2 * j)
        total = total + float(c) * fourier_bessel(family, 2 * j, w)
    return _ret(total)


def smoothing_phi_derivative(family: Family, n: int, omega):
    """``d phi / d omega`` of the same smoother, from the single ``p_{2n+1}`` transform."""
    c = (leading_k(family, 2 * n) * poly_coeffs(family, 2 * n)(0)
         / (leading_k(family, 2 * n + 1) * norm_h(family, 2 * n)))
    return _ret(float(c) / 1j * fourier_bessel(family, 2 * n + 1, _arr(omega)))


def characteristic_continuous(family: Family, m: int, n: int, delta: float, omega):
    """Transfer function of the continuous multi-term estimator.

    ``n`` is the exactness bound: the sum runs over ``j = m, m+2, ..., n-1``
    (``n - m`` must be odd), so ``(m, n) = (1, 2)`` is the Lanczos filter
    and ``(1, 4)`` the two-term filter using ``P_1`` and ``P_3``.  Each term is
    ``p_j^{(m)}(0) / h_j`` times the Fourier-Bessel function at ``-delta*omega``.
    """
    if family.kind not in (LEGENDRE, CHEBYSHEV1):
        raise DiffintError(f"continuous characteristic needs Legendre or Chebyshev1, got {family}")
    if not 0 <= m <= n or (n - m) % 2 == 0:
        raise DiffintError(f"need 0 <= m <= n with n - m odd, got m={m}, n={n}")
    z = delta * _arr(omega)
    total = np.zeros(z.shape, dtype=complex)
    for j in range(m, n, 2):
        c = poly_coeffs(family, j).deriv_at0(m) / norm_h(family, j)
        total = total + float(c) * fourier_bessel(family, j, -z)
    return _ret(total / delta**m)


# ---------------------------------------------------------------------------
# closed forms for the worked examples

def lanczos_h(omega, delta: float = 1.0):
    """Transfer function of the Lanczos derivative ``3/(2 delta) int f(x + delta xi) xi dxi``."""
    w = _arr(omega)
    z = delta * w
    out = np.empty(z.shape, dtype=complex)
    small = np.abs(z) < SERIES_THRESHOLD
    zs = z[~small]
    out[~small] = 1j * w[~small] * 3 * (np.sin(zs) - zs * np.cos(zs)) / zs**3
    out[small] = 3j * spherical_jn(1, z[small]) / delta
    return _ret(out)


def multiterm_h13(omega, delta: float = 1.0):
    """Transfer function of the Legendre first-derivative filter using ``P_1`` and ``P_3``."""
    w = _arr(omega)
    z = delta * w
    out = np.empty(z.shape, dtype=complex)
    small = np.abs(z) < SERIES_THRESHOLD
    zs = z[~small]
    out[~small] = (7.5j * w[~small]
                   * ((21 - 8 * zs**2) * np.sin(zs) + (-21 * zs + zs**3) * np.cos(zs)) / zs**5)
    zz = z[small]
    out[small] = 1j * (3 * spherical_jn(1, zz) + 10.5 * spherical_jn(3, zz)) / delta
    return _ret(out)


def sg_first_order_direct(N: int, omega, delta: float = 1.0):
    """Direct ``2N + 1`` term sum for the first-order Savitzky-Golay transfer function."""
    w = _arr(omega)
    c = 3 / (2 * N * (N + 0.5) * (N + 1) * delta)
    xi = np.arange(-N, N + 1)
    return _ret(c * (np.exp(1j * delta * np.multiply.outer(w, xi)) @ xi))


def sg_first_order_h(N: int, omega, delta: float = 1.0):
    """Closed form of the first-order Savitzky-Golay transfer function.

    Near ``delta*omega = 0 (mod 2 pi)`` the quotient is expanded in a power
    series with exactly cancelled leading term.
    """
    z = delta * _arr(omega)
    zr = np.mod(z + np.pi, 2 * np.pi) - np.pi
    out = np.empty(z.shape, dtype=complex)
    pre = 3j / (2 * (2 * N + 1) * delta)
    big = np.abs(zr) >= SERIES_THRESHOLD
    zb = zr[big]
    out[big] = pre * (np.sin(N * zb) / N - np.sin((N + 1) * zb) / (N + 1)) / np.sin(zb / 2) ** 2
    zs = zr[~big]
    num = np.zeros_like(zs)
    for k in range(1, 40):
        coeff = (-1) ** k * (N ** (2 * k) - (N + 1) ** (2 * k)) / math.factorial(2 * k + 1)
        num = num + coeff * zs ** (2 * k + 1)
    out[~big] = pre * num / np.sin(zs / 2) ** 2 if zs.size else out[~big]
    zero = (~big) & (zr == 0)
    out[zero] = 0.0
    return _ret(out)


def sg_first_order_from_hahn(N: int, omega, delta: float = 1.0):
    """The same transfer function through the ``alpha = 0``, ``n = 1`` Hahn trigonometric form.

    Uses ``p_1(x) = Q_1(N + x; 0, 0, 2N) = -x / N``.
    """
    c = 3 / (2 * N * (N + 0.5) * (N + 1) * delta)
    return _ret(-N * c * hahn_fourier_bessel_trig(N, 1, 0, delta * _arr(omega)))


# ---------------------------------------------------------------------------
# Greville / Sheppard smoothers

def hahn_p2n_at_zero(N: int, n: int, alpha) -> Fraction:
    """Closed form of ``p_{2n}(0)`` for the shifted symmetric Hahn polynomials."""
    a = Fraction(alpha)
    return (pochhammer(Fraction(1, 2), n) * pochhammer(N + a + 1, n)
            / (pochhammer(Fraction(-N) + Fraction(1, 2), n) * pochhammer(a + 1, n)))


def greville_constant(N: int, n: int, alpha) -> Fraction:
    """Constant ``C`` in ``d phi / ds = C s^n 2F1(...)`` with ``s = sin^2(omega/2)``."""
    a = Fraction(alpha)
    return ((-1) ** n * pochhammer(N + a + 1, n + 1) * pochhammer(Fraction(-N), n + 1)
            / (pochhammer(n + a + Fraction(3, 2), n + 1) * factorial(n)))


def greville_dphi_ds(N: int, n: int, alpha, s):
    """Derivative of the minimum-R_alpha characteristic function w.r.t. ``s = sin^2(omega/2)``."""
    a = Fraction(alpha)
    s = _arr(s)
    total = np.zeros_like(s)
    term = np.ones_like(s)
    A, B, C = -N + n + 1, N + n + a + 2, 2 * n + a + Fraction(5, 2)
    for k in range(N - n):
        total = total + term
        term = term * float((A + k) * (B + k) / ((C + k) * (k + 1))) * s
    return _ret(float(greville_constant(N, n, a)) * s**n * total)


def _check_smoother_args(N: int, n: int) -> None:
    if not (isinstance(N, int) and isinstance(n, int)) or n < 0 or n >= N:
        raise DiffintError(f"need integers 0 <= n < N, got n={n}, N={N}")


def min_ralpha_phi(N: int, n: int, alpha, omega):
    """Sheppard/Greville characteristic function of the minimum-R_alpha smoother."""
    _check_smoother_args(N, n)
    a = Fraction(_integer_alpha(alpha))
    s = np.sin(_arr(omega) / 2) ** 2
    total = np.ones_like(s)
    for k in range(n + 1, N + 1):
        c = (Fraction((-1) ** n, factorial(n)) * pochhammer(N + a + 1, k) * pochhammer(Fraction(-N), k)
             / (pochhammer(n + a + Fraction(3, 2), k) * factorial(k - n - 1) * k))
        total = total + float(c) * s**k
    return _ret(total)


def greville_Q(N: int, n: int, z):
    """``Q(z) = sum_{k<=n} (N-n)_k z^k / k!``: ``(1 - z)^(n-N)`` truncated after ``z^n``."""
    z = _arr(z)
    return _ret(sum(float(pochhammer(Fraction(N - n), k) / factorial(k)) * z**k for k in range(n + 1)))


def greville_P(N: int, n: int, z):
    """``P(z) = sum_{k<N-n} (n+1)_k (1 - z)^k / k!``."""
    z = _arr(z)
    return _ret(sum(float(pochhammer(Fraction(n + 1), k) / factorial(k)) * (1 - z) ** k
                    for k in range(N - n)))


def maxflat_factored(N: int, n: int, omega):
    """Both factored forms ``1 - s^(n+1) P(s)`` and ``(1 - s)^(N-n) Q(s)``, ``s = sin^2(omega/2)``."""
    _check_smoother_args(N, n)
    s = np.sin(_arr(omega) / 2) ** 2
    return (_ret(1 - s ** (n + 1) * greville_P(N, n, s)),
            _ret((1 - s) ** (N - n) * greville_Q(N, n, s)))


def _rinf_series(N: int, n: int) -> PolyCoeffs:
    """Minimum-R_infinity characteristic function as an exact polynomial in ``s``."""
    c = [Fraction(0)] * (N + 1)
    c[0] = Fraction(1)
    for k in range(n + 1, N + 1):
        c[k] = (Fraction((-1) ** n, factorial(n)) * pochhammer(Fraction(-N), k)
                / (factorial(k - n - 1) * k))
    return PolyCoeffs(tuple(c))


def min_rinf_phi(N: int, n: int, omega, *, check: bool = True):
    """Characteristic function of the minimum-R_infinity (maximally flat) smoother.

    With ``check`` set, the value is compared against both factored forms
    (to 1e-12) and the bound ``0 <= phi < 1`` off ``omega = 0 mod 2 pi`` is
    asserted.
    """
    _check_smoother_args(N, n)
    w = _arr(omega)
    s = np.sin(w / 2) ** 2
    phi = _rinf_series(N, n)(s)
    phi = np.asarray(phi, dtype=float)
    if check:
        f1, f2 = maxflat_factored(N, n, w)
        if np.max(np.abs(phi - f1), initial=0) > 1e-12 or np.max(np.abs(phi - f2), initial=0) > 1e-12:
            raise ArithmeticError("factored forms disagree with the series")
        # 1 - phi = s^(n+1) P(s) with P > 0, so phi < 1 is checked on that form
        interior = s != 0
        defect = s ** (n + 1) * np.asarray(greville_P(N, n, s))
        if np.any(phi < -1e-12) or np.any(defect[interior] <= 0):
            raise ArithmeticError("0 <= phi < 1 violated")
    return _ret(phi)


def min_rinf_phi_beta(N: int, n: int, omega):
    """Incomplete-beta form: ``phi = I_{cos^2(omega/2)}(N - n, n + 1)``."""
    _check_smoother_args(N, n)
    return _ret(betainc(N - n, n + 1, np.cos(_arr(omega) / 2) ** 2))


def flatness_check(N: int, n: int) -> int:
    """Number of vanishing derivatives of the minimum-R_infinity ``phi`` at ``omega = pi``.

    The characteristic function is an exact polynomial in ``s = sin^2(omega/2)``;
    its zero at ``s = 1`` has multiplicity ``r`` and, because
    ``1 - s = cos^2(omega/2)`` has a double zero at ``pi``, ``phi`` vanishes
    to order ``2r`` there.
    """
    _check_smoother_args(N, n)
    poly = _rinf_series(N, n)
    r = 0
    while poly.degree > 0 and poly(Fraction(1)) == 0:
        # synthetic division by (s - 1)
        c = list(reversed(poly.coeffs))
        q = [c[0]]
        for a in c[1:-1]:
            q.append(a + q[-1])
        poly = PolyCoeffs(tuple(reversed(q)))
        r += 1
    return 2 * r


@dataclass(frozen=True)
class StabilityReport:
    """Result of :func:`stability_scan`.

    ``min_margin`` is the smallest ``1 - |phi|`` on the grid; for
    maximally flat smoothers it can be far below double precision near
    ``omega = 0`` and is then obtained in extended precision.
    """

    stable: bool
    max_abs: float
    omega_at_max: float
    min_margin: float


STABILITY_MARGIN = 1e-12


def _margin_hp(kernel: FilterKernel, k: int, grid_size: int) -> float:
    """``1 - |phi|`` at ``omega = 2 pi k / (G + 1)`` with adaptive mpmath precision."""
    dps = 40
    while True:
        with mpmath.workdps(dps):
            t = 2 * mpmath.pi * k / (grid_size + 1)
            phi = mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * mpmath.expj(t * x)
                              for x, c in zip(kernel.offsets, kernel.coeffs))
            margin = 1 - abs(phi)
            if margin != 0 and abs(margin) > mpmath.mpf(10) ** (20 - dps):
                return float(margin)
        if dps > 2000:
            return 0.0
        dps *= 2


def stability_scan(kernel: FilterKernel, delta: float = 1.0, grid_size: int = 4096) -> StabilityReport:
    """Sample ``|phi|`` on the open uniform grid ``2 pi k / ((G + 1) delta)``, ``k = 1..G``.

    A point passes when ``1 - |phi| >= 1e-12`` in double precision.  Points
    that do not pass are re-evaluated from the exact coefficients in
    extended precision and pass if the margin there is strictly positive.
    The kernel is stable when every point passes.
    """
    if kernel.m != 0:
        raise DiffintError(f"stability is defined for smoothers (m = 0), got m={kernel.m}")
    k = np.arange(1, grid_size + 1)
    w = 2 * np.pi * k / ((grid_size + 1) * delta)
    mag = np.abs(characteristic_discrete(kernel, delta, w))
    margin = 1 - mag
    for i in np.flatnonzero(margin < STABILITY_MARGIN):
        margin[i] = _margin_hp(kernel, int(k[i]), grid_size)
    i = int(np.argmax(mag))
    return StabilityReport(bool(np.all(margin > 0)), float(mag[i]), float(w[i]), float(margin.min()))


# ---------------------------------------------------------------------------
# Butterworth reference

def butterworth(m: int, n: int, omega0: float, omega):
    """Analog Butterworth differentiator of order ``m`` and filter order ``n``.

    Returns ``(magnitude, H)``; ``H`` is the complex response
    ``(i omega)^m / p_n(i omega)`` for ``n`` in {1, 2} and ``None`` otherwise.
    """
    if n <= m:
        raise DiffintError(f"Butterworth differentiator needs n > m, got m={m}, n={n}")
    if omega0 <= 0:
        raise DiffintError("cutoff frequency must be positive")
    w = _arr(omega)
    mag = np.sqrt(w ** (2 * m) / (1 + (w / omega0) ** (2 * n)))
    H = None
    u = 1j * w / omega0
    if n == 1:
        H = (1j * w) ** m / (1 + u)
    elif n == 2:
        H = (1j * w) ** m / (1 + math.sqrt(2) * u + u**2)
    return _ret(mag), (None if H is None else _ret(H))


def butterworth_impulse(n: int, omega0: float, t):
    """Impulse response of the ``m = 0`` Butterworth filter, ``n`` in {1, 2}."""
    t = _arr(t)
    if n == 1:
        out = omega0 * np.exp(-omega0 * t)
    elif n == 2:
        r = omega0 / math.sqrt(2)
        out = math.sqrt(2) * omega0 * np.exp(-r * t) * np.sin(r * t)
    else:
        raise DiffintError("impulse responses are provided for n = 1, 2 only")
    return _ret(np.where(t >= 0, out, 0.0))


CLOSED_FORMS: dict[str, Callable] = {
    "lanczos": lambda omega, delta=1.0: lanczos_h(omega, delta),
    "multiterm13": lambda omega, delta=1.0: multiterm_h13(omega, delta),
    "sg1": lambda omega, N, delta=1.0: sg_first_order_h(N, omega, delta),
    "min-ralpha": lambda omega, N, n, alpha: min_ralpha_phi(N, n, alpha, omega),
    "min-rinf": lambda omega, N, n: min_rinf_phi(N, n, omega),
    "maxflat-factored": lambda omega, N, n: maxflat_factored(N, n, omega)[1],
    "butterworth": lambda omega, m, n, omega0: _butterworth_value(m, n, omega0, omega),
}


def _butterworth_value(m, n, omega0, omega):
    mag, H = butterworth(m, n, omega0, omega)
    return mag if H is None else H


def closed_form(name: str, omega, **params):
    """Evaluate one of :data:`CLOSED_FORMS` by name.

    Examples
    --------
    >>> round(abs(closed_form("butterworth", 1.0, m=0, n=3, omega0=1.0)) ** 2, 12)
    0.5
    """
    try:
        fn = CLOSED_FORMS[name]
    except KeyError:
        raise DiffintError(f"unknown closed form {name!r}; choose from {sorted(CLOSED_FORMS)}") from None
    try:
        return fn(omega, **params)
    except TypeError as exc:
        raise DiffintError(f"bad parameters for {name}: {exc}") from None


# ---------------------------------------------------------------------------
# tables

def transfer_samples(fn: Callable, omegas: Sequence[float]) -> list[TransferSample]:
    values = np.asarray(fn(np.asarray(omegas, dtype=float)), dtype=complex)
    return [TransferSample(float(w), complex(v)) for w, v in zip(omegas, values)]


def write_transfer_csv(path, samples: Sequence[TransferSample]) -> Path:
    """``omega,re,im,abs,arg`` rows (``arg`` in radians)."""
    path = Path(path)
    lines = ["omega,re,im,abs,arg"]
    for s in samples:
        v = s.value
        lines.append(f"{s.omega!r},{v.real!r},{v.imag!r},{abs(v)!r},{cmath.phase(v)!r}")
    path.write_text("\n".join(lines) + "\n")
    return path


def write_loglog_csv(path, omegas, magnitudes) -> Path:
    """``log10_omega,log10_abs`` rows; zero magnitudes are skipped."""
    path = Path(path)
    lines = ["log10_omega,log10_abs"]
    for w, a in zip(omegas, magnitudes):
        if w > 0 and a > 0:
            lines.append(f"{math.log10(w)!r},{math.log10(a)!r}")
    path.write_text("\n".join(lines) + "\n")
    return path


def figure_tables(which: int, points: int = 401) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Magnitude tables behind the three transfer-function plots.

    1: Legendre first-derivative filters using ``P_1`` and ``P_1, P_3`` (delta = 1).
    2: first-order Savitzky-Golay filters, ``N = 1, 2`` (delta = 1).
    3: seventh-order Butterworth with ``omega0 = 1``; both the smoothing
       (``m = 0``) and the differentiating (``m = 1``) variants.
    """
    if which == 1:
        w = np.logspace(-2, 2, points)
        return {"fig1_n1": (w, np.abs(lanczos_h(w))), "fig1_n3": (w, np.abs(multiterm_h13(w)))}
    if which == 2:
        w = np.logspace(-2, math.log10(math.pi), points)
        return {f"fig2_N{N}": (w, np.abs(sg_first_order_h(N, w))) for N in (1, 2)}
    if which == 3:
        w = np.logspace(-2, 2, points)
        return {f"fig3_m{m}_n7": (w, butterworth(m, 7, 1.0, w)[0]) for m in (0, 1)}
    raise DiffintError(f"figure must be 1, 2 or 3, got {which}")
