"""Orthogonality measures and their orthogonal polynomials.

Every family is fixed to one classical normalization:

===================  =======================  ===============================
family               support                  p_n
===================  =======================  ===============================
Legendre             [-1, 1], dx              P_n, P_n(1) = 1
ShiftedLegendre      [0, 1], dx               P_n(2x - 1)
Chebyshev1           [-1, 1], dx/sqrt(1-x^2)  T_n(cos t) = cos(n t)
Gram(N)              {0, .., N-1}, unit       t_n(x, N) = (1-N)_n Q_n(x; 0, 0, N-1)
CenteredGram(N)      {-N, .., N}, unit        t_n(x + N, 2N + 1)
SymmetricHahn(a, N)  {-N, .., N}, Hahn        Q_n(N + x; a, a, 2N)
SymmetricKrawtchouk  {-N, .., N}, C(2N, N+x)  K_n(N + x; 1/2, 2N)
===================  =======================  ===============================

Discrete families are handled in exact rational arithmetic.  ``Q_n`` and
``K_n`` are the Hahn and Krawtchouk polynomials in hypergeometric form,
``Q_n(0) = K_n(0) = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .errors import DegreeError, DiffintError, DomainError
from .polynomial import PolyCoeffs, is_exact, pochhammer

__all__ = [
    "Family",
    "legendre",
    "shifted_legendre",
    "chebyshev1",
    "gram",
    "centered_gram",
    "symmetric_hahn",
    "symmetric_krawtchouk",
    "family_from_name",
    "weight",
    "weights",
    "total_mass",
    "poly_coeffs",
    "eval_poly",
    "norm_h",
    "leading_k",
    "moment",
    "gauss_rule",
]

LEGENDRE = "legendre"
SHIFTED_LEGENDRE = "shifted-legendre"
CHEBYSHEV1 = "chebyshev1"
GRAM = "gram"
CENTERED_GRAM = "centered-gram"
HAHN = "hahn"
KRAWTCHOUK = "krawtchouk"

_CONTINUOUS = (LEGENDRE, SHIFTED_LEGENDRE, CHEBYSHEV1)
_DISCRETE = (GRAM, CENTERED_GRAM, HAHN, KRAWTCHOUK)

# Monomial coefficients of continuous families are only materialized up to here.
MAX_CONTINUOUS_COEFF_DEGREE = 64


@dataclass(frozen=True)
class Family:
    """An orthogonality measure together with its polynomial normalization.

    Use the module level constructors (:func:`centered_gram`, ...) rather
    than building instances by hand.
    """

    kind: str
    N: int | None = None
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.kind not in _CONTINUOUS + _DISCRETE:
            raise DiffintError(f"unknown family kind {self.kind!r}")
        if self.kind in _DISCRETE:
            if not isinstance(self.N, int) or isinstance(self.N, bool) or self.N < 1:
                raise DiffintError(f"{self.kind} needs a positive integer N, got {self.N!r}")
        if self.kind == HAHN:
            if self.alpha is None or self.alpha < 0:
                raise DiffintError(f"symmetric Hahn needs alpha >= 0, got {self.alpha!r}")

    @property
    def is_discrete(self) -> bool:
        return self.kind in _DISCRETE

    @property
    def is_even(self) -> bool:
        """True if the measure is symmetric about 0."""
        return self.kind not in (GRAM, SHIFTED_LEGENDRE)

    @property
    def support(self) -> tuple[int, ...]:
        if self.kind == GRAM:
            return tuple(range(self.N))
        if self.is_discrete:
            return tuple(range(-self.N, self.N + 1))
        raise DomainError(f"{self} has continuous support {self.interval}")

    @property
    def interval(self) -> tuple[float, float]:
        if self.kind == SHIFTED_LEGENDRE:
            return (0.0, 1.0)
        if self.kind in _CONTINUOUS:
            return (-1.0, 1.0)
        s = self.support
        return (float(s[0]), float(s[-1]))

    @property
    def max_degree(self) -> int | None:
        """Highest degree for which an orthogonal polynomial exists (None: unbounded)."""
        if self.is_discrete:
            return len(self.support) - 1
        return None

    def __str__(self) -> str:
        if self.kind == HAHN:
            return f"{self.kind}(alpha={self.alpha},N={self.N})"
        if self.is_discrete:
            return f"{self.kind}(N={self.N})"
        return self.kind


def legendre() -> Family:
    return Family(LEGENDRE)


def shifted_legendre() -> Family:
    return Family(SHIFTED_LEGENDRE)


def chebyshev1() -> Family:
    return Family(CHEBYSHEV1)


def gram(N: int) -> Family:
    """Gram (discrete Chebyshev) polynomials on the N points 0..N-1."""
    return Family(GRAM, N)


def centered_gram(N: int) -> Family:
    """Gram polynomials shifted to the 2N+1 points -N..N."""
    return Family(CENTERED_GRAM, N)


def symmetric_hahn(alpha, N: int) -> Family:
    alpha = Fraction(alpha)
    return Family(HAHN, N, alpha)


def symmetric_krawtchouk(N: int) -> Family:
    return Family(KRAWTCHOUK, N)


def family_from_name(name: str, N: int | None = None, alpha=None) -> Family:
    """Build a family from its kind string, e.g. ``"centered-gram"``."""
    name = name.lower()
    if name in _CONTINUOUS:
        return Family(name)
    if name == HAHN:
        return symmetric_hahn(0 if alpha is None else alpha, N)
    if name in _DISCRETE:
        return Family(name, N)
    raise DiffintError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# weights

def _check_degree(family: Family, n: int) -> None:
    if n < 0:
        raise DegreeError(f"degree must be nonnegative, got {n}")
    top = family.max_degree
    if top is not None and n > top:
        raise DegreeError(f"{family} has polynomials only up to degree {top}, got {n}")


def weight(family: Family, x):
    """Weight ``w_x`` of a support point (density value for continuous families)."""
    if family.is_discrete:
        if not (is_exact(x) and Fraction(x).denominator == 1 and int(x) in family.support):
            raise DomainError(f"{x!r} is not a support point of {family}")
        return _discrete_weight(family, int(x))
    lo, hi = family.interval
    if not lo <= x <= hi:
        raise DomainError(f"{x!r} lies outside {family.interval}")
    if family.kind == CHEBYSHEV1:
        if abs(x) == 1:
            raise DomainError("Chebyshev density is singular at the endpoints")
        return 1.0 / math.sqrt(1.0 - x * x)
    return Fraction(1) if is_exact(x) else 1.0


@lru_cache(maxsize=None)
def _discrete_weight(family: Family, x: int) -> Fraction:
    N = family.N
    if family.kind in (GRAM, CENTERED_GRAM):
        return Fraction(1)
    if family.kind == KRAWTCHOUK:
        return Fraction(comb(2 * N, N + x))
    a1 = family.alpha + 1
    return pochhammer(a1, N + x) * pochhammer(a1, N - x) / (factorial(N + x) * factorial(N - x))


def weights(family: Family) -> tuple[Fraction, ...]:
    """Weights over the whole (discrete) support, in support order."""
    return tuple(_discrete_weight(family, x) for x in family.support)


def total_mass(family: Family):
    if family.is_discrete:
        return sum(weights(family), Fraction(0))
    return {LEGENDRE: Fraction(2), SHIFTED_LEGENDRE: Fraction(1), CHEBYSHEV1: math.pi}[family.kind]


# ---------------------------------------------------------------------------
# exact monomial coefficients

def _hahn_Q(n: int, a, b, M: int) -> PolyCoeffs:
    # 3F2(-n, n+a+b+1, -x; a+1, -M; 1) as a polynomial in x
    out = PolyCoeffs.constant(0)
    falling = PolyCoeffs.constant(1)  # (-x)_k
    for k in range(n + 1):
        c = (pochhammer(Fraction(-n), k) * pochhammer(Fraction(n + a + b + 1), k)
             / (pochhammer(Fraction(a + 1), k) * pochhammer(Fraction(-M), k) * factorial(k)))
        out = out + falling * c
        falling = falling * PolyCoeffs((Fraction(k), Fraction(-1)))
    return out


def _krawtchouk_K(n: int, M: int) -> PolyCoeffs:
    # 2F1(-n, -x; -M; 2), i.e. p = 1/2
    out = PolyCoeffs.constant(0)
    falling = PolyCoeffs.constant(1)
    for k in range(n + 1):
        c = pochhammer(Fraction(-n), k) * 2**k / (pochhammer(Fraction(-M), k) * factorial(k))
        out = out + falling * c
        falling = falling * PolyCoeffs((Fraction(k), Fraction(-1)))
    return out


@lru_cache(maxsize=None)
def _legendre_coeffs(n: int) -> PolyCoeffs:
    if n == 0:
        return PolyCoeffs.constant(1)
    if n == 1:
        return PolyCoeffs.x()
    k = n - 1
    return (PolyCoeffs.x() * _legendre_coeffs(k) * Fraction(2 * k + 1, k + 1)
            - _legendre_coeffs(k - 1) * Fraction(k, k + 1))


@lru_cache(maxsize=None)
def _chebyshev_coeffs(n: int) -> PolyCoeffs:
    if n == 0:
        return PolyCoeffs.constant(1)
    if n == 1:
        return PolyCoeffs.x()
    return PolyCoeffs.x() * _chebyshev_coeffs(n - 1) * 2 - _chebyshev_coeffs(n - 2)


@lru_cache(maxsize=None)
def poly_coeffs(family: Family, n: int) -> PolyCoeffs:
    """Exact monomial coefficients of the family's degree-``n`` polynomial.

    Raises
    ------
    DegreeError
        If ``n`` exceeds the number of support points minus one, or exceeds
        64 for a continuous family.
    """
    _check_degree(family, n)
    kind, N = family.kind, family.N
    if kind in _CONTINUOUS and n > MAX_CONTINUOUS_COEFF_DEGREE:
        raise DegreeError(f"monomial coefficients are only materialized up to degree "
                          f"{MAX_CONTINUOUS_COEFF_DEGREE}; use eval_poly")
    if kind == LEGENDRE:
        return _legendre_coeffs(n)
    if kind == SHIFTED_LEGENDRE:
        return _legendre_coeffs(n).compose_linear(2, -1)
    if kind == CHEBYSHEV1:
        return _chebyshev_coeffs(n)
    if kind == GRAM:
        return _hahn_Q(n, 0, 0, N - 1) * pochhammer(Fraction(1 - N), n)
    if kind == CENTERED_GRAM:
        return _hahn_Q(n, 0, 0, 2 * N).compose_linear(1, N) * pochhammer(Fraction(-2 * N), n)
    if kind == HAHN:
        a = family.alpha
        return _hahn_Q(n, a, a, 2 * N).compose_linear(1, N)
    return _krawtchouk_K(n, 2 * N).compose_linear(1, N)


# ---------------------------------------------------------------------------
# normalization constants

@lru_cache(maxsize=None)
def norm_h(family: Family, n: int):
    """Squared norm ``h_n`` of ``p_n`` (exact except for Chebyshev1)."""
    _check_degree(family, n)
    kind, N = family.kind, family.N
    if kind == LEGENDRE:
        return Fraction(2, 2 * n + 1)
    if kind == SHIFTED_LEGENDRE:
        return Fraction(1, 2 * n + 1)
    if kind == CHEBYSHEV1:
        return math.pi if n == 0 else math.pi / 2
    if kind == GRAM:
        return pochhammer(Fraction(N - n), 2 * n + 1) / (2 * n + 1)
    if kind == CENTERED_GRAM:
        return pochhammer(Fraction(2 * N + 1 - n), 2 * n + 1) / (2 * n + 1)
    M = 2 * N
    if kind == KRAWTCHOUK:
        return Fraction(2**M * (-1) ** n * factorial(n)) / pochhammer(Fraction(-M), n)
    a = family.alpha
    return ((-1) ** n * pochhammer(n + 2 * a + 1, M + 1) * factorial(n)
            / ((2 * n + 2 * a + 1) * pochhammer(Fraction(-M), n) * factorial(M)))


@lru_cache(maxsize=None)
def leading_k(family: Family, n: int):
    """Leading monomial coefficient ``k_n`` of ``p_n``."""
    _check_degree(family, n)
    kind, N = family.kind, family.N
    if kind == LEGENDRE:
        return Fraction(comb(2 * n, n), 2**n)
    if kind in (SHIFTED_LEGENDRE, GRAM, CENTERED_GRAM):
        return Fraction(comb(2 * n, n))
    if kind == CHEBYSHEV1:
        return Fraction(1) if n == 0 else Fraction(2 ** (n - 1))
    M = 2 * N
    if kind == KRAWTCHOUK:
        return Fraction(2**n) / pochhammer(Fraction(-M), n)
    a = family.alpha
    return pochhammer(n + 2 * a + 1, n) / (pochhammer(a + 1, n) * pochhammer(Fraction(-M), n))


# ---------------------------------------------------------------------------
# floating point evaluation by three-term recurrence

@lru_cache(maxsize=None)
def _recurrence(family: Family, n: int):
    """Shift, per-degree scale factors and the recurrence coefficients.

    For discrete kinds we run the Hahn/Krawtchouk recurrence on ``X = x + shift``
    and multiply by ``scale[k]``.
    """
    kind, N = family.kind, family.N
    if kind == GRAM:
        a, M, shift = Fraction(0), N - 1, 0
        scale = [float(pochhammer(Fraction(1 - N), k)) for k in range(n + 1)]
    elif kind == CENTERED_GRAM:
        a, M, shift = Fraction(0), 2 * N, N
        scale = [float(pochhammer(Fraction(-2 * N), k)) for k in range(n + 1)]
    elif kind == HAHN:
        a, M, shift = family.alpha, 2 * N, N
        scale = [1.0] * (n + 1)
    else:
        return N, [1.0] * (n + 1), None
    A, C = [], []
    for k in range(n):
        A.append(float((k + 2 * a + 1) * (k + a + 1) * (M - k)
                       / ((2 * k + 2 * a + 1) * (2 * k + 2 * a + 2))))
        C.append(0.0 if k == 0 else
                 float(k * (k + 2 * a + M + 1) * (k + a) / ((2 * k + 2 * a) * (2 * k + 2 * a + 1))))
    return shift, scale, (A, C)


def eval_poly(family: Family, n: int, x):
    """Evaluate ``p_n(x)`` in floating point via the three-term recurrence.

    Works on scalars and arrays; ``x`` may lie anywhere on the real line.
    """
    _check_degree(family, n)
    x = np.asarray(x, dtype=float)
    kind = family.kind
    if kind == SHIFTED_LEGENDRE:
        return eval_poly(legendre(), n, 2 * x - 1)
    p0 = np.ones_like(x)
    if kind == LEGENDRE:
        prev, cur = p0, x.copy()
        if n == 0:
            return _out(prev)
        for k in range(1, n):
            prev, cur = cur, ((2 * k + 1) * x * cur - k * prev) / (k + 1)
        return _out(cur)
    if kind == CHEBYSHEV1:
        prev, cur = p0, x.copy()
        if n == 0:
            return _out(prev)
        for _ in range(1, n):
            prev, cur = cur, 2 * x * cur - prev
        return _out(cur)
    shift, scale, rec = _recurrence(family, n)
    X = x + shift
    if n == 0:
        return _out(p0)
    if kind == KRAWTCHOUK:
        M = 2 * family.N
        prev, cur = p0, (M - 2 * X) / M
        for k in range(1, n):
            prev, cur = cur, ((M - 2 * X) * cur - k * prev) / (M - k)
        return _out(cur)
    A, C = rec
    prev, cur = p0, (A[0] - X) / A[0]
    for k in range(1, n):
        prev, cur = cur, ((A[k] + C[k] - X) * cur - C[k] * prev) / A[k]
    return _out(cur * scale[n])


def _out(a: np.ndarray):
    return a if a.ndim else float(a)


# ---------------------------------------------------------------------------
# quadrature and moments

def gauss_rule(family: Family, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss nodes and weights for a continuous family's measure."""
    if family.kind == LEGENDRE:
        return np.polynomial.legendre.leggauss(count)
    if family.kind == SHIFTED_LEGENDRE:
        x, w = np.polynomial.legendre.leggauss(count)
        return (x + 1) / 2, w / 2
    if family.kind == CHEBYSHEV1:
        k = np.arange(1, count + 1)
        return np.cos((2 * k - 1) * np.pi / (2 * count)), np.full(count, np.pi / count)
    raise DiffintError(f"{family} is discrete; sum over its support instead")


def moment(family: Family, n: int):
    """``integral x^n p_n(x) dmu(x)``, computed directly and checked against ``h_n / k_n``.

    Discrete families sum exactly over the support; continuous families use
    a Gauss rule that integrates the degree-``2n`` integrand exactly.
    """
    _check_degree(family, n)
    expected = norm_h(family, n) / leading_k(family, n)
    if family.is_discrete:
        p = poly_coeffs(family, n)
        value = sum((Fraction(x) ** n * p(x) * w
                     for x, w in zip(family.support, weights(family))), Fraction(0))
        if value != expected:
            raise ArithmeticError(f"moment identity fails for {family}, n={n}: {value} != {expected}")
        return value
    nodes, w = gauss_rule(family, max(32, n + 8))
    value = float(np.sum(w * nodes**n * eval_poly(family, n, nodes)))
    if not math.isclose(value, float(expected), rel_tol=1e-12, abs_tol=1e-300):
        raise ArithmeticError(f"moment identity fails for {family}, n={n}: {value} != {float(expected)}")
    return value
