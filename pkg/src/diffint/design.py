"""Synthesis of FIR derivative and smoothing kernels.

Kernels are exact rational vectors ``rho`` over a window of integer offsets.
They are stored unscaled; applying a kernel with derivative order ``m`` to
data with spacing ``delta`` divides by ``delta**m`` (see
:mod:`diffint.estimate`).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import factorial
from numbers import Rational
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import DesignError, InputError
from .kernels import KernelSpec, cd_kernel_m_deriv_at0
from .measures import (
    Family,
    gram,
    symmetric_hahn,
    symmetric_krawtchouk,
    weights,
)

__all__ = [
    "DesignSpec",
    "FilterKernel",
    "design_derivative_filter",
    "design_smoothing_filter",
    "design_min_ralpha",
    "design_min_rinf",
    "least_squares_oracle",
    "finite_difference_kernel",
    "verify_exactness",
    "solve_exact",
    "write_kernel_csv",
    "read_kernel_csv",
]


@dataclass(frozen=True)
class DesignSpec:
    """Request for a derivative filter of order ``m`` built from degrees ``m..n``."""

    family: Family
    m: int
    n: int

    def validate(self) -> None:
        fam = self.family
        if not fam.is_discrete:
            raise DesignError(f"discrete filters need a discrete family, got {fam}")
        if self.m < 0:
            raise DesignError(f"m must be nonnegative, got {self.m}")
        if self.m > self.n:
            raise DesignError(f"m exceeds n ({self.m} > {self.n})")
        if self.n > fam.max_degree:
            raise DesignError(f"n exceeds the {fam.max_degree + 1} support points minus one "
                              f"({self.n} > {fam.max_degree})")


@dataclass(frozen=True)
class FilterKernel:
    """A finite filter ``rho`` on consecutive integer offsets.

    Attributes
    ----------
    offsets : tuple of int
        Window offsets, e.g. ``-N..N``.
    coeffs : tuple of Fraction
        ``rho(offset)`` for each offset.
    m : int
        Derivative order realized by the kernel.
    exactness_degree : int
        Largest ``j`` such that the kernel is exact on all polynomials of
        degree ``<= j`` (``-1`` if none).
    n : int or None
        Highest polynomial degree used in the design.
    family : str
        Human readable description of the design.
    """

    offsets: tuple[int, ...]
    coeffs: tuple[Fraction, ...]
    m: int
    exactness_degree: int = -1
    n: int | None = None
    family: str = ""
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if len(self.offsets) != len(self.coeffs):
            raise InputError("offsets and coeffs differ in length")
        offs = tuple(int(o) for o in self.offsets)
        if any(b - a != 1 for a, b in zip(offs, offs[1:])):
            raise InputError("offsets must be consecutive integers")
        object.__setattr__(self, "offsets", offs)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def N(self) -> int:
        """Half width; ``max |offset|``."""
        return max(abs(self.offsets[0]), abs(self.offsets[-1]))

    @property
    def parity(self) -> str | None:
        """``"even"``/``"odd"`` if ``rho(-x) = +-rho(x)`` over a symmetric window."""
        if self.offsets[0] != -self.offsets[-1]:
            return None
        c = self.coeffs
        if all(a == b for a, b in zip(c, reversed(c))):
            return "even"
        if all(a == -b for a, b in zip(c, reversed(c))):
            return "odd"
        return None

    def __getitem__(self, x: int) -> Fraction:
        return self.coeffs[x - self.offsets[0]]

    def as_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])

    @property
    def max_rounding_error(self) -> float:
        """Largest ``|float(c) - c|`` over the coefficients."""
        return float(max(abs(Fraction(float(c)) - c) for c in self.coeffs))

    def moment(self, k: int) -> Fraction:
        """Exact ``sum_x rho(x) x**k``."""
        return sum((c * Fraction(x) ** k for x, c in zip(self.offsets, self.coeffs)), Fraction(0))


def _finish(offsets, coeffs, m, n, family) -> FilterKernel:
    kernel = FilterKernel(tuple(offsets), tuple(coeffs), m, n=n, family=str(family))
    return replace(kernel, exactness_degree=verify_exactness(kernel))


def design_derivative_filter(family: Family, m: int, n: int) -> FilterKernel:
    """Multi-term orthogonal-polynomial filter for the ``m``-th derivative.

    ``rho(xi) = w_xi * sum_{j=m}^{n} p_j^{(m)}(0) p_j(xi) / h_j``, in exact
    arithmetic.  The filter reproduces ``f^{(m)}(x)`` exactly whenever ``f``
    is a polynomial of degree ``<= n``; it is the ``m``-th derivative at 0 of
    the weighted least-squares fit of degree ``n`` over the window.

    Examples
    --------
    >>> from diffint.measures import centered_gram
    >>> [str(c) for c in design_derivative_filter(centered_gram(2), 1, 1).coeffs]
    ['-1/5', '-1/10', '0', '1/10', '1/5']
    """
    DesignSpec(family, m, n).validate()
    spec = KernelSpec(family, n)
    support = family.support
    coeffs = [w * cd_kernel_m_deriv_at0(spec, m, x) for x, w in zip(support, weights(family))]
    return _finish(support, coeffs, m, n, family)


def design_smoothing_filter(family: Family, n: int) -> FilterKernel:
    """Smoother ``rho(x) = K_{2n}(x, 0) w(x)``, exact for degree ``2n + 1``.

    Among all weight vectors exact to that degree this one minimizes
    ``sum rho(x)**2 / w(x)``.
    """
    if not family.is_discrete or not family.is_even:
        raise DesignError(f"smoothing filters need a symmetric discrete family, got {family}")
    if n < 0 or n >= family.N:
        raise DesignError(f"smoothing degree needs 0 <= n < N, got n={n}, N={family.N}")
    return design_derivative_filter(family, 0, 2 * n)


def _integer_alpha(alpha) -> int:
    if isinstance(alpha, bool):
        raise DesignError("alpha must be a nonnegative integer")
    if isinstance(alpha, Rational):
        a = Fraction(alpha)
    elif isinstance(alpha, float) and alpha.is_integer():
        a = Fraction(int(alpha))
    else:
        raise DesignError(f"minimum R_alpha designs need integer alpha, got {alpha!r}")
    if a.denominator != 1 or a < 0:
        raise DesignError(f"minimum R_alpha designs need integer alpha >= 0, got {alpha!r}")
    return int(a)


def design_min_ralpha(N: int, n: int, alpha) -> FilterKernel:
    """Greville's minimum-R_alpha smoother (symmetric Hahn weights)."""
    a = _integer_alpha(alpha)
    if n < 0 or n >= N:
        raise DesignError(f"need 0 <= n < N, got n={n}, N={N}")
    return design_smoothing_filter(symmetric_hahn(a, N), n)


def design_min_rinf(N: int, n: int) -> FilterKernel:
    """Greville's minimum-R_infinity smoother (binomial/Krawtchouk weights)."""
    if n < 0 or n >= N:
        raise DesignError(f"need 0 <= n < N, got n={n}, N={N}")
    return design_smoothing_filter(symmetric_krawtchouk(N), n)


def finite_difference_kernel(n: int) -> FilterKernel:
    """Degree-``n`` Gram design on ``n + 1`` points: the forward difference ``Delta^n``."""
    if n < 1:
        raise DesignError(f"finite differences need n >= 1, got {n}")
    return design_derivative_filter(gram(n + 1), n, n)


def verify_exactness(kernel: FilterKernel) -> int:
    """Largest ``j`` for which all moment conditions hold through degree ``j``.

    The conditions are ``sum rho(x) x^k = 0`` for ``k != m`` and ``m!`` for
    ``k = m``.  The search stops at ``len(window) - 1``.
    """
    cap = len(kernel.offsets) - 1
    target = factorial(kernel.m)
    j = -1
    for k in range(cap + 1):
        want = target if k == kernel.m else 0
        if kernel.moment(k) != want:
            break
        j = k
    return j


# ---------------------------------------------------------------------------
# independent oracle: exact normal equations

def solve_exact(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]]):
    """Solve ``A X = B`` by Gauss-Jordan elimination over the rationals."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(v) for v in brow] for row, brow in zip(A, B)]
    width = len(M[0])
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular normal matrix")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:width] for row in M]


def least_squares_oracle(N: int, weights_: Sequence, m: int, n: int,
                         *, offsets: Sequence[int] | None = None) -> FilterKernel:
    """Derivative kernel from the weighted normal equations, no orthogonal polynomials.

    Fits a degree-``n`` polynomial to samples at ``offsets`` (default
    ``-N..N``) by weighted least squares and returns the linear functional
    giving ``m! * (coefficient of x^m)`` of the fit.
    """
    offsets = tuple(range(-N, N + 1)) if offsets is None else tuple(offsets)
    w = [Fraction(v) for v in weights_]
    if len(w) != len(offsets):
        raise InputError(f"{len(w)} weights for {len(offsets)} offsets")
    if any(v <= 0 for v in w):
        raise InputError("weights must be positive")
    if not 0 <= m <= n <= len(offsets) - 1:
        raise DesignError(f"need 0 <= m <= n <= {len(offsets) - 1}, got m={m}, n={n}")
    V = [[Fraction(x) ** k for k in range(n + 1)] for x in offsets]
    normal = [[sum(w[i] * V[i][a] * V[i][b] for i in range(len(offsets)))
               for b in range(n + 1)] for a in range(n + 1)]
    rhs = [[w[i] * V[i][a] for i in range(len(offsets))] for a in range(n + 1)]
    X = solve_exact(normal, rhs)
    coeffs = [factorial(m) * X[m][i] for i in range(len(offsets))]
    return _finish(offsets, coeffs, m, n, "least-squares")


# ---------------------------------------------------------------------------
# CSV export

def _meta_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta")


def write_kernel_csv(kernel: FilterKernel, path) -> Path:
    """Write ``offset,num,den,float`` rows plus a ``key: value`` sidecar ``<path>.meta``."""
    path = Path(path)
    lines = ["offset,num,den,float"]
    for x, c in zip(kernel.offsets, kernel.coeffs):
        lines.append(f"{x},{c.numerator},{c.denominator},{float(c)!r}")
    path.write_text("\n".join(lines) + "\n")
    meta = {
        "family": kernel.family,
        "m": kernel.m,
        "n": kernel.n,
        "exactness_degree": kernel.exactness_degree,
        "max_rounding_error": kernel.max_rounding_error,
        "convention": "estimate(x) = delta**-m * sum_k rho(k) * f(x + k*delta)",
    }
    meta.update(kernel.meta)
    _meta_path(path).write_text("".join(f"{k}: {v}\n" for k, v in meta.items()))
    return path


def read_kernel_csv(path) -> FilterKernel:
    """Inverse of :func:`write_kernel_csv`; the sidecar supplies ``m``."""
    path = Path(path)
    rows = path.read_text().strip().splitlines()
    if not rows or rows[0].strip() != "offset,num,den,float":
        raise InputError(f"{path}: expected header 'offset,num,den,float'")
    offsets, coeffs = [], []
    for line in rows[1:]:
        try:
            x, num, den, _ = line.split(",")
            offsets.append(int(x))
            coeffs.append(Fraction(int(num), int(den)))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{path}: bad row {line!r}") from exc
    if not offsets:
        raise InputError(f"{path}: no kernel rows")
    meta = {}
    mpath = _meta_path(path)
    if mpath.exists():
        for line in mpath.read_text().splitlines():
            if ":" in line:
                k, v = line.split(":", 1)
                meta[k.strip()] = v.strip()
    try:
        m = int(meta.get("m", 0))
        n = meta.get("n")
        n = None if n in (None, "None") else int(n)
    except ValueError as exc:
        raise InputError(f"{mpath}: bad metadata") from exc
    kernel = FilterKernel(tuple(offsets), tuple(coeffs), m,
                          n=n,
                          family=meta.get("family", ""))
    return replace(kernel, exactness_degree=verify_exactness(kernel))
