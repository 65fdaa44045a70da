"""Christoffel-Darboux kernels and least-squares projection."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import DesignError, InputError
from .measures import Family, eval_poly, leading_k, norm_h, poly_coeffs, weights
from .polynomial import PolyCoeffs, is_exact

__all__ = [
    "KernelSpec",
    "Projection",
    "cd_kernel",
    "cd_kernel_quotient",
    "cd_kernel_m_deriv_at0",
    "project",
]

# Below this separation the quotient form is a 0/0 and is never used.
NEAR_DIAGONAL = 1e-3


@dataclass(frozen=True)
class KernelSpec:
    """Reproducing kernel ``K_n`` of the degree-<=n polynomials of a family."""

    family: Family
    n: int

    def __post_init__(self):
        top = self.family.max_degree
        if self.n < 0 or (top is not None and self.n > top):
            raise DesignError(f"kernel degree {self.n} not available for {self.family}")


def _exact_capable(family: Family) -> bool:
    return isinstance(norm_h(family, 0), Fraction)


def _p(family: Family, j: int, x):
    if is_exact(x) and _exact_capable(family):
        return poly_coeffs(family, j)(x)
    return eval_poly(family, j, x)


def cd_kernel(spec: KernelSpec, x, y, *, check: bool = True):
    """Evaluate ``K_n(x, y) = sum_k p_k(x) p_k(y) / h_k``.

    Exact when ``x`` and ``y`` are rational and the family has rational norms.
    With ``check`` set and ``|x - y| >= 1e-3``, the result is compared with the
    Christoffel-Darboux quotient (relative tolerance 1e-10).
    """
    fam, n = spec.family, spec.n
    value = sum(_p(fam, k, x) * _p(fam, k, y) / norm_h(fam, k) for k in range(n + 1))
    top = fam.max_degree
    if check and (top is None or n < top) and abs(float(x) - float(y)) >= NEAR_DIAGONAL:
        q = cd_kernel_quotient(spec, float(x), float(y))
        if not math.isclose(float(value), q, rel_tol=1e-10, abs_tol=1e-10 * _scale(spec, x, y)):
            raise ArithmeticError(f"Christoffel-Darboux forms disagree: {float(value)} vs {q}")
    return value


def _scale(spec: KernelSpec, x, y) -> float:
    fam = spec.family
    return sum(abs(float(_p(fam, k, x) * _p(fam, k, y) / norm_h(fam, k))) for k in range(spec.n + 1))


def cd_kernel_quotient(spec: KernelSpec, x: float, y: float) -> float:
    """Christoffel-Darboux quotient form of ``K_n(x, y)``, valid for ``x != y``."""
    fam, n = spec.family, spec.n
    c = float(leading_k(fam, n) / (leading_k(fam, n + 1) * norm_h(fam, n)))
    num = (eval_poly(fam, n + 1, x) * eval_poly(fam, n, y)
           - eval_poly(fam, n, x) * eval_poly(fam, n + 1, y))
    return c * num / (x - y)


def cd_kernel_m_deriv_at0(spec: KernelSpec, m: int, xi):
    """``(d/dy)^m K_n(xi, y)`` at ``y = 0``.

    Equals ``sum_{j=m}^{n} p_j^{(m)}(0) p_j(xi) / h_j``; the derivatives at 0
    are read off the exact monomial coefficients.
    """
    fam, n = spec.family, spec.n
    if m < 0 or m > n:
        raise DesignError(f"derivative order m={m} must satisfy 0 <= m <= n={n}")
    total = 0
    for j in range(m, n + 1):
        d = poly_coeffs(fam, j).deriv_at0(m)
        if d == 0:
            continue
        total = total + d * _p(fam, j, xi) / norm_h(fam, j)
    return total


@dataclass(frozen=True)
class Projection:
    """Weighted least-squares polynomial ``sum_k a_k p_k`` of degree <= n."""

    family: Family
    n: int
    coefficients: tuple

    def as_poly(self) -> PolyCoeffs:
        out = PolyCoeffs.constant(0)
        for k, a in enumerate(self.coefficients):
            out = out + poly_coeffs(self.family, k) * a
        return out

    def __call__(self, eta):
        return self.as_poly()(eta)


def project(spec: KernelSpec, samples: Sequence | Mapping) -> Projection:
    """Project samples on a discrete support onto polynomials of degree <= n.

    ``samples`` is either a sequence aligned with ``family.support`` or a
    mapping from support points to values.  Rational samples give an exact
    projection.
    """
    fam = spec.family
    if not fam.is_discrete:
        raise InputError("projection from samples needs a discrete family")
    support = fam.support
    if isinstance(samples, Mapping):
        missing = [x for x in support if x not in samples]
        if missing:
            raise InputError(f"missing samples at {missing}")
        values = [samples[x] for x in support]
    else:
        values = list(samples)
        if len(values) != len(support):
            raise InputError(f"expected {len(support)} samples, got {len(values)}")
    exact = all(is_exact(v) for v in values)
    if not exact:
        values = [float(v) for v in values]
    w = weights(fam)
    coeffs = []
    for k in range(spec.n + 1):
        p = poly_coeffs(fam, k)
        s = sum((v * p(x) * wx for v, x, wx in zip(values, support, w)), Fraction(0) if exact else 0.0)
        a = s / norm_h(fam, k)
        coeffs.append(a if exact else float(a))
    return Projection(fam, spec.n, tuple(coeffs))
