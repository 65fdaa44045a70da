"""Exact polynomials in the monomial basis.

Coefficients are :class:`fractions.Fraction` instances stored lowest degree
first.  Evaluation stays exact for ``int``/``Fraction`` arguments and falls
back to floating point (numpy aware) for anything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

__all__ = ["PolyCoeffs", "pochhammer", "is_exact"]


def pochhammer(a, k: int):
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)``; exact for rational ``a``."""
    out = Fraction(1) if isinstance(a, Rational) else 1.0
    for i in range(k):
        out *= a + i
    return out


def is_exact(x) -> bool:
    return isinstance(x, Rational) and not isinstance(x, bool)


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(Fraction(v) for v in c) if c else (Fraction(0),)


@dataclass(frozen=True)
class PolyCoeffs:
    """Monomial coefficients ``c_0 .. c_n`` with ``c_n != 0`` (unless zero poly)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def constant(cls, c) -> "PolyCoeffs":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "PolyCoeffs":
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "PolyCoeffs") -> "PolyCoeffs":
        n = max(len(self), len(other))
        return PolyCoeffs(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "PolyCoeffs") -> "PolyCoeffs":
        n = max(len(self), len(other))
        return PolyCoeffs(tuple(self[k] - other[k] for k in range(n)))

    def __mul__(self, other) -> "PolyCoeffs":
        if isinstance(other, PolyCoeffs):
            out = [Fraction(0)] * (len(self) + len(other) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return PolyCoeffs(tuple(out))
        s = Fraction(other)
        return PolyCoeffs(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def compose_linear(self, a, b) -> "PolyCoeffs":
        """Return ``x -> self(a*x + b)``."""
        lin = PolyCoeffs((Fraction(b), Fraction(a)))
        out = PolyCoeffs.constant(0)
        for c in reversed(self.coeffs):
            out = out * lin + PolyCoeffs.constant(c)
        return out

    def deriv(self, m: int = 1) -> "PolyCoeffs":
        c = self.coeffs
        for _ in range(m):
            c = tuple(k * c[k] for k in range(1, len(c))) or (Fraction(0),)
        return PolyCoeffs(c)

    def deriv_at0(self, m: int) -> Fraction:
        """``p^{(m)}(0) = m! * c_m``."""
        return factorial(m) * self[m]

    def __call__(self, x):
        if is_exact(x):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = np.asarray(x, dtype=float) if not np.iscomplexobj(x) else np.asarray(x)
        acc = np.zeros_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc if acc.ndim else acc[()]

    def as_float(self) -> np.ndarray:
        return np.array([float(c) for c in self.coeffs])


def poly_from(coeffs: Iterable) -> PolyCoeffs:
    return PolyCoeffs(tuple(Fraction(c) for c in coeffs))
