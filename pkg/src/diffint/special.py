"""Spherical Bessel, Bessel and Gegenbauer functions for real arguments."""

from __future__ import annotations

import math

import numpy as np

__all__ = ["spherical_jn", "bessel_jn", "gegenbauer"]

SERIES_THRESHOLD = 0.5


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def _sph_series(n: int, z: float) -> float:
    # z^n sum_k (-z^2/2)^k / (k! (2n+2k+1)!!)
    term = z**n / _double_factorial(2 * n + 1)
    total = term
    k = 0
    while True:
        k += 1
        term *= -z * z / (2 * k * (2 * n + 2 * k + 1))
        total += term
        if abs(term) <= 1e-17 * abs(total) or k > 400:
            return total


def _sph_upward(n: int, z: float) -> float:
    s, c = math.sin(z), math.cos(z)
    j0 = s / z
    if n == 0:
        return j0
    j1 = (s / z - c) / z
    for k in range(1, n):
        j0, j1 = j1, (2 * k + 1) / z * j1 - j0
    return j1


def spherical_jn(n: int, z):
    """Spherical Bessel function ``j_n(z)``.

    The power series is used for ``|z| < max(0.5, n)`` (upward recurrence is
    unstable there); otherwise the trigonometric closed forms are generated
    by upward recurrence from ``j_0`` and ``j_1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    for idx, v in np.ndenumerate(z):
        if abs(v) < max(SERIES_THRESHOLD, n):
            out[idx] = _sph_series(n, v)
        else:
            out[idx] = _sph_upward(n, v)
    return out if out.ndim else float(out)


def _jn_series(n: int, z: float) -> float:
    half = z / 2
    term = half**n / math.factorial(n)
    total = term
    k = 0
    while abs(term) > 1e-17 * abs(total) and k < 60:
        k += 1
        term *= -half * half / (k * (n + k))
        total += term
    return total


def _jn_miller(n: int, z: float) -> float:
    if abs(z) < 1.0:
        return _jn_series(n, z)
    sign = -1.0 if (z < 0 and n % 2) else 1.0
    z = abs(z)
    top = max(n, int(z))
    start = 2 * ((top + 20 + int(math.sqrt(40 * (top + 1)))) // 2)
    nxt, cur = 0.0, 1e-30
    norm = 0.0
    result = 0.0
    for k in range(start, 0, -1):
        prev = 2 * k / z * cur - nxt
        nxt, cur = cur, prev
        if abs(cur) > 1e200:
            nxt *= 1e-200
            cur *= 1e-200
            norm *= 1e-200
            result *= 1e-200
        if k - 1 == n:
            result = cur
        if (k - 1) % 2 == 0 and k - 1 > 0:
            norm += 2 * cur
    norm += cur  # j_0
    return sign * result / norm


def bessel_jn(n: int, z):
    """Bessel function of the first kind ``J_n(z)``, integer ``n >= 0``.

    Power series for ``|z| < 1``, otherwise Miller's backward recurrence
    normalized with ``J_0 + 2 sum J_{2k} = 1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    for idx, v in np.ndenumerate(z):
        out[idx] = _jn_miller(n, float(v))
    return out if out.ndim else float(out)


def gegenbauer(n: int, lam, x):
    """Gegenbauer polynomial ``C_n^lam(x)`` by its three-term recurrence."""
    x = np.asarray(x, dtype=float)
    lam = float(lam)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 2 * lam * x
    for k in range(1, n):
        prev, cur = cur, (2 * (k + lam) * x * cur - (k + 2 * lam - 1) * prev) / (k + 1)
    return cur if cur.ndim else float(cur)
