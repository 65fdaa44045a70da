"""Derivative estimates from sampled signals and continuous windows.

All estimators share the scaling ``delta**-m``: a kernel ``rho`` applied at
``x`` gives ``delta**-m * sum_xi rho(xi) f(x + xi*delta)`` and the continuous
estimator replaces the sum by an integral against the orthogonality measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy import stats

from .design import FilterKernel
from .errors import DesignError, DiffintError, InputError
from .measures import Family, eval_poly, gauss_rule, leading_k, norm_h, poly_coeffs

__all__ = [
    "Signal",
    "EstimateReport",
    "apply_kernel",
    "kernel_estimate",
    "estimate_continuous",
    "kernel_estimator",
    "continuous_estimator",
    "convergence_probe",
    "predicted_leading_error",
    "kernel_leading_error",
    "read_signal_csv",
    "write_signal_csv",
    "write_estimate_csv",
]

EXACT_TOL = 1e-10


@dataclass(frozen=True)
class Signal:
    """Uniformly spaced samples ``y_i = f(origin + i*delta)``."""

    samples: np.ndarray
    delta: float
    origin: float = 0.0

    def __post_init__(self):
        y = np.asarray(self.samples, dtype=float)
        if y.ndim != 1 or y.size < 1:
            raise InputError("a signal needs at least one sample")
        if not self.delta > 0:
            raise InputError(f"spacing must be positive, got {self.delta}")
        object.__setattr__(self, "samples", y)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def x(self) -> np.ndarray:
        return self.origin + self.delta * np.arange(len(self))

    @classmethod
    def sample(cls, f: Callable, origin: float, delta: float, count: int) -> "Signal":
        x = origin + delta * np.arange(count)
        return cls(np.asarray(f(x), dtype=float), delta, origin)


@dataclass(frozen=True)
class EstimateReport:
    """Estimates of ``f^(m)`` and, for probes, the fitted convergence order.

    Attributes
    ----------
    x : ndarray
        Evaluation points (one per estimate).
    estimate : ndarray
        Estimated derivative values.
    true : ndarray or None
        Reference values, if known.
    error : ndarray or None
        ``estimate - true``.
    deltas : ndarray or None
        Window scales, for convergence probes.
    slope : float
        Least-squares slope of ``log|error|`` against ``log delta``; NaN when
        not fitted or when the estimator is exact.
    slope_halfwidth : float
        Half-width of the 95% confidence interval of ``slope``.
    leading_coefficient : float
        ``c`` in ``error ~ c * delta**slope``, signed.
    exact : bool
        True when the errors vanish to roundoff (``f`` is locally reproduced).
    """

    x: np.ndarray
    estimate: np.ndarray
    true: np.ndarray | None = None
    error: np.ndarray | None = None
    deltas: np.ndarray | None = None
    slope: float = math.nan
    slope_halfwidth: float = math.nan
    leading_coefficient: float = math.nan
    exact: bool = False


def _call(f: Callable, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    try:
        y = np.asarray(f(x), dtype=float)
        if y.shape == x.shape:
            return y
    except TypeError:
        pass
    return np.array([float(f(v)) for v in x.ravel()]).reshape(x.shape)


def apply_kernel(kernel: FilterKernel, signal: Signal) -> Signal:
    """Filter a signal over its valid region (no padding).

    The output has ``len(signal) - len(kernel) + 1`` samples; output sample
    ``i`` sits at the input position of offset 0 and equals
    ``delta**-m * sum_xi y[i + xi] rho(xi)``.
    """
    width = len(kernel.offsets)
    if len(signal) < width:
        raise InputError(f"signal has {len(signal)} samples, kernel needs at least {width}")
    out = np.correlate(signal.samples, kernel.as_float(), mode="valid") / signal.delta**kernel.m
    origin = signal.origin - kernel.offsets[0] * signal.delta
    return Signal(out, signal.delta, origin)


def kernel_estimate(kernel: FilterKernel, f: Callable, x: float, delta: float) -> float:
    """``delta**-m * sum_xi rho(xi) f(x + xi*delta)`` for a callable ``f``."""
    if not delta > 0:
        raise DiffintError(f"delta must be positive, got {delta}")
    xi = np.asarray(kernel.offsets, dtype=float)
    vals = _call(f, x + delta * xi)
    return float(np.dot(kernel.as_float(), vals) / delta**kernel.m)


def estimate_continuous(family: Family, m: int, n: int, f: Callable, x: float, delta: float) -> float:
    """Multi-term differentiation-by-integration estimate of ``f^(m)(x)``.

    Computes ``delta**-m * sum_{j=m}^{n} p_j^(m)(0) / h_j * integral f(x + delta*xi) p_j(xi) dmu``
    with a Gauss rule of ``max(32, n + 8)`` nodes.  Here ``n`` is the largest
    polynomial index used; for even measures the terms with ``j - m`` odd
    vanish, so ``(m, n) = (1, 1)`` is the Lanczos estimator and ``(1, 3)``
    adds the ``P_3`` term.
    """
    if family.is_discrete:
        raise DiffintError(f"continuous estimator needs a continuous family, got {family}")
    if not delta > 0:
        raise DiffintError(f"delta must be positive, got {delta}")
    if not 0 <= m <= n:
        raise DesignError(f"need 0 <= m <= n, got m={m}, n={n}")
    nodes, w = gauss_rule(family, max(32, n + 8))
    fx = _call(f, x + delta * nodes) * w
    total = 0.0
    for j in range(m, n + 1):
        d = poly_coeffs(family, j).deriv_at0(m)
        if d == 0:
            continue
        total += float(d / norm_h(family, j)) * float(np.dot(fx, eval_poly(family, j, nodes)))
    return total / delta**m


def kernel_estimator(kernel: FilterKernel) -> Callable:
    """Estimator ``(f, x, delta) -> float`` backed by a discrete kernel."""
    return lambda f, x, delta: kernel_estimate(kernel, f, x, delta)


def continuous_estimator(family: Family, m: int, n: int) -> Callable:
    """Estimator ``(f, x, delta) -> float`` backed by :func:`estimate_continuous`."""
    return lambda f, x, delta: estimate_continuous(family, m, n, f, x, delta)


def convergence_probe(estimator: Callable, f: Callable, fm_true: float, x: float,
                      deltas: Sequence[float]) -> EstimateReport:
    """Measure the empirical order of ``estimator`` as ``delta -> 0``.

    ``deltas`` must be strictly decreasing with at least four entries.  The
    slope is fitted on the middle of the grid (first and last ``delta``
    dropped).  If any error is exactly zero, or all errors are at roundoff
    level (``1e-10`` relative to ``max(1, |fm_true|)``), the report is
    flagged ``exact`` and no slope is fitted.
    """
    d = np.asarray(deltas, dtype=float)
    if d.ndim != 1 or d.size < 4:
        raise InputError("convergence probes need at least 4 deltas")
    if np.any(d <= 0) or np.any(np.diff(d) >= 0):
        raise InputError("deltas must be positive and strictly decreasing")
    est = np.array([estimator(f, x, float(h)) for h in d])
    true = np.full_like(est, float(fm_true))
    err = est - true
    common = dict(x=np.full_like(d, float(x)), estimate=est, true=true, error=err, deltas=d)
    if np.any(err == 0) or np.all(np.abs(err) <= EXACT_TOL * max(1.0, abs(float(fm_true)))):
        return EstimateReport(**common, exact=True)
    mid = slice(1, -1)
    fit = stats.linregress(np.log(d[mid]), np.log(np.abs(err[mid])))
    dof = d[mid].size - 2
    half = float(stats.t.ppf(0.975, dof) * fit.stderr) if dof > 0 else math.nan
    sign = float(np.sign(np.median(err[mid])))
    return EstimateReport(**common, slope=float(fit.slope), slope_halfwidth=half,
                          leading_coefficient=sign * math.exp(fit.intercept))


def predicted_leading_error(family: Family, m: int, n: int, f_np1: float) -> float:
    """Coefficient ``c`` of ``estimate - f^(m)(x) ~ c * delta**(n - m + 1)``.

    ``c = -p_{n+1}^(m)(0) f^(n+1)(x) / (k_{n+1} (n+1)!)``, where ``n`` is the
    exactness bound of the estimator (``n = 2`` for Lanczos).  For even
    measures with ``n - m`` odd this is
    ``-(-1)^((n-m+1)/2) |p_{n+1}^(m)(0)| f^(n+1)(x) / (|k_{n+1}| (n+1)!)``.
    """
    top = family.max_degree
    if top is not None and n + 1 > top:
        raise DiffintError(f"p_{n + 1} does not exist for {family}; use kernel_leading_error")
    d = poly_coeffs(family, n + 1).deriv_at0(m)
    return -float(d / (leading_k(family, n + 1) * math.factorial(n + 1))) * f_np1


def kernel_leading_error(kernel: FilterKernel, derivatives: Callable[[int], float]) -> tuple[int, float]:
    """Order and coefficient of the leading error term of a discrete kernel.

    With ``j = exactness_degree + 1``, the error is
    ``(sum rho xi^j) / j! * f^(j)(x) * delta**(j - m)``.  ``derivatives(j)``
    must return ``f^(j)(x)``.  Returns ``(j - m, coefficient)``.
    """
    j = kernel.exactness_degree + 1
    return j - kernel.m, float(kernel.moment(j)) / math.factorial(j) * derivatives(j)


# ---------------------------------------------------------------------------
# CSV

def read_signal_csv(path) -> Signal:
    """Read an ``x,y`` CSV with strictly increasing, uniformly spaced ``x``.

    Spacing must be uniform to relative 1e-9.
    """
    path = Path(path)
    lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
    if not lines or lines[0].replace(" ", "") != "x,y":
        raise InputError(f"{path}: expected header 'x,y'")
    try:
        rows = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]], dtype=float)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if rows.ndim != 2 or rows.shape[0] < 2 or rows.shape[1] != 2:
        raise InputError(f"{path}: need at least two rows of two columns")
    x, y = rows[:, 0], rows[:, 1]
    if not np.all(np.isfinite(rows)):
        raise InputError(f"{path}: non-finite values")
    steps = np.diff(x)
    if np.any(steps <= 0):
        raise InputError(f"{path}: x must be strictly increasing")
    delta = (x[-1] - x[0]) / (x.size - 1)
    if np.max(np.abs(steps - delta)) > 1e-9 * delta:
        raise InputError(f"{path}: x spacing is not uniform to relative 1e-9")
    return Signal(y, float(delta), float(x[0]))


def write_signal_csv(signal: Signal, path) -> Path:
    path = Path(path)
    body = "".join(f"{a!r},{b!r}\n" for a, b in zip(signal.x.tolist(), signal.samples.tolist()))
    path.write_text("x,y\n" + body)
    return path


def write_estimate_csv(signal: Signal, path) -> Path:
    """``x,estimate`` rows for a filtered signal."""
    path = Path(path)
    body = "".join(f"{a!r},{b!r}\n" for a, b in zip(signal.x.tolist(), signal.samples.tolist()))
    path.write_text("x,estimate\n" + body)
    return path
