"""
Estimating derivatives of sampled and continuous signals
========================================================

A derivative filter applied to noisy samples, the continuous Lanczos
estimator, and a measured convergence order.
"""

# %%
import numpy as np

from diffint import Signal, apply_kernel, centered_gram, design_derivative_filter, legendre
from diffint.estimate import continuous_estimator, convergence_probe, estimate_continuous

rng = np.random.default_rng(0)

# %% [markdown]
# Sample sin(x) with a little noise and differentiate with filters of
# growing width.  Wider windows average more noise away but add bias.

# %%
delta = 0.02
clean = Signal.sample(np.sin, 0.0, delta, 400)
noisy = Signal(clean.samples + rng.normal(0, 1e-3, len(clean)), delta)

for N in (2, 5, 10, 20):
    k = design_derivative_filter(centered_gram(N), 1, 2)
    est = apply_kernel(k, noisy)
    rms = np.sqrt(np.mean((est.samples - np.cos(est.x)) ** 2))
    noise_gain = np.sqrt(float(sum(c * c for c in k.coeffs))) / delta
    print(f"N={N:2d}: rms error {rms:.2e}   noise gain {noise_gain:8.2f}")

# %% [markdown]
# The continuous counterpart averages f against Legendre polynomials over
# [x - delta, x + delta].  With one term it is the Lanczos derivative.

# %%
L = legendre()
for d in (0.5, 0.1, 0.02):
    print(f"delta={d:<5} Lanczos {estimate_continuous(L, 1, 1, np.exp, 0.0, d):.10f}"
          f"   with P3 term {estimate_continuous(L, 1, 3, np.exp, 0.0, d):.10f}")

# %% [markdown]
# The probe halves delta repeatedly and fits log|error| against log(delta).

# %%
for name, n, grid in (("Lanczos", 1, 0.1 * 2.0 ** -np.arange(8)),
                      ("P1 + P3", 3, 0.5 * 2.0 ** -np.arange(7))):
    rep = convergence_probe(continuous_estimator(L, 1, n), np.exp, 1.0, 0.0, grid)
    print(f"{name:8s} order {rep.slope:.3f} +/- {rep.slope_halfwidth:.3f},"
          f" leading coefficient {rep.leading_coefficient:+.5f}")
