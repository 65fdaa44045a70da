"""
Designing derivative filters from orthogonal polynomials
========================================================

Every kernel here is computed in exact rational arithmetic from a discrete
orthogonal family, then cross-checked against a plain weighted least-squares
fit that knows nothing about orthogonal polynomials.
"""

# %%
from fractions import Fraction

from diffint import (
    centered_gram,
    design_derivative_filter,
    design_smoothing_filter,
    finite_difference_kernel,
    least_squares_oracle,
    symmetric_hahn,
    symmetric_krawtchouk,
    weights,
)


def show(label, kernel):
    coeffs = ", ".join(str(c) for c in kernel.coeffs)
    print(f"{label:<38} [{coeffs}]  exact to degree {kernel.exactness_degree}")


# %% [markdown]
# Uniform weights on five points give the classic first-derivative
# Savitzky-Golay filter: each sample is weighted by its offset, divided by 10.

# %%
show("uniform, N=2, first derivative", design_derivative_filter(centered_gram(2), 1, 1))
show("uniform, N=2, smoothing (cubic fit)", design_smoothing_filter(centered_gram(2), 1))

# %% [markdown]
# Changing the measure changes the filter.  Krawtchouk (binomial) weights
# taper towards the edges; Hahn weights interpolate between the two.

# %%
for fam in (symmetric_krawtchouk(3), symmetric_hahn(2, 3)):
    show(f"{fam}, first derivative", design_derivative_filter(fam, 1, 1))

# %% [markdown]
# The n-th forward difference is the special case of a Gram family on n+1
# points with m = n.

# %%
for n in (1, 2, 3):
    show(f"forward difference, n={n}", finite_difference_kernel(n))

# %% [markdown]
# Independent check: solve the weighted normal equations directly.

# %%
fam = symmetric_hahn(1, 4)
k = design_derivative_filter(fam, 2, 4)
o = least_squares_oracle(0, weights(fam), 2, 4, offsets=fam.support)
print("normal equations agree:", k.coeffs == o.coeffs)
print("coefficients are rationals:", all(isinstance(c, Fraction) for c in k.coeffs))

# %% [markdown]
# Raising the fit degree from n to n+1 leaves the kernel unchanged whenever
# n - m is even, because the extra basis polynomial has the wrong parity to
# contribute at the centre.

# %%
fam = centered_gram(4)
for m, n in ((1, 1), (1, 2), (1, 3)):
    same = design_derivative_filter(fam, m, n).coeffs == design_derivative_filter(fam, m, n + 1).coeffs
    print(f"m={m}: degree {n} -> {n + 1} unchanged? {same}")
