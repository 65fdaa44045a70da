"""
Smoothers that never amplify
============================

A smoothing filter is stable when |phi(omega)| < 1 away from omega = 0.
The minimum-R_alpha family (Hahn weights) and its Krawtchouk limit, the
maximally flat smoother, are checked here, together with a filter that
fails.
"""

# %%
import numpy as np

from diffint import FilterKernel, design_min_ralpha, design_min_rinf, stability_scan
from diffint.transfer import characteristic_discrete, flatness_check, min_ralpha_phi, min_rinf_phi

# %% [markdown]
# Closed-form characteristic functions agree with the direct sum over taps.

# %%
w = np.linspace(0.1, 3.0, 7)
k = design_min_ralpha(4, 1, 2)
print("closed form vs direct sum:",
      np.max(np.abs(min_ralpha_phi(4, 1, 2, w) - characteristic_discrete(k, 1.0, w))))

# %% [markdown]
# Near omega = 0 a maximally flat smoother differs from 1 by far less than
# double precision can show; the scan falls back to extended precision there.

# %%
for N, n in ((2, 0), (4, 1), (6, 5)):
    rep = stability_scan(design_min_rinf(N, n))
    print(f"min R_inf N={N} n={n}: stable={rep.stable}  smallest margin {rep.min_margin:.3e}"
          f"  zero of order {flatness_check(N, n)} at pi")

# %% [markdown]
# A sharpening kernel is rejected.

# %%
rep = stability_scan(FilterKernel((-1, 0, 1), (-1, 3, -1), 0))
print(f"(-1, 3, -1): stable={rep.stable}, max |phi| = {rep.max_abs:.3f} at omega = {rep.omega_at_max:.3f}")

# %% [markdown]
# The maximally flat response decreases monotonically from 1 to 0 on [0, pi].

# %%
om = np.linspace(0, np.pi, 9)
print(np.round(min_rinf_phi(5, 2, om), 6))
