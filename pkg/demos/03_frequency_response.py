"""
Frequency response of differentiators
=====================================

An ideal differentiator has transfer function i*omega.  Practical filters
follow it at low frequency and roll off above; this script tabulates how
far each one tracks the ideal line.
"""

# %%
import numpy as np

from diffint.transfer import butterworth, figure_tables, lanczos_h, multiterm_h13, sg_first_order_h


def tracking_limit(w, mag, tol=0.01):
    bad = np.abs(mag / w - 1) > tol
    return w[np.argmax(bad)] if bad.any() else np.inf


# %% [markdown]
# Continuous Legendre filters: one term versus two terms.

# %%
w = np.array([0.1, 0.5, 1.0, 2.0, 5.0])
print("omega     |H| one term   |H| two terms")
for wi, a, b in zip(w, np.abs(lanczos_h(w)), np.abs(multiterm_h13(w))):
    print(f"{wi:5.2f}   {a:12.6f}   {b:12.6f}")

tables = figure_tables(1)
for name, (om, mag) in tables.items():
    print(f"{name}: within 1% of the ideal line up to omega = {tracking_limit(om, mag):.3f}")

# %% [markdown]
# Discrete first-order Savitzky-Golay filters are periodic in omega with
# period 2*pi; the wider filter rolls off earlier.

# %%
for N in (1, 2, 5):
    om = np.linspace(0.01, np.pi, 400)
    print(f"N={N}: tracks to omega = {tracking_limit(om, np.abs(sg_first_order_h(N, om))):.3f}")

# %% [markdown]
# Low-frequency slopes of the log-log curves are 1 for all of them.

# %%
for k in (1, 2):
    for name, (om, mag) in figure_tables(k).items():
        sel = (om >= 1e-2) & (om <= 1e-1)
        print(f"{name}: slope {np.polyfit(np.log10(om[sel]), np.log10(mag[sel]), 1)[0]:.4f}")

# %% [markdown]
# The Butterworth differentiator is the usual analog reference: at the
# cutoff it sits 3 dB below the ideal response.

# %%
for m in (0, 1):
    mag, _ = butterworth(m, 7, 1.0, np.array([0.5, 1.0, 2.0]))
    print(f"m={m}: |H| at 0.5, 1, 2 = {np.round(mag, 6)}")
