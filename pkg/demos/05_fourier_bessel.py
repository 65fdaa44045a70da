"""
Fourier transforms of orthogonal polynomials
============================================

The transform of p_n against its own measure has a closed form for each
family: spherical Bessel functions for Legendre, ordinary Bessel functions
for Chebyshev, and Gegenbauer polynomials in cos(theta/2) for Hahn.
"""

# %%
import numpy as np
from scipy import integrate

from diffint import chebyshev1, fourier_bessel, legendre, poly_coeffs, symmetric_hahn, weights
from diffint.transfer import hahn_fourier_bessel_pfaff

w = np.linspace(0.5, 8, 4)

# %% [markdown]
# Legendre: compare the closed form with adaptive quadrature.

# %%
L = legendre()
for n in (0, 3, 6):
    p = poly_coeffs(L, n)
    quad = [integrate.quad(lambda t: float(p(t)) * np.cos(x * t), -1, 1)[0]
            - 1j * integrate.quad(lambda t: float(p(t)) * np.sin(x * t), -1, 1)[0] for x in w]
    print(f"Legendre n={n}: max difference {np.max(np.abs(fourier_bessel(L, n, w) - quad)):.1e}")

# %% [markdown]
# Chebyshev: the weight is singular at the ends, so substitute x = cos(t).

# %%
T = chebyshev1()
for n in (1, 4):
    quad = [integrate.quad(lambda t: np.cos(n * t) * np.cos(x * np.cos(t)), 0, np.pi)[0]
            - 1j * integrate.quad(lambda t: np.cos(n * t) * np.sin(x * np.cos(t)), 0, np.pi)[0] for x in w]
    print(f"Chebyshev n={n}: max difference {np.max(np.abs(fourier_bessel(T, n, w) - quad)):.1e}")

# %% [markdown]
# Discrete Hahn: the Gegenbauer and hypergeometric forms against the plain
# sum over the 2N+1 support points.

# %%
fam = symmetric_hahn(2, 4)
theta = np.linspace(0.2, 6.0, 5)
for n in (0, 3, 8):
    wp = np.array([float(wi * poly_coeffs(fam, n)(x)) for x, wi in zip(fam.support, weights(fam))])
    direct = np.exp(-1j * np.outer(theta, fam.support)) @ wp
    scale = np.max(np.abs(direct))
    print(f"Hahn n={n}: Gegenbauer {np.max(np.abs(fourier_bessel(fam, n, theta) - direct)) / scale:.1e}, "
          f"hypergeometric {np.max(np.abs(hahn_fourier_bessel_pfaff(4, n, 2, theta) - direct)) / scale:.1e}"
          " (relative)")
