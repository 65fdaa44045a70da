"""Differentiation by integration with orthogonal polynomials.

Exact rational design of derivative and smoothing filters, continuous
Lanczos-type estimators and their frequency-domain analysis.
"""

from .design import (
    DesignSpec,
    FilterKernel,
    design_derivative_filter,
    design_min_ralpha,
    design_min_rinf,
    design_smoothing_filter,
    finite_difference_kernel,
    least_squares_oracle,
    read_kernel_csv,
    verify_exactness,
    write_kernel_csv,
)
from .errors import DegreeError, DesignError, DiffintError, DomainError, InputError
from .estimate import (
    EstimateReport,
    Signal,
    apply_kernel,
    convergence_probe,
    estimate_continuous,
    kernel_estimate,
)
from .kernels import KernelSpec, cd_kernel, cd_kernel_m_deriv_at0, project
from .measures import (
    Family,
    centered_gram,
    chebyshev1,
    eval_poly,
    gram,
    leading_k,
    legendre,
    norm_h,
    poly_coeffs,
    shifted_legendre,
    symmetric_hahn,
    symmetric_krawtchouk,
    weight,
    weights,
)
from .transfer import (
    butterworth,
    characteristic_continuous,
    characteristic_discrete,
    flatness_check,
    fourier_bessel,
    min_ralpha_phi,
    min_rinf_phi,
    stability_scan,
)

__version__ = "0.1.0"
