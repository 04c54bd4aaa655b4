"""turanbounds: inverse Markov factors on planar convex domains.

Geometry of convex boundaries (curvature, widths, enclosing tangent disks),
lower-bound formulas for ||p'||/||p|| over polynomials with all roots in the
domain, stable root-form sup-norm evaluation, and a derivative-free extremal
search that certifies theory against numerics.
"""

from .bounds import (
    BoundResult,
    all_lower_bounds,
    best_lower,
    bound_circular,
    bound_curvature,
    bound_disk,
    bound_interval,
    bound_sqrt_general,
    bound_width,
    bounds_report,
    chebyshev_lower,
    chebyshev_minmax_bruteforce,
    erod_eligible,
    upper_existence,
)
from .extremal import CertifyResult, ExtremalReport, certify, search
from .geometry import (
    BoundaryPoint,
    ConvexDomain,
    boundary_point,
    check_subdifferential,
    circularity_radius,
    curvature_min,
    diameter,
    lp_curvature,
    make_domain,
    min_width,
    pointwise_turan_constant,
    r_needed,
    tangent_angle_profile,
    transfinite_diameter,
    transform_domain,
)
from .kernels import BACKEND
from .polynomials import (
    RootPolynomial,
    SupNorm,
    abs_derivative,
    log_abs,
    log_deriv_sum,
    markov_factor,
    markov_report,
    sup_norm,
    sup_norm_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundResult",
    "BoundaryPoint",
    "CertifyResult",
    "ConvexDomain",
    "ExtremalReport",
    "RootPolynomial",
    "SupNorm",
    "abs_derivative",
    "all_lower_bounds",
    "best_lower",
    "bound_circular",
    "bound_curvature",
    "bound_disk",
    "bound_interval",
    "bound_sqrt_general",
    "bound_width",
    "bounds_report",
    "boundary_point",
    "certify",
    "chebyshev_lower",
    "chebyshev_minmax_bruteforce",
    "check_subdifferential",
    "circularity_radius",
    "curvature_min",
    "diameter",
    "erod_eligible",
    "log_abs",
    "log_deriv_sum",
    "lp_curvature",
    "make_domain",
    "markov_factor",
    "markov_report",
    "min_width",
    "pointwise_turan_constant",
    "r_needed",
    "search",
    "sup_norm",
    "sup_norm_derivative",
    "tangent_angle_profile",
    "transfinite_diameter",
    "transform_domain",
    "upper_existence",
]
