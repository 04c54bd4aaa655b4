"""Convex domains and their geometric functionals."""

from .domains import (
    BoundaryPoint,
    ConvexDomain,
    Disk,
    Ellipse,
    GenericDomain,
    Interval,
    LpBall,
    Polygon,
    boundary_point,
    make_domain,
    regular_polygon,
    square_domain,
    transform_domain,
)
from .functionals import (
    SubdifferentialReport,
    TangentProfile,
    check_subdifferential,
    circularity_radius,
    curvature_min,
    diameter,
    fekete_estimate,
    flat_side_lengths,
    lp_curvature,
    min_width,
    pointwise_turan_constant,
    r_needed,
    tangent_angle_profile,
    transfinite_diameter,
    transfinite_diameter_info,
)

__all__ = [
    "BoundaryPoint",
    "ConvexDomain",
    "Disk",
    "Ellipse",
    "GenericDomain",
    "Interval",
    "LpBall",
    "Polygon",
    "SubdifferentialReport",
    "TangentProfile",
    "boundary_point",
    "check_subdifferential",
    "circularity_radius",
    "curvature_min",
    "diameter",
    "fekete_estimate",
    "flat_side_lengths",
    "lp_curvature",
    "make_domain",
    "min_width",
    "pointwise_turan_constant",
    "r_needed",
    "regular_polygon",
    "square_domain",
    "tangent_angle_profile",
    "transfinite_diameter",
    "transfinite_diameter_info",
    "transform_domain",
]
