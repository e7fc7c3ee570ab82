"""Numerical toolkit for the Poincare disk model of the hyperbolic plane.

Core surfaces: disk primitives (points, distances, geodesics, isometries),
maximal-area triangle machinery with its optimality certificates, and a
perimeter-preserving polygon improver for isoperimetric experiments.
"""

__version__ = "0.1.0"

from .disk import (
    D_MAX,
    ORIGIN,
    DiskIsometry,
    DiskPoint,
    EuclideanCircle,
    Geodesic,
    angle_at_vertex,
    apply_isometry,
    geodesic_through,
    hyp_distance,
    isometry_to_origin,
    point_from_polar,
)
from .errors import (
    DegenerateInputError,
    DomainError,
    HyplobeError,
    NonConvexError,
    SolverError,
)
from .polygon import (
    HyperbolicPolygon,
    RegularPolygonSpec,
    circle_geometry,
    circumcircle_fit,
    isoperimetric_deficit,
    local_triangle,
    polygon_area,
    polygon_perimeter,
    random_convex_polygon,
    regular_polygon,
    regular_polygon_for_perimeter,
    regular_polygon_vertices,
    steiner_move,
    steiner_optimize,
)
from .triangle import (
    ALPHA_EPS,
    Figure1,
    TriangleSolution,
    area_defect,
    b_prime_point,
    build_figure1,
    embed_triangle,
    omega_circle,
    optimal_alpha,
    optimality_certificate,
    solve_sas,
    tau_angle,
)

__all__ = [
    "ALPHA_EPS",
    "D_MAX",
    "ORIGIN",
    "DegenerateInputError",
    "DiskIsometry",
    "DiskPoint",
    "DomainError",
    "EuclideanCircle",
    "Figure1",
    "Geodesic",
    "HyperbolicPolygon",
    "HyplobeError",
    "NonConvexError",
    "RegularPolygonSpec",
    "SolverError",
    "TriangleSolution",
    "angle_at_vertex",
    "apply_isometry",
    "area_defect",
    "b_prime_point",
    "build_figure1",
    "circle_geometry",
    "circumcircle_fit",
    "embed_triangle",
    "geodesic_through",
    "hyp_distance",
    "isometry_to_origin",
    "isoperimetric_deficit",
    "local_triangle",
    "omega_circle",
    "optimal_alpha",
    "optimality_certificate",
    "point_from_polar",
    "polygon_area",
    "polygon_perimeter",
    "random_convex_polygon",
    "regular_polygon",
    "regular_polygon_for_perimeter",
    "regular_polygon_vertices",
    "solve_sas",
    "steiner_move",
    "steiner_optimize",
    "tau_angle",
]
