from .points import (
    LinearForm,
    ProjPoint,
    Ring,
    avoids_delta,
    coordinate_matrix,
    cremona,
    delta_stratum,
    general_position,
    hadamard_point_hyperplane,
    hadamard_points,
    on_line,
    span_contains,
)

__all__ = [
    "points",
    "LinearForm",
    "ProjPoint",
    "Ring",
    "avoids_delta",
    "coordinate_matrix",
    "cremona",
    "delta_stratum",
    "general_position",
    "hadamard_point_hyperplane",
    "hadamard_points",
    "on_line",
    "span_contains",
]
