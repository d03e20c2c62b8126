"""Exact separating families of planar point sets by halfplanes, discs and convex sets."""
from .builders import (
    BUILDERS,
    build,
    binary_family,
    convex_separate,
    disc_separate,
    halfplane_separate,
    largest_convex_subset,
    prefix_halfplanes,
    prune_to_minimal,
)
from .constructions import (
    capped_convex_parent,
    circle_points,
    collinear_points,
    erdos_szekeres_set,
    random_general_position,
    twin_set,
)
from .estimators import MinimumSeparatingFamily, SeparatingFamilyTransformer
from .geometry import (
    GeneralPositionError,
    Point,
    PointSet,
    clearance,
    convex_hull,
    generic_direction,
    in_convex_position,
    is_general_position,
    orientation,
)
from .oracle import (
    CapExceededError,
    InfeasibleError,
    brute_force_min_size,
    convex_traces,
    disc_traces,
    halfplane_traces,
    min_separating_size,
    s_value,
)
from .separators import (
    ConvexPolygon,
    Disc,
    Halfplane,
    SeparatingFamily,
    contains,
    is_separating,
    separates,
    trace,
)

__version__ = "0.1.0"

__all__ = [
    "binary_family",
    "brute_force_min_size",
    "build",
    "BUILDERS",
    "CapExceededError",
    "capped_convex_parent",
    "circle_points",
    "clearance",
    "collinear_points",
    "contains",
    "convex_hull",
    "convex_separate",
    "convex_traces",
    "ConvexPolygon",
    "Disc",
    "disc_separate",
    "disc_traces",
    "erdos_szekeres_set",
    "GeneralPositionError",
    "generic_direction",
    "Halfplane",
    "halfplane_separate",
    "halfplane_traces",
    "in_convex_position",
    "InfeasibleError",
    "is_general_position",
    "is_separating",
    "largest_convex_subset",
    "MinimumSeparatingFamily",
    "min_separating_size",
    "orientation",
    "Point",
    "PointSet",
    "prefix_halfplanes",
    "prune_to_minimal",
    "random_general_position",
    "s_value",
    "separates",
    "SeparatingFamilyTransformer",
    "SeparatingFamily",
    "trace",
    "twin_set",
]
