"""Constructive trigonometry on the unit quarter circle.

Arc length, sector area, pi, arcsin and sin are built from chord bisection
alone and reported as certified [lo, hi] enclosures; a partition engine
checks that the limit does not depend on the approximating partition scheme.
"""

from .arclength import (
    BisectionRecord,
    arc_length,
    bisection_step,
    circle_midpoint,
    length_sequence,
    upper_bound,
)
from .errors import CapacityError, ConvergenceError, DegenerateArcError, DomainError
from .geometry import (
    Chord,
    CirclePoint,
    TriangleAtOrigin,
    chord_length,
    compare_by_ordinate,
    height_at_origin,
    height_for_chord,
    point_from_ordinate,
)
from .inverse import (
    TangentIntersection,
    arcsin,
    continuity_modulus,
    pi_constant,
    sin,
    tangent_intersection,
)
from .partitions import (
    AdditivityCheck,
    Partition,
    SCHEMES,
    additivity_check,
    bisection_partition,
    make_partition,
    ordinate_uniform_partition,
    polygonal_length,
    random_partition,
    refine_union,
    refinement_gap_bound,
    scheme_limit,
)
from .report import ConvergenceReport, Enclosure, IterationRow
from .sector import (
    SectorSandwich,
    gap_iterations,
    inner_polygon_area,
    outer_polygon_area,
    sector_area,
    sector_sandwich,
    verify_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "AdditivityCheck",
    "BisectionRecord",
    "CapacityError",
    "Chord",
    "CirclePoint",
    "ConvergenceError",
    "ConvergenceReport",
    "DegenerateArcError",
    "DomainError",
    "Enclosure",
    "IterationRow",
    "Partition",
    "SCHEMES",
    "SectorSandwich",
    "TangentIntersection",
    "TriangleAtOrigin",
    "additivity_check",
    "arc_length",
    "arcsin",
    "bisection_partition",
    "bisection_step",
    "chord_length",
    "circle_midpoint",
    "compare_by_ordinate",
    "continuity_modulus",
    "gap_iterations",
    "height_at_origin",
    "height_for_chord",
    "inner_polygon_area",
    "length_sequence",
    "make_partition",
    "ordinate_uniform_partition",
    "outer_polygon_area",
    "pi_constant",
    "point_from_ordinate",
    "polygonal_length",
    "random_partition",
    "refine_union",
    "refinement_gap_bound",
    "scheme_limit",
    "sector_area",
    "sector_sandwich",
    "sin",
    "tangent_intersection",
    "upper_bound",
    "verify_ratio",
]
