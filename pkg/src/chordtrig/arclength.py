"""Chord-bisection scheme: certified arc length on the quarter circle.

Level m splits an arc into 2^m congruent sub-arcs; all level-m chords share
one length l_m, and the polygonal length is L_m = 2^m * l_m. Because of the
congruence, the whole ladder is carried by a single (length, height) pair:
the chord of each half arc is

    l' = l / sqrt(2 * (1 + h)),   h = sqrt(1 - (l/2)^2),

which is the stable form of sqrt(2 - 2h) (no cancellation as h -> 1). Since
sqrt(2 * (1 + h)) <= 2, the computed L_m never decreases, and since the
factor is >= sqrt(2), each step contracts the segment by at least ~sqrt(2).

The certified bracket at level m is [L_m, L_m / h_m]: the lower arm because
the polygonal lengths increase to the arc length, the upper arm because
L_m / h_m is twice the circumscribed tangent fan's area, which contains the
sector whose doubled area equals the arc length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Sequence

from .errors import CapacityError, ConvergenceError, DegenerateArcError, DomainError
from .geometry import (
    CirclePoint,
    chord_length,
    compare_by_ordinate,
    height_at_origin,
    height_for_chord,
    point_from_ordinate,
)
from .report import STOP_CAP, STOP_TOLERANCE, ConvergenceReport, Enclosure, build_row

DEFAULT_MAX_ITER = 40

# 2^m beyond this could not index a materialized point list on any host.
_MAX_LEVEL = 62


@dataclass(frozen=True)
class BisectionRecord:
    """State of the scheme at level ``m``.

    ``total_length`` is exactly 2^m * segment_length (power-of-two scaling),
    and height^2 + (segment_length/2)^2 = 1 up to a few ulp.
    """

    m: int
    segment_length: float
    height: float
    total_length: float


def circle_midpoint(a: CirclePoint, b: CirclePoint) -> CirclePoint:
    """The point of the arc ``ab`` equidistant from both endpoints.

    Computed as the chord midpoint pushed back onto the circle; by symmetry
    that point satisfies |aP| = |Pb|. Raises ``DegenerateArcError`` when the
    endpoints coincide or the arc spans too few representable ordinates for
    a strictly interior midpoint to exist.
    """
    if a.y == b.y:
        raise DegenerateArcError("cannot bisect a degenerate arc")
    mx = 0.5 * (a.x + b.x)
    my = 0.5 * (a.y + b.y)
    p = point_from_ordinate(my / math.hypot(mx, my))
    lo_y, hi_y = (a.y, b.y) if a.y < b.y else (b.y, a.y)
    if not lo_y < p.y < hi_y:
        raise DegenerateArcError(
            "arc spans too few representable ordinates to bisect")
    return p


def bisection_step(points: Sequence[CirclePoint]) -> list[CirclePoint]:
    """One refinement step: insert the equidistant point of every adjacent pair.

    The input must be ordered by strictly decreasing ordinate; the output has
    2n - 1 points for an n-point input and keeps the ordering.
    """
    if len(points) < 2:
        raise DomainError("a bisection state needs at least two points")
    for prev, cur in zip(points, points[1:]):
        if compare_by_ordinate(prev, cur) <= 0:
            raise DomainError(
                "input points must be ordered by strictly decreasing ordinate")
    out: list[CirclePoint] = [points[0]]
    for prev, cur in zip(points, points[1:]):
        out.append(circle_midpoint(prev, cur))
        out.append(cur)
    return out


def _ladder(a: CirclePoint, b: CirclePoint) -> Iterator[BisectionRecord]:
    """Infinite record stream for the arc ``ab`` (a != b)."""
    ell = chord_length(a, b)
    m = 0
    while True:
        h = height_for_chord(ell)
        yield BisectionRecord(m, ell, h, math.ldexp(ell, m))
        ell = ell / math.sqrt(2.0 * (1.0 + h))
        m += 1


def length_sequence(a: CirclePoint, b: CirclePoint, m_max: int) -> list[BisectionRecord]:
    """Records for levels 0..m_max of the scheme on the arc ``ab``."""
    if a.y == b.y:
        raise DegenerateArcError("length sequence of a degenerate arc")
    if m_max < 0:
        raise DomainError(f"m_max must be non-negative, got {m_max}")
    if m_max > _MAX_LEVEL:
        raise CapacityError(
            f"level {m_max} would need 2^{m_max} segments, beyond index capacity")
    return list(islice(_ladder(a, b), m_max + 1))


def upper_bound(a: CirclePoint, b: CirclePoint) -> float:
    """Bound l0 / h0^2 dominating every polygonal length of the arc ``ab``."""
    if a.y == b.y:
        raise DegenerateArcError("upper bound of a degenerate arc")
    h = height_at_origin(a, b)
    return chord_length(a, b) / (h * h)


def arc_length(a: CirclePoint, b: CirclePoint, tol: float,
               max_iter: int = DEFAULT_MAX_ITER) -> tuple[Enclosure, ConvergenceReport]:
    """Certified enclosure of the arc length from ``a`` to ``b``.

    Runs the ladder until the bracket [L_m, L_m / h_m] is narrower than
    ``tol``. A degenerate arc (a == b) is legal and yields [0, 0]. Raises
    ``ConvergenceError`` (carrying the last bracket and the report) if the
    level cap is hit first.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    if max_iter < 0:
        raise DomainError(f"max_iter must be non-negative, got {max_iter}")
    if a.y == b.y:
        return (Enclosure(0.0, 0.0),
                ConvergenceReport(a.y, b.y, tol, STOP_TOLERANCE, ()))
    rows = []
    for rec in _ladder(a, b):
        lo = rec.total_length
        hi = lo / rec.height
        rows.append(build_row(rec.m, rec.segment_length, rec.height,
                              rec.total_length, lo, hi))
        if hi - lo <= tol:
            report = ConvergenceReport(a.y, b.y, tol, STOP_TOLERANCE, tuple(rows))
            return Enclosure(lo, hi), report
        if rec.m >= max_iter:
            report = ConvergenceReport(a.y, b.y, tol, STOP_CAP, tuple(rows))
            raise ConvergenceError(
                f"bracket width {hi - lo!r} still above tol {tol!r} at level {rec.m}",
                enclosure=Enclosure(lo, hi), report=report)
    raise AssertionError("unreachable")
