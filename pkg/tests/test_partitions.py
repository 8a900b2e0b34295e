import math

import numpy as np
import pytest

from chordtrig import (
    CapacityError,
    DegenerateArcError,
    DomainError,
    Partition,
    SCHEMES,
    additivity_check,
    arc_length,
    bisection_partition,
    chord_length,
    make_partition,
    ordinate_uniform_partition,
    point_from_ordinate,
    polygonal_length,
    random_partition,
    refine_union,
    refinement_gap_bound,
    scheme_limit,
    upper_bound,
)

from conftest import EPS, random_arc_ordinates
from oracles import naive_polyline_length

TOP = point_from_ordinate(1.0)
Q = point_from_ordinate(0.0)


def _random_partition_of(rng, ya, yb, max_interior=12):
    count = int(rng.integers(0, max_interior))
    interior = sorted({float(v) for v in rng.uniform(yb, ya, count)}, reverse=True)
    ys = [ya, *(v for v in interior if yb < v < ya), yb]
    return Partition.from_points(point_from_ordinate(v) for v in ys)


class TestPartitionType:
    def test_requires_two_points(self):
        with pytest.raises(DomainError):
            Partition.from_points([TOP])

    def test_requires_strict_decrease(self):
        with pytest.raises(DomainError):
            Partition.from_points([Q, TOP])
        with pytest.raises(DomainError):
            Partition.from_points([TOP, TOP])

    def test_norm_is_max_chord(self, rng):
        for ya, yb in random_arc_ordinates(rng, 20, min_sep=1e-3):
            p = _random_partition_of(rng, ya, yb)
            chords = [chord_length(u, v) for u, v in zip(p.points, p.points[1:])]
            assert p.norm == max(chords)
            assert p.norm <= math.sqrt(2.0) * (1.0 + 4 * EPS)


class TestPolygonalLength:
    def test_single_segment(self):
        p = Partition.from_points([TOP, Q])
        assert polygonal_length(p) == chord_length(TOP, Q)

    def test_quarter_with_diagonal(self):
        mid = point_from_ordinate(math.sqrt(2.0) / 2.0)
        p = Partition.from_points([TOP, mid, Q])
        assert polygonal_length(p) == pytest.approx(1.53073373, abs=1e-8)

    def test_against_naive_oracle(self, rng):
        for ya, yb in random_arc_ordinates(rng, 25, min_sep=1e-2):
            p = _random_partition_of(rng, ya, yb)
            ys = [pt.y for pt in p.points]
            assert polygonal_length(p) == pytest.approx(
                naive_polyline_length(ys), abs=1e-7)

    def test_refinement_never_shortens(self, rng):
        for ya, yb in random_arc_ordinates(rng, 40, min_sep=1e-3):
            p = _random_partition_of(rng, ya, yb)
            q = _random_partition_of(rng, ya, yb)
            union = refine_union(p, q)
            assert polygonal_length(union) >= polygonal_length(p) - 8 * EPS

    def test_general_cap_bound(self, rng):
        for ya, yb in random_arc_ordinates(rng, 40, min_sep=1e-3):
            p = _random_partition_of(rng, ya, yb)
            cap = upper_bound(p.points[0], p.points[-1])
            assert polygonal_length(p) <= cap + 8 * EPS


class TestRefineUnion:
    def test_idempotent(self, rng):
        p = _random_partition_of(rng, 0.9, 0.1)
        assert refine_union(p, p).points == p.points

    def test_subset_absorbed(self):
        mid = point_from_ordinate(0.5)
        coarse = Partition.from_points([TOP, Q])
        fine = Partition.from_points([TOP, mid, Q])
        assert refine_union(coarse, fine).points == fine.points
        assert refine_union(fine, coarse).points == fine.points

    def test_level2_with_uniform5(self):
        p = bisection_partition(TOP, Q, 2)
        q = ordinate_uniform_partition(TOP, Q, 5)
        union = refine_union(p, q)
        # the two ordinate sets share only the endpoints, so the union
        # carries all 5 + 6 - 2 = 9 distinct points
        assert len(union.points) == 9
        assert union.norm <= min(p.norm, q.norm) + 1e-13

    def test_norm_never_grows(self, rng):
        for ya, yb in random_arc_ordinates(rng, 30, min_sep=1e-3):
            p = _random_partition_of(rng, ya, yb)
            q = _random_partition_of(rng, ya, yb)
            union = refine_union(p, q)
            assert union.norm <= min(p.norm, q.norm) + 1e-13
            assert set(pt.y for pt in p.points) <= set(pt.y for pt in union.points)

    def test_near_duplicates_collapse(self):
        p = Partition.from_points([TOP, point_from_ordinate(0.5), Q])
        q = Partition.from_points([TOP, point_from_ordinate(0.5 + 5e-15), Q])
        union = refine_union(p, q)
        assert len(union.points) == 3

    def test_endpoint_mismatch_rejected(self):
        p = Partition.from_points([TOP, Q])
        q = Partition.from_points([point_from_ordinate(0.9), Q])
        with pytest.raises(DomainError):
            refine_union(p, q)


class TestRefinementGapBound:
    def test_quarter_single_chord(self):
        p = Partition.from_points([TOP, Q])
        assert refinement_gap_bound(p) == pytest.approx(2.82842712, abs=1e-8)

    def test_example_refinement_within_bound(self):
        coarse = Partition.from_points([TOP, Q])
        fine = bisection_partition(TOP, Q, 1)
        gap = abs(polygonal_length(fine) - polygonal_length(coarse))
        assert gap == pytest.approx(0.11652017, abs=1e-8)
        assert gap <= refinement_gap_bound(coarse)

    def test_bound_vanishes_with_norm(self):
        bounds = [refinement_gap_bound(bisection_partition(TOP, Q, m))
                  for m in range(10)]
        assert all(v < u for u, v in zip(bounds, bounds[1:]))
        assert bounds[-1] < 1e-4

    def test_random_refinements_obey_bound(self, rng):
        for ya, yb in random_arc_ordinates(rng, 50, min_sep=1e-3):
            p = _random_partition_of(rng, ya, yb)
            union = refine_union(p, _random_partition_of(rng, ya, yb))
            gap = abs(polygonal_length(union) - polygonal_length(p))
            assert gap <= refinement_gap_bound(p) + 8 * EPS

    def test_triangle_route_between_partitions(self, rng):
        for ya, yb in random_arc_ordinates(rng, 50, min_sep=1e-3):
            p = _random_partition_of(rng, ya, yb)
            q = _random_partition_of(rng, ya, yb)
            gap = abs(polygonal_length(p) - polygonal_length(q))
            assert gap <= (refinement_gap_bound(p)
                           + refinement_gap_bound(q) + 8 * EPS)


class TestMakePartition:
    def test_bisection_zero(self):
        p = make_partition(TOP, Q, "bisection", 0)
        assert [pt.y for pt in p.points] == [1.0, 0.0]

    def test_ordinate_uniform_two(self):
        p = make_partition(TOP, Q, "ordinate_uniform", 2)
        assert [pt.y for pt in p.points] == [1.0, 0.5, 0.0]
        assert p.points[1].x == pytest.approx(math.sqrt(3.0) / 2.0, abs=4 * EPS)

    def test_random_reproducible(self):
        p = make_partition(TOP, Q, "random", 10, seed=42)
        q = make_partition(TOP, Q, "random", 10, seed=42)
        assert len(p.points) == 11
        ys = [pt.y for pt in p.points]
        assert all(u > v for u, v in zip(ys, ys[1:]))
        assert ys == [pt.y for pt in q.points]
        other = make_partition(TOP, Q, "random", 10, seed=43)
        assert ys != [pt.y for pt in other.points]

    def test_random_requires_seed(self):
        with pytest.raises(DomainError):
            make_partition(TOP, Q, "random", 10)

    def test_unknown_scheme(self):
        with pytest.raises(DomainError):
            make_partition(TOP, Q, "spiral", 4)

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            bisection_partition(TOP, Q, -1)
        with pytest.raises(DomainError):
            ordinate_uniform_partition(TOP, Q, 0)
        with pytest.raises(CapacityError):
            bisection_partition(TOP, Q, 40)
        with pytest.raises(CapacityError):
            ordinate_uniform_partition(TOP, Q, 1 << 21)
        with pytest.raises(DegenerateArcError):
            bisection_partition(Q, Q, 2)

    def test_norms_fall_along_ladder(self):
        for scheme, sizes in (("bisection", [0, 2, 4, 6, 8]),
                              ("ordinate_uniform", [1, 4, 16, 64, 256]),
                              ("random", [1, 4, 16, 64, 256])):
            norms = [make_partition(TOP, Q, scheme, s, seed=5).norm for s in sizes]
            assert all(v < u for u, v in zip(norms, norms[1:]))

    def test_orientation_normalized(self):
        p = make_partition(Q, TOP, "bisection", 1)
        assert p.points[0].y == 1.0 and p.points[-1].y == 0.0


class TestSchemeLimit:
    def test_bisection_matches_arc_length(self):
        limit = scheme_limit(TOP, Q, "bisection", 1e-9)
        enc, _ = arc_length(TOP, Q, 1e-9)
        assert limit == pytest.approx(enc.mid, abs=1e-8)
        assert limit == pytest.approx(1.57079633, abs=1e-7)

    def test_all_schemes_agree_on_interior_arc(self):
        a, b = point_from_ordinate(0.97), point_from_ordinate(0.05)
        values = [scheme_limit(a, b, scheme, 1e-9, seed=11) for scheme in SCHEMES]
        for u in values:
            for v in values:
                assert abs(u - v) <= 1e-7
        enc, _ = arc_length(a, b, 1e-9)
        for v in values:
            assert v == pytest.approx(enc.mid, abs=1e-8)

    def test_quarter_circle_all_schemes_loose_tol(self):
        # the pole endpoint makes the ordinate schemes expensive at tight
        # tolerances (top chord ~ sqrt of the step); 1e-6 keeps this quick
        values = [scheme_limit(TOP, Q, scheme, 1e-6, seed=11) for scheme in SCHEMES]
        for v in values:
            assert v == pytest.approx(math.pi / 2.0, abs=1e-5)

    @pytest.mark.slow
    def test_quarter_circle_ordinate_schemes_tight_tol(self):
        # the full-membership version of the scheme-independence claim at
        # 1e-9; streams grids of ~2e9 segments, takes a few minutes
        reference, _ = arc_length(TOP, Q, 1e-9)
        for scheme in ("ordinate_uniform", "random"):
            v = scheme_limit(TOP, Q, scheme, 1e-9, seed=11)
            assert abs(v - reference.mid) <= 1e-8

    def test_matches_materialized_partition(self):
        # the array ladder and the object builders walk the same grids
        a, b = point_from_ordinate(0.9), point_from_ordinate(0.2)
        for scheme, size in (("ordinate_uniform", 64), ("random", 64)):
            part = make_partition(a, b, scheme, size, seed=3)
            from chordtrig.partitions import _polyline_stats

            ys = np.array([pt.y for pt in part.points])
            value, norm = _polyline_stats(ys)
            assert value == pytest.approx(polygonal_length(part), abs=1e-12)
            assert norm == pytest.approx(part.norm, abs=1e-15)

    def test_validation(self):
        with pytest.raises(DomainError):
            scheme_limit(TOP, Q, "spiral", 1e-9)
        with pytest.raises(DomainError):
            scheme_limit(TOP, Q, "bisection", 0.0)
        with pytest.raises(DomainError):
            scheme_limit(TOP, Q, "random", 1e-9, seed=None)
        with pytest.raises(DegenerateArcError):
            scheme_limit(Q, Q, "bisection", 1e-9)


class TestAdditivity:
    def test_quarter_split_at_diagonal(self):
        mid = point_from_ordinate(math.sqrt(2.0) / 2.0)
        check = additivity_check(TOP, mid, Q, 1e-9)
        assert check.arc_whole == pytest.approx(check.arc_parts, abs=1e-8)
        assert check.arc_whole == pytest.approx(math.pi / 2.0, abs=1e-8)
        assert check.sector_whole == pytest.approx(check.sector_parts, abs=5e-9)

    def test_split_at_six_tenths(self):
        check = additivity_check(TOP, point_from_ordinate(0.6), Q, 1e-9)
        assert check.arc_whole == pytest.approx(check.arc_parts, abs=1e-8)
        assert check.arc_parts == pytest.approx(
            (math.asin(1.0) - math.asin(0.6)) + math.asin(0.6), abs=1e-8)

    def test_endpoint_split_contributes_zero(self):
        check = additivity_check(TOP, TOP, Q, 1e-9)
        assert check.arc_whole == pytest.approx(check.arc_parts, abs=1e-8)

    def test_ordering_enforced(self):
        with pytest.raises(DomainError):
            additivity_check(Q, point_from_ordinate(0.5), TOP, 1e-9)
        with pytest.raises(DomainError):
            additivity_check(TOP, point_from_ordinate(0.5), point_from_ordinate(0.7),
                             1e-9)
