"""Tests for polygons, the perimeter-preserving improver and isoperimetry."""

import math

import numpy as np
import pytest

from hyplobe import (
    DiskPoint,
    DomainError,
    HyperbolicPolygon,
    NonConvexError,
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
    solve_sas,
    steiner_move,
    steiner_optimize,
)
from hyplobe.disk import DiskIsometry
from hyplobe.polygon import circle_radius_for_circumference


class TestPolygonConstruction:
    def test_too_few_vertices(self):
        with pytest.raises(DomainError):
            HyperbolicPolygon.from_vertices([DiskPoint(0.1, 0.0), DiskPoint(0.0, 0.1)])

    def test_clockwise_rejected(self):
        pts = [DiskPoint(0.3, 0.0), DiskPoint(0.0, 0.3), DiskPoint(-0.3, 0.0)]
        with pytest.raises(NonConvexError):
            HyperbolicPolygon.from_vertices(list(reversed(pts)))

    def test_nonconvex_rejected(self):
        pts = [
            DiskPoint(0.4, 0.0),
            DiskPoint(0.0, 0.4),
            DiskPoint(-0.4, 0.0),
            DiskPoint(0.0, 0.02),  # dents the quadrilateral
        ]
        with pytest.raises(NonConvexError):
            HyperbolicPolygon.from_vertices(pts)

    def test_sides_and_angles_measured(self):
        poly = regular_polygon_vertices(RegularPolygonSpec(5, 1.0))
        stats = regular_polygon(RegularPolygonSpec(5, 1.0))
        for s in poly.side_lengths:
            assert s == pytest.approx(stats.side, abs=1e-12)
        for a in poly.interior_angles:
            assert a == pytest.approx(stats.interior_angle, abs=1e-12)


class TestAreaAndPerimeter:
    def test_triangle_reduces_to_defect(self):
        sol = solve_sas(1.0, 1.2, 0.9)
        from hyplobe.triangle import embed_triangle

        poly = HyperbolicPolygon.from_vertices(embed_triangle(1.0, 1.2, 0.9))
        assert polygon_area(poly) == pytest.approx(sol.area, abs=1e-12)
        assert polygon_perimeter(poly) == pytest.approx(
            sol.a + sol.b + sol.c, abs=1e-12
        )

    def test_isometry_invariance(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            poly = random_convex_polygon(6, int(rng.integers(0, 2**32)))
            r = 0.5 * math.sqrt(rng.uniform())
            t = rng.uniform(0.0, 2 * math.pi)
            m = DiskIsometry(
                DiskPoint(r * math.cos(t), r * math.sin(t)),
                rng.uniform(0.0, 2 * math.pi),
            )
            moved = HyperbolicPolygon.from_vertices([m(v) for v in poly.vertices])
            assert polygon_area(moved) == pytest.approx(polygon_area(poly), abs=1e-10)
            assert polygon_perimeter(moved) == pytest.approx(
                polygon_perimeter(poly), abs=1e-10
            )

    def test_euclidean_limit_area(self):
        # circumradius 1e-3: area -> (n/2) R^2 sin(2 pi / n)
        n, R = 7, 1e-3
        poly = regular_polygon_vertices(RegularPolygonSpec(n, R))
        flat = 0.5 * n * R * R * math.sin(2.0 * math.pi / n)
        assert polygon_area(poly) == pytest.approx(flat, rel=1e-5)


class TestLocalTriangle:
    def test_consistent_with_sas(self):
        poly = random_convex_polygon(6, 99)
        for i in range(poly.n):
            t = local_triangle(poly, i)
            sol = solve_sas(t.b, t.c, t.alpha)
            assert t.a == pytest.approx(sol.a, abs=1e-12)
            assert t.beta == pytest.approx(sol.beta, abs=1e-9)
            assert t.gamma == pytest.approx(sol.gamma, abs=1e-9)
            assert 0.0 < t.area < polygon_area(poly)

    def test_regular_polygon_is_symmetric(self):
        poly = regular_polygon_vertices(RegularPolygonSpec(8, 1.0))
        ts = [local_triangle(poly, i) for i in range(8)]
        for t in ts:
            assert t.a == pytest.approx(ts[0].a, abs=1e-12)
            assert t.beta == pytest.approx(t.gamma, abs=1e-10)


class TestSteinerMove:
    def test_preserves_perimeter_and_gains_area(self):
        rng = np.random.default_rng(41)
        for _ in range(20):
            poly = random_convex_polygon(6, int(rng.integers(0, 2**32)))
            perim = polygon_perimeter(poly)
            area = polygon_area(poly)
            for i in range(poly.n):
                mv = steiner_move(poly, i)
                if mv.accepted:
                    assert polygon_perimeter(mv.polygon) == pytest.approx(
                        perim, abs=1e-10
                    )
                    gained = polygon_area(mv.polygon) - area
                    assert gained > 0.0
                    assert gained == pytest.approx(mv.delta_area, abs=1e-10)

    def test_regular_polygon_is_fixed_point(self):
        poly = regular_polygon_vertices(RegularPolygonSpec(8, 0.9))
        for i in range(poly.n):
            mv = steiner_move(poly, i)
            assert not mv.accepted
            assert mv.polygon is poly


class TestSteinerOptimize:
    def test_octagon_run(self):
        poly = random_convex_polygon(8, 42)
        perim0 = polygon_perimeter(poly)
        d0 = isoperimetric_deficit(perim0, polygon_area(poly))
        result = steiner_optimize(poly, tol=1e-8)
        assert result.converged
        # trace invariants: conserved perimeter, monotone area
        for step in result.trace:
            assert abs(step.perimeter - perim0) < 1e-9
            assert step.area_after >= step.area_before - 1e-12
        areas = [s.area_after for s in result.trace]
        assert all(a2 >= a1 - 1e-12 for a1, a2 in zip(areas, areas[1:]))
        assert result.spread < 1e-6
        perim1 = polygon_perimeter(result.polygon)
        d1 = isoperimetric_deficit(perim1, polygon_area(result.polygon))
        assert -1e-9 <= d1 < d0

    def test_limit_is_regular_polygon(self):
        poly = random_convex_polygon(8, 42)
        perim = polygon_perimeter(poly)
        result = steiner_optimize(poly, tol=1e-8)
        ref = regular_polygon(regular_polygon_for_perimeter(8, perim))
        assert polygon_area(result.polygon) == pytest.approx(ref.area, abs=1e-9)
        for s in result.polygon.side_lengths:
            assert s == pytest.approx(ref.side, abs=1e-6)

    def test_regular_input_stops_immediately(self):
        poly = regular_polygon_vertices(RegularPolygonSpec(6, 0.8))
        result = steiner_optimize(poly, tol=1e-8)
        assert result.converged
        assert result.sweeps == 1
        assert len(result.trace) == 0

    def test_rejects_bad_tol(self):
        poly = random_convex_polygon(5, 1)
        with pytest.raises(DomainError):
            steiner_optimize(poly, tol=0.0)

    def test_deterministic(self):
        r1 = steiner_optimize(random_convex_polygon(6, 7), tol=1e-8)
        r2 = steiner_optimize(random_convex_polygon(6, 7), tol=1e-8)
        assert r1.trace == r2.trace
        assert r1.polygon.vertices == r2.polygon.vertices


class TestCircumcircleFit:
    def test_exact_on_regular_polygon(self):
        poly = regular_polygon_vertices(RegularPolygonSpec(7, 1.1))
        fit = circumcircle_fit(poly)
        assert fit.spread < 1e-8
        assert fit.radius == pytest.approx(1.1, abs=1e-8)
        assert fit.center.norm() < 1e-7

    def test_positive_spread_off_circle(self):
        poly = random_convex_polygon(6, 5)
        assert circumcircle_fit(poly).spread > 1e-4


class TestRegularPolygons:
    def test_embedding_matches_formulas(self):
        spec = RegularPolygonSpec(5, 1.0)
        stats = regular_polygon(spec)
        poly = regular_polygon_vertices(spec)
        assert polygon_perimeter(poly) == pytest.approx(stats.perimeter, abs=1e-11)
        assert polygon_area(poly) == pytest.approx(stats.area, abs=1e-10)

    def test_euclidean_angle_limit(self):
        # small polygons look flat: interior angle -> (n - 2) pi / n
        stats = regular_polygon(RegularPolygonSpec(6, 1e-3))
        assert stats.interior_angle == pytest.approx(4.0 * math.pi / 6.0, abs=1e-6)

    def test_perimeter_root_find(self):
        for n in (3, 8, 96):
            spec = regular_polygon_for_perimeter(n, 5.0)
            assert regular_polygon(spec).perimeter == pytest.approx(5.0, abs=1e-12)

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            RegularPolygonSpec(2, 1.0)
        with pytest.raises(DomainError):
            RegularPolygonSpec(5, 11.0)
        with pytest.raises(DomainError):
            regular_polygon_for_perimeter(4, -1.0)


class TestIsoperimetry:
    def test_circle_has_zero_deficit(self):
        for r in (0.1, 1.0, 5.0):
            L, A = circle_geometry(r)
            assert abs(isoperimetric_deficit(L, A)) < 1e-9 * max(1.0, L * L)

    def test_circle_radius_round_trip(self):
        L, _ = circle_geometry(1.3)
        assert circle_radius_for_circumference(L) == pytest.approx(1.3, abs=1e-14)

    def test_small_circle_matches_flat_values(self):
        L, A = circle_geometry(1e-4)
        assert L == pytest.approx(2.0 * math.pi * 1e-4, rel=1e-8)
        assert A == pytest.approx(math.pi * 1e-8, rel=1e-8)

    def test_polygon_deficits_positive_and_decreasing(self):
        perimeter = 7.0
        deficits = []
        for n in range(3, 20):
            stats = regular_polygon(regular_polygon_for_perimeter(n, perimeter))
            deficits.append(isoperimetric_deficit(stats.perimeter, stats.area))
        assert all(d > 0.0 for d in deficits)
        assert all(d2 < d1 for d1, d2 in zip(deficits, deficits[1:]))

    def test_random_polygon_deficit_positive(self):
        for seed in range(10):
            poly = random_convex_polygon(5, seed)
            d = isoperimetric_deficit(polygon_perimeter(poly), polygon_area(poly))
            assert d > 0.0

    def test_deficit_validation(self):
        with pytest.raises(DomainError):
            isoperimetric_deficit(-1.0, 1.0)


class TestRandomPolygon:
    def test_deterministic_per_seed(self):
        p1 = random_convex_polygon(7, 123)
        p2 = random_convex_polygon(7, 123)
        assert p1.vertices == p2.vertices

    def test_different_seeds_differ(self):
        assert random_convex_polygon(7, 1).vertices != random_convex_polygon(7, 2).vertices

    def test_validation(self):
        with pytest.raises(DomainError):
            random_convex_polygon(2, 0)
