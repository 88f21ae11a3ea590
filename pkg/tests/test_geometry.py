"""Exact geometry kernel: bisectors, dominance regions, diagrams."""

import random

import pytest

from manhattan_voronoi.scalars import Q
from manhattan_voronoi.geometry import (
    BisectorKind,
    Point,
    Rect,
    TiePolicy,
    arms,
    bisector_geometry,
    classify_bisector,
    dominance_region,
    half_cells,
    manhattan_distance,
    octant_index,
    quarter_cells,
    voronoi_diagram,
)


UNIT = Rect(1, 1)


def rnd_scalar(rng, denom=32):
    return Q(rng.randrange(0, denom + 1), denom)


def rnd_point(rng, rect=UNIT, denom=32):
    return Point(rect.width * rnd_scalar(rng, denom), rect.height * rnd_scalar(rng, denom))


class TestClassification:
    def test_vertical_staircase(self):
        kind = classify_bisector(Point(1, 1), Point(5, 3))
        assert kind is BisectorKind.VERTICAL_STAIRCASE

    def test_horizontal_staircase(self):
        kind = classify_bisector(Point(1, 1), Point(3, 5))
        assert kind is BisectorKind.HORIZONTAL_STAIRCASE

    def test_straight_lines(self):
        assert classify_bisector(Point(0, 0), Point(2, 0)) is BisectorKind.STRAIGHT_VERTICAL
        assert classify_bisector(Point(0, 0), Point(0, 2)) is BisectorKind.STRAIGHT_HORIZONTAL

    def test_degenerate(self):
        assert classify_bisector(Point(0, 0), Point(2, 2)) is BisectorKind.DEGENERATE
        assert classify_bisector(Point(0, 0), Point(-2, 2)) is BisectorKind.DEGENERATE

    def test_coincident_points_rejected(self):
        with pytest.raises(ValueError):
            classify_bisector(Point(1, 1), Point(1, 1))

    def test_matches_piecewise_distance_oracle(self):
        # classification must agree with raw coordinate-difference comparison
        rng = random.Random(7)
        for _ in range(2000):
            p, q = rnd_point(rng), rnd_point(rng)
            if p == q:
                continue
            dx, dy = abs(q.x - p.x), abs(q.y - p.y)
            kind = classify_bisector(p, q)
            if dx == dy:
                assert kind is BisectorKind.DEGENERATE
            elif dy == 0:
                assert kind is BisectorKind.STRAIGHT_VERTICAL
            elif dx == 0:
                assert kind is BisectorKind.STRAIGHT_HORIZONTAL
            elif dx > dy:
                assert kind is BisectorKind.VERTICAL_STAIRCASE
            else:
                assert kind is BisectorKind.HORIZONTAL_STAIRCASE


class TestOctants:
    def test_axis_points_belong_to_two_octants(self):
        p = Point(0, 0)
        assert octant_index(p, Point(1, 0)) == [1, 8]
        assert octant_index(p, Point(0, 1)) == [2, 3]

    def test_interior_octant(self):
        assert octant_index(Point(0, 0), Point(2, 1)) == [1]
        assert octant_index(Point(0, 0), Point(1, 2)) == [2]

    def test_diagonal_boundary(self):
        assert octant_index(Point(0, 0), Point(1, 1)) == [1, 2]


class TestBisectorGeometry:
    def test_staircase_in_unit_frame(self):
        # sites (1,1) and (5,3) in a 6x4 box: ray, diagonal, ray
        rect = Rect(6, 4)
        bis = bisector_geometry(Point(1, 1), Point(5, 3), rect)
        assert bis.kind is BisectorKind.VERTICAL_STAIRCASE
        xs = [v[0] for v in bis.polyline]
        assert Q(4) in xs and Q(2) in xs

    def test_degenerate_has_two_neutral_regions(self):
        bis = bisector_geometry(Point(Q(1, 4), Q(1, 4)), Point(Q(3, 4), Q(3, 4)), UNIT)
        assert bis.kind is BisectorKind.DEGENERATE
        assert len(bis.degenerate_regions) == 2
        areas = sorted(r.area() for r in bis.degenerate_regions)
        assert areas == [Q(1, 16), Q(1, 16)]

    def test_award_horizontal_has_no_neutral_regions(self):
        bis = bisector_geometry(
            Point(Q(1, 4), Q(1, 4)), Point(Q(3, 4), Q(3, 4)), UNIT, TiePolicy.AWARD_HORIZONTAL
        )
        assert list(bis.degenerate_regions) == []

    def test_random_pairs_have_two_neutral_regions_when_degenerate(self):
        rng = random.Random(3)
        found = 0
        for _ in range(500):
            p = rnd_point(rng, denom=8)
            t = rnd_scalar(rng, 8)
            q = Point(p.x + t, p.y + t)
            if t == 0 or not UNIT.contains(q):
                continue
            bis = bisector_geometry(p, q, UNIT)
            interior = [r for r in bis.degenerate_regions]
            assert len(interior) == 2
            found += 1
        assert found > 50


class TestDominance:
    def test_half_plane_case(self):
        # spec worked example: straight vertical bisector
        rect = Rect(4, 4)
        reg = dominance_region(Point(1, 2), Point(3, 2), rect)
        assert reg.area() == 8

    def test_staircase_case(self):
        # staircase pieces: 1/2 * 9/16, the diagonal band 1/16, 3/8 * 7/16
        reg = dominance_region(Point(Q(1, 4), Q(1, 2)), Point(Q(3, 4), Q(5, 8)), UNIT)
        assert reg.area() == Q(65, 128)

    def test_degenerate_sides_exclude_neutral(self):
        p, q = Point(Q(1, 4), Q(1, 4)), Point(Q(3, 4), Q(3, 4))
        side_p = dominance_region(p, q, UNIT)
        side_q = dominance_region(q, p, UNIT)
        assert side_p.area() == Q(1, 2) - Q(1, 16)
        assert side_q.area() == Q(1, 2) - Q(1, 16)

    def test_award_horizontal_splits_evenly(self):
        p, q = Point(Q(1, 4), Q(1, 4)), Point(Q(3, 4), Q(3, 4))
        side_p = dominance_region(p, q, UNIT, TiePolicy.AWARD_HORIZONTAL)
        side_q = dominance_region(q, p, UNIT, TiePolicy.AWARD_HORIZONTAL)
        assert side_p.area() + side_q.area() == 1

    def test_manhattan_distance(self):
        assert manhattan_distance(Point(0, 0), Point(Q(1, 2), Q(1, 3))) == Q(5, 6)


class TestDiagram:
    def test_partition_conservation_exact(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randrange(2, 7)
            rect = Rect(Q(rng.randrange(1, 4)), Q(rng.randrange(1, 4)))
            pts = []
            while len(pts) < n:
                p = rnd_point(rng, rect, denom=8)
                if p not in pts:
                    pts.append(p)
            for policy in (TiePolicy.NEUTRAL_ZONE, TiePolicy.AWARD_HORIZONTAL):
                dia = voronoi_diagram(pts, rect, policy)
                total = sum((c.area() for c in dia.cells), Q(0)) + dia.neutral_area()
                assert total == rect.area()

    def test_cells_contain_their_sites(self):
        rng = random.Random(13)
        for _ in range(20):
            pts = []
            while len(pts) < 4:
                p = rnd_point(rng, denom=16)
                if p not in pts:
                    pts.append(p)
            dia = voronoi_diagram(pts, UNIT, TiePolicy.NEUTRAL_ZONE)
            for site, cell in zip(dia.sites, dia.cells):
                assert cell.contains(site)

    def test_duplicate_sites_rejected(self):
        with pytest.raises(ValueError):
            voronoi_diagram([Point(0, 0), Point(0, 0)], UNIT, TiePolicy.NEUTRAL_ZONE)

    def test_site_outside_rect_rejected(self):
        with pytest.raises(ValueError):
            voronoi_diagram([Point(2, 2)], UNIT, TiePolicy.NEUTRAL_ZONE)


class TestCellAnatomy:
    def setup_method(self):
        rect = Rect(3, 1)
        pts = [Point(Q(1, 2), Q(1, 2)), Point(Q(3, 2), Q(1, 2)), Point(Q(5, 2), Q(1, 2))]
        self.rect = rect
        self.dia = voronoi_diagram(pts, rect, TiePolicy.NEUTRAL_ZONE)

    def test_half_cells_of_grid(self):
        p, cell = self.dia.sites[0], self.dia.cells[0]
        halves = half_cells(p, cell)
        assert all(h.area() == Q(1, 2) for h in halves.values())

    def test_quarter_cells_of_grid(self):
        p, cell = self.dia.sites[1], self.dia.cells[1]
        quarters = quarter_cells(p, cell)
        assert [q.area() for q in quarters] == [Q(1, 4)] * 4

    def test_arms_and_boundary_flags(self):
        p, cell = self.dia.sites[0], self.dia.cells[0]
        a = arms(p, cell, self.rect)
        assert (a.left, a.right, a.top, a.bottom) == (Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2))
        assert a.left_boundary and a.top_boundary and a.bottom_boundary
        assert not a.right_boundary

    def test_halves_tile_the_cell(self):
        for p, cell in zip(self.dia.sites, self.dia.cells):
            halves = half_cells(p, cell)
            assert halves["left"].area() + halves["right"].area() == cell.area()
            assert halves["top"].area() + halves["bottom"].area() == cell.area()


class TestStarShape:
    def test_cells_are_star_shaped_on_sampled_rays(self):
        # Observation 1: walking from the site toward any cell point stays inside
        rng = random.Random(23)
        pts = [Point(Q(1, 8), Q(1, 4)), Point(Q(5, 8), Q(3, 4)), Point(Q(7, 8), Q(1, 8))]
        dia = voronoi_diagram(pts, UNIT, TiePolicy.NEUTRAL_ZONE)
        for site, cell in zip(dia.sites, dia.cells):
            for _ in range(40):
                z = rnd_point(rng, denom=16)
                if not cell.contains(z):
                    continue
                for t in (Q(1, 4), Q(1, 2), Q(3, 4)):
                    mid = Point(site.x + t * (z.x - site.x), site.y + t * (z.y - site.y))
                    assert cell.contains(mid)
