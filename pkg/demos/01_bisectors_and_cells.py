"""A walking tour of L1 bisectors and exact Voronoi cells.

Under the Manhattan metric the bisector of two points is not a line: it
is a staircase (two axis-parallel rays joined by a diagonal), a straight
line when the points share a coordinate, or — when the coordinate
differences match exactly — a degenerate shape containing two full 2-D
regions of tied points.  This script classifies a few pairs, builds an
exact diagram, and writes it to an SVG next to this file.
"""

import pathlib

from manhattan_voronoi.scalars import Q
from manhattan_voronoi.geometry import (
    Point,
    Rect,
    TiePolicy,
    bisector_geometry,
    classify_bisector,
    voronoi_diagram,
)
from manhattan_voronoi.svg import diagram_svg

HERE = pathlib.Path(__file__).parent

pairs = [
    (Point(1, 1), Point(5, 3)),   # |dx| > |dy|: vertical staircase
    (Point(1, 1), Point(3, 5)),   # |dx| < |dy|: horizontal staircase
    (Point(0, 0), Point(2, 0)),   # shared y: straight vertical line
    (Point(0, 0), Point(0, 2)),   # shared x: straight horizontal line
    (Point(0, 0), Point(2, 2)),   # |dx| == |dy|: degenerate
]

print("bisector taxonomy")
for p, q in pairs:
    print(f"  {(str(p.x), str(p.y))} vs {(str(q.x), str(q.y))}: "
          f"{classify_bisector(p, q).value}")

# the degenerate case carries two 2-D neutral regions
rect = Rect(1, 1)
bis = bisector_geometry(Point(Q(1, 4), Q(1, 4)), Point(Q(3, 4), Q(3, 4)), rect)
areas = [str(r.area()) for r in bis.degenerate_regions]
print(f"\ndegenerate pair in the unit square: neutral corner areas {areas}")

# a five-site diagram, exact areas, exported as SVG
sites = [
    Point(Q(1, 4), Q(1, 4)),
    Point(Q(3, 4), Q(1, 4)),
    Point(Q(1, 2), Q(5, 8)),
    Point(Q(1, 8), Q(7, 8)),
    Point(Q(7, 8), Q(7, 8)),
]
dia = voronoi_diagram(sites, rect, TiePolicy.NEUTRAL_ZONE)
print("\nfive-site diagram (exact rational areas)")
for site, cell in zip(dia.sites, dia.cells):
    print(f"  site ({site.x}, {site.y}): area {cell.area()}")
print(f"  neutral: {dia.neutral_area()}")
total = sum((c.area() for c in dia.cells), dia.neutral_area())
assert total == rect.area()
print(f"  conservation check: {total} == {rect.area()}")

out = HERE / "five_sites.svg"
out.write_text(diagram_svg(dia))
print(f"\nwrote {out}")
