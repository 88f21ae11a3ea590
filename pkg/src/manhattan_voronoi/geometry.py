"""Manhattan (L1) bisectors, dominance regions, Voronoi diagrams and cells.

All constructions are exact over the rationals.  The only coordinate
arithmetic a bisector needs is midpoint-taking, so every breakpoint stays
rational.  Degenerate bisectors (equal horizontal and vertical offsets)
carry two 2-D neutral regions; how those are assigned is controlled by a
TiePolicy.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .regions import RegionSet, _point_in_cycle, _signed_area
from .scalars import Q, Scalar, to_scalar


# -- basic types -------------------------------------------------------------


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        object.__setattr__(self, "x", Q(self.x))
        object.__setattr__(self, "y", Q(self.y))

    def as_tuple(self):
        return (self.x, self.y)

    def translated(self, dx, dy) -> "Point":
        return Point(self.x + Q(dx), self.y + Q(dy))


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle with one corner at the origin."""

    width: Scalar
    height: Scalar

    def __post_init__(self):
        object.__setattr__(self, "width", Q(self.width))
        object.__setattr__(self, "height", Q(self.height))
        if self.width <= 0 or self.height <= 0:
            raise ValueError("rectangle dimensions must be positive")

    @property
    def aspect(self) -> Scalar:
        return self.width / self.height

    def area(self) -> Scalar:
        return self.width * self.height

    def contains(self, p: Point) -> bool:
        return 0 <= p.x <= self.width and 0 <= p.y <= self.height

    def on_boundary(self, p: Point) -> bool:
        return self.contains(p) and (
            p.x == 0 or p.x == self.width or p.y == 0 or p.y == self.height
        )

    def as_region_set(self) -> RegionSet:
        return RegionSet.box(0, 0, self.width, self.height)


class Region:
    """Simple polygon (plus optional holes) with edge slopes in {0, inf, +-1}.

    Wraps the slab decomposition used by the boolean kernel and exposes the
    vertex-cycle view.
    """

    def __init__(self, vertices: Sequence = (), holes: Sequence = (), _rset: RegionSet | None = None):
        if _rset is not None:
            self._rset = _rset
        else:
            cycles = []
            if vertices:
                cycles.append([(Q(x), Q(y)) for x, y in vertices])
            for h in holes:
                cycles.append([(Q(x), Q(y)) for x, y in h])
            self._rset = RegionSet.from_cycles(cycles) if cycles else RegionSet.empty()
        self._cycles: Optional[list] = None

    @classmethod
    def from_region_set(cls, rset: RegionSet) -> "Region":
        return cls(_rset=rset)

    @property
    def region_set(self) -> RegionSet:
        return self._rset

    def _ensure_cycles(self):
        if self._cycles is None:
            self._cycles = self._rset.to_cycles()
        return self._cycles

    @property
    def vertices(self) -> list:
        """Vertices of the outer boundary (CCW).  Empty region -> []."""
        outers = [c for c in self._ensure_cycles() if _signed_area(c) > 0]
        if not outers:
            return []
        if len(outers) > 1:
            raise ValueError("region has multiple components; use components()")
        return [Point(x, y) for x, y in outers[0]]

    @property
    def holes(self) -> list:
        return [
            [Point(x, y) for x, y in c]
            for c in self._ensure_cycles()
            if _signed_area(c) < 0
        ]

    @property
    def is_empty(self) -> bool:
        return self._rset.is_empty

    def area(self) -> Scalar:
        return self._rset.area()

    def contains(self, p: Point) -> bool:
        return self._rset.contains(p.x, p.y)

    def bounding_box(self):
        return self._rset.bounding_box()

    def components(self) -> list["Region"]:
        return [Region.from_region_set(c) for c in self._rset.components()]

    def intersect(self, other: "Region") -> "Region":
        return Region.from_region_set(self._rset.intersect(other._rset))

    def union(self, other: "Region") -> "Region":
        return Region.from_region_set(self._rset.union(other._rset))

    def subtract(self, other: "Region") -> "Region":
        return Region.from_region_set(self._rset.subtract(other._rset))

    def __repr__(self):
        return f"Region(area={self.area()}, vertices={self.vertices!r})"


class BisectorKind(enum.Enum):
    VERTICAL_STAIRCASE = "vertical_staircase"
    HORIZONTAL_STAIRCASE = "horizontal_staircase"
    STRAIGHT_VERTICAL = "straight_vertical"
    STRAIGHT_HORIZONTAL = "straight_horizontal"
    DEGENERATE = "degenerate"


class TiePolicy(enum.Enum):
    """How a degenerate bisector's two 2-D regions are assigned.

    NEUTRAL_ZONE excludes them from both sides; AWARD_HORIZONTAL replaces
    the degenerate bisector by its horizontal non-degenerate limit, which
    splits the two regions between the pair without neutral area.
    """

    NEUTRAL_ZONE = "neutral"
    AWARD_HORIZONTAL = "award-horizontal"


@dataclass
class Bisector:
    kind: BisectorKind
    polyline: list  # list of (x, y) vertex chains clipped to the rect
    degenerate_regions: list  # 0 or 2 Regions (possibly empty after clipping)


@dataclass
class ArmInfo:
    """Maximal axis-parallel ray lengths from a site inside its cell."""

    left: Scalar
    right: Scalar
    top: Scalar
    bottom: Scalar
    left_boundary: bool
    right_boundary: bool
    top_boundary: bool
    bottom_boundary: bool

    def lengths(self):
        return {
            "left": self.left,
            "right": self.right,
            "top": self.top,
            "bottom": self.bottom,
        }

    def boundary_flags(self):
        return {
            "left": self.left_boundary,
            "right": self.right_boundary,
            "top": self.top_boundary,
            "bottom": self.bottom_boundary,
        }

    @property
    def is_bridge(self) -> bool:
        return (self.left_boundary and self.right_boundary) or (
            self.top_boundary and self.bottom_boundary
        )


@dataclass
class Diagram:
    rect: Rect
    sites: list  # Points
    cells: list  # Region per site
    neutral_regions: list  # list of Regions (connected components)

    def neutral_area(self) -> Scalar:
        return sum((r.area() for r in self.neutral_regions), Q(0))

    def cell(self, i: int) -> Region:
        return self.cells[i]


# -- elementary operations ----------------------------------------------------


def manhattan_distance(p: Point, q: Point) -> Scalar:
    return abs(p.x - q.x) + abs(p.y - q.y)


def classify_bisector(p: Point, q: Point) -> BisectorKind:
    if p == q:
        raise ValueError("coincident points have no bisector")
    dx = abs(p.x - q.x)
    dy = abs(p.y - q.y)
    if dx == dy:
        return BisectorKind.DEGENERATE
    if dy == 0:
        return BisectorKind.STRAIGHT_VERTICAL
    if dx == 0:
        return BisectorKind.STRAIGHT_HORIZONTAL
    if dx > dy:
        return BisectorKind.VERTICAL_STAIRCASE
    return BisectorKind.HORIZONTAL_STAIRCASE


def octant_index(p: Point, q: Point) -> list[int]:
    """Closed octants of p containing q (1..8, CCW from east)."""
    if p == q:
        raise ValueError("coincident points")
    dx = q.x - p.x
    dy = q.y - p.y
    out = []
    for i, (lo, hi) in enumerate(
        [
            ((1, 0), (1, 1)),
            ((1, 1), (0, 1)),
            ((0, 1), (-1, 1)),
            ((-1, 1), (-1, 0)),
            ((-1, 0), (-1, -1)),
            ((-1, -1), (0, -1)),
            ((0, -1), (1, -1)),
            ((1, -1), (1, 0)),
        ],
        start=1,
    ):
        # q in closed sector between rays lo and hi (each a compass dir)
        def side(d):
            return d[0] * dy - d[1] * dx  # cross(d, (dx,dy))

        if side(lo) >= 0 and side(hi) <= 0:
            out.append(i)
    return out


# -- bisector geometry ---------------------------------------------------------


def _canonical(p: Point, q: Point):
    """Reflections making q lie (weakly) up-right of p; returns undo transform."""
    fx = 1 if q.x >= p.x else -1
    fy = 1 if q.y >= p.y else -1

    def fwd(pt: Point) -> Point:
        return Point(fx * pt.x, fy * pt.y)

    def back(xy):
        return (fx * xy[0], fy * xy[1])

    return fwd(p), fwd(q), back, (fx, fy)


def _infinite_polyline(p: Point, q: Point, policy: TiePolicy):
    """Boundary polyline(s) separating p's side from q's side.

    Returns (first_dir, vertices, last_dir) where dirs are unit compass
    steps describing the unbounded rays at both ends, in canonical
    coordinates already mapped back to the original frame.
    For NEUTRAL_ZONE degenerate pairs the polyline is the boundary of the
    *closure of p's open side* (the two neutral regions fall outside both
    closures).
    """
    cp, cq, back, (fx, fy) = _canonical(p, q)
    dx = cq.x - cp.x
    dy = cq.y - cp.y
    kind = classify_bisector(p, q)

    if dy == 0:  # straight vertical
        mx = (cp.x + cq.x) / 2
        first, verts, last = (0, -1), [(mx, cp.y)], (0, 1)
    elif dx == 0:  # straight horizontal
        my = (cp.y + cq.y) / 2
        first, verts, last = (-1, 0), [(cp.x, my)], (1, 0)
    elif dx > dy:  # vertical staircase
        mx = (cp.x + cq.x) / 2
        b_low = (mx + dy / 2, cp.y)
        b_high = (mx - dy / 2, cq.y)
        first, verts, last = (0, -1), [b_low, b_high], (0, 1)
    elif dy > dx:  # horizontal staircase
        my = (cp.y + cq.y) / 2
        b_left = (cp.x, my + dx / 2)
        b_right = (cq.x, my - dx / 2)
        first, verts, last = (-1, 0), [b_left, b_right], (1, 0)
    else:  # degenerate: dx == dy > 0
        b1 = (cq.x, cp.y)
        b2 = (cp.x, cq.y)
        if policy is TiePolicy.AWARD_HORIZONTAL:
            first, verts, last = (-1, 0), [b2, b1], (1, 0)
        else:
            # closure of p's open side: horizontal ray, diagonal, vertical ray
            first, verts, last = (-1, 0), [b2, b1], (0, -1)

    verts = [back(v) for v in verts]
    first = (fx * first[0], fy * first[1])
    last = (fx * last[0], fy * last[1])
    return kind, first, verts, last


def _ray_exit(start, direction, x0, y0, x1, y1):
    """Where the axis-parallel ray from start leaves the box [x0,x1]x[y0,y1]."""
    sx, sy = start
    dx, dy = direction
    if dx == 1:
        return (x1, sy)
    if dx == -1:
        return (x0, sy)
    if dy == 1:
        return (sx, y1)
    return (sx, y0)


def _close_around_box(chain, x0, y0, x1, y1, ccw: bool):
    """Close an open boundary chain (endpoints on the box) around the box."""
    corners_ccw = [(x1, y0), (x1, y1), (x0, y1), (x0, y0)]

    def param(pt):
        # CCW perimeter parameter in [0, 4), corner-normalized per side
        x, y = pt
        if y == y0 and x < x1:
            return Q(0) + (x - x0) / (x1 - x0)
        if x == x1 and y < y1:
            return Q(1) + (y - y0) / (y1 - y0)
        if y == y1 and x > x0:
            return Q(2) + (x1 - x) / (x1 - x0)
        return Q(3) + (y1 - y) / (y1 - y0)

    end, start = chain[-1], chain[0]
    pe, ps = param(end), param(start)
    dist = (lambda a: (a - pe) % 4) if ccw else (lambda a: (pe - a) % 4)
    dtarget = dist(ps)
    between = [c for c in corners_ccw if 0 < dist(param(c)) < dtarget]
    between.sort(key=lambda c: dist(param(c)))
    return list(chain) + between


def _side_region(polyline_spec, inside_pt: Point, x0, y0, x1, y1) -> RegionSet:
    """Region of the box on inside_pt's side of an infinite monotone polyline."""
    first, verts, last = polyline_spec
    a = _ray_exit(verts[0], first, x0, y0, x1, y1)
    b = _ray_exit(verts[-1], last, x0, y0, x1, y1)
    chain = [a] + [v for v in verts if v != a and v != b] + [b]
    # dedupe consecutive
    chain = [chain[0]] + [v for i, v in enumerate(chain[1:], 1) if v != chain[i - 1]]
    for ccw in (True, False):
        poly = _close_around_box(chain, x0, y0, x1, y1, ccw)
        # drop consecutive duplicates
        poly = [poly[0]] + [v for i, v in enumerate(poly[1:], 1) if v != poly[i - 1]]
        if poly[0] == poly[-1]:
            poly = poly[:-1]
        if _point_in_cycle(inside_pt.as_tuple(), poly):
            return RegionSet.from_cycles([poly])
    raise RuntimeError("could not orient dominance polygon")


def _clip_polyline_to_rect(polyline_spec, rect: Rect):
    """Clip an infinite polyline (ray, chain, ray) to the rect; may be empty."""
    first, verts, last = polyline_spec
    margin = rect.width + rect.height + 1
    x0, y0 = -margin, -margin
    x1, y1 = rect.width + margin, rect.height + margin
    a = _ray_exit(verts[0], first, x0, y0, x1, y1)
    b = _ray_exit(verts[-1], last, x0, y0, x1, y1)
    pts = [a] + list(verts) + [b]
    out = []
    W, H = rect.width, rect.height

    def clip_seg(pa, pb):
        # Liang-Barsky style clipping against [0,W]x[0,H], exact
        ax, ay = pa
        bx, by = pb
        dx, dy = bx - ax, by - ay
        t0, t1 = Q(0), Q(1)
        for pcoef, qcoef in (
            (-dx, ax - 0),
            (dx, W - ax),
            (-dy, ay - 0),
            (dy, H - ay),
        ):
            if pcoef == 0:
                if qcoef < 0:
                    return None
            else:
                t = Q(qcoef) / pcoef
                if pcoef < 0:
                    if t > t1:
                        return None
                    if t > t0:
                        t0 = t
                else:
                    if t < t0:
                        return None
                    if t < t1:
                        t1 = t
        return ((ax + t0 * dx, ay + t0 * dy), (ax + t1 * dx, ay + t1 * dy))

    for pa, pb in zip(pts, pts[1:]):
        seg = clip_seg(pa, pb)
        if seg is None or seg[0] == seg[1]:
            continue
        if out and out[-1] == seg[0]:
            out.append(seg[1])
        else:
            out.extend(seg)
    return out


def bisector_geometry(p: Point, q: Point, rect: Rect, policy: TiePolicy = TiePolicy.NEUTRAL_ZONE) -> Bisector:
    """Exact bisector geometry clipped to the rect.

    For degenerate pairs under NEUTRAL_ZONE the polyline is the diagonal
    segment and the two neutral corner regions are returned as Regions.
    """
    kind = classify_bisector(p, q)
    if kind is BisectorKind.DEGENERATE and policy is TiePolicy.NEUTRAL_ZONE:
        cp, cq, back, _ = _canonical(p, q)
        b1 = back((cq.x, cp.y))
        b2 = back((cp.x, cq.y))
        diag = _clip_polyline_to_rect(((0, 0), [b1, b2], (0, 0)), rect)
        # neutral corners, in canonical frame: {x>=qx, y<=py} and {x<=px, y>=qy}
        margin = rect.width + rect.height + 1
        c1 = RegionSet.from_cycles(
            [
                [
                    back(v)
                    for v in [
                        (cq.x, cp.y),
                        (cq.x + margin, cp.y),
                        (cq.x + margin, cp.y - margin),
                        (cq.x, cp.y - margin),
                    ]
                ]
            ]
        )
        c2 = RegionSet.from_cycles(
            [
                [
                    back(v)
                    for v in [
                        (cp.x, cq.y),
                        (cp.x, cq.y + margin),
                        (cp.x - margin, cq.y + margin),
                        (cp.x - margin, cq.y),
                    ]
                ]
            ]
        )
        rect_rs = rect.as_region_set()
        regions = [Region.from_region_set(rect_rs.intersect(c)) for c in (c1, c2)]
        return Bisector(kind, diag, regions)
    _, first, verts, last = _infinite_polyline(p, q, policy)
    # degenerate diagonal-only clip for the polyline display
    poly = _clip_polyline_to_rect((first, verts, last), rect)
    return Bisector(kind, poly, [])


def dominance_region(
    p: Point,
    q: Point,
    rect: Rect,
    policy: TiePolicy = TiePolicy.NEUTRAL_ZONE,
) -> Region:
    """Closure of {z in rect : d(z,p) < d(z,q)} under the given tie policy."""
    return Region.from_region_set(_dominance_rset(p, q, rect, policy))


def _dominance_rset(p: Point, q: Point, rect: Rect, policy: TiePolicy) -> RegionSet:
    if p == q:
        raise ValueError("coincident points")
    _, first, verts, last = _infinite_polyline(p, q, policy)
    margin = rect.width + rect.height + 1
    x0, y0 = Q(0) - margin, Q(0) - margin
    x1, y1 = rect.width + margin, rect.height + margin
    side = _side_region((first, verts, last), p, x0, y0, x1, y1)
    return side.intersect(rect.as_region_set())


# -- diagrams ------------------------------------------------------------------

PolicyFn = Callable[[int, int], TiePolicy]


def voronoi_diagram(
    sites: Sequence[Point],
    rect: Rect,
    policy: TiePolicy | PolicyFn = TiePolicy.NEUTRAL_ZONE,
) -> Diagram:
    """Cells as intersections of pairwise dominance regions; exact areas.

    `policy` may be a single TiePolicy or a callable (i, j) -> TiePolicy
    giving the tie rule per site-index pair.
    """
    sites = list(sites)
    for i, s in enumerate(sites):
        if not rect.contains(s):
            raise ValueError(f"site {i} outside rectangle: {s}")
        for j in range(i):
            if sites[j] == s:
                raise ValueError(f"duplicate site at {s}")
    if callable(policy):
        pol = policy
    else:
        pol = lambda i, j: policy
    rect_rs = rect.as_region_set()
    cells = []
    for i, s in enumerate(sites):
        cell = rect_rs
        for j, t in enumerate(sites):
            if i == j:
                continue
            cell = cell.intersect(_dominance_rset(s, t, rect, pol(i, j)))
        cells.append(cell)
    union = RegionSet.empty()
    for c in cells:
        union = union.union(c)
    neutral = rect_rs.subtract(union)
    neutral_regions = [Region.from_region_set(c) for c in neutral.components()]
    return Diagram(
        rect=rect,
        sites=sites,
        cells=[Region.from_region_set(c) for c in cells],
        neutral_regions=neutral_regions,
    )


def region_area(r: Region) -> Scalar:
    """Exact area; holes subtracted."""
    return r.area()


# -- cell anatomy --------------------------------------------------------------


def half_cells(p: Point, cell: Region) -> dict[str, Region]:
    """Left/right/top/bottom halves of the cell cut at the site's lines."""
    if not cell.contains(p):
        raise ValueError("site not inside its cell")
    bb = cell.bounding_box()
    x0, y0, x1, y1 = bb
    pad = Q(1)
    left = cell.region_set.intersect(RegionSet.box(x0 - pad, y0 - pad, p.x, y1 + pad))
    right = cell.region_set.intersect(RegionSet.box(p.x, y0 - pad, x1 + pad, y1 + pad))
    bottom = cell.region_set.intersect(RegionSet.box(x0 - pad, y0 - pad, x1 + pad, p.y))
    top = cell.region_set.intersect(RegionSet.box(x0 - pad, p.y, x1 + pad, y1 + pad))
    return {
        "left": Region.from_region_set(left),
        "right": Region.from_region_set(right),
        "top": Region.from_region_set(top),
        "bottom": Region.from_region_set(bottom),
    }


def quarter_cells(p: Point, cell: Region) -> list[Region]:
    """Quarter cells C1..C4 (quadrant order: NE, NW, SW, SE)."""
    if not cell.contains(p):
        raise ValueError("site not inside its cell")
    x0, y0, x1, y1 = cell.bounding_box()
    pad = Q(1)
    boxes = [
        RegionSet.box(p.x, p.y, x1 + pad, y1 + pad),  # Q1: NE
        RegionSet.box(x0 - pad, p.y, p.x, y1 + pad),  # Q2: NW
        RegionSet.box(x0 - pad, y0 - pad, p.x, p.y),  # Q3: SW
        RegionSet.box(p.x, y0 - pad, x1 + pad, p.y),  # Q4: SE
    ]
    return [Region.from_region_set(cell.region_set.intersect(b)) for b in boxes]


def arms(p: Point, cell: Region, rect: Rect) -> ArmInfo:
    """Maximal axis-parallel rays from the site inside the (closed) cell."""
    if not cell.contains(p):
        raise ValueError("site not inside its cell")
    rs = cell.region_set
    # horizontal arms: intervals of the cell on the line y = p.y
    def maximal(ivs, coord):
        for a, b in ivs:
            if a <= coord <= b:
                return a, b
        raise RuntimeError("site not on its own cross-section")

    hx0, hx1 = maximal(rs.row_sections(p.y), p.x)
    vy0, vy1 = maximal(rs.sections_at(p.x), p.y)
    return ArmInfo(
        left=p.x - hx0,
        right=hx1 - p.x,
        top=vy1 - p.y,
        bottom=p.y - vy0,
        left_boundary=(hx0 == 0),
        right_boundary=(hx1 == rect.width),
        top_boundary=(vy1 == rect.height),
        bottom_boundary=(vy0 == 0),
    )
