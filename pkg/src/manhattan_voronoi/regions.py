"""Exact boolean geometry for polygons whose edges have slope 0, inf, +1 or -1.

Everything the Manhattan Voronoi construction produces lives in this edge
class, which lets us avoid a general-purpose clipper.  A RegionSet stores a
vertical slab decomposition: sorted x-breakpoints and, per slab, a list of
disjoint trapezoids bounded below/above by lines y = m*x + c with
m in {-1, 0, 1}.  Vertical edges only occur on slab boundaries.  Boolean
operations reduce to merging two sorted edge lists per slab, and areas are
sums of exact trapezoid integrals.

Polygon (cycle) extraction stitches trapezoid boundary fragments back into
simple cycles; pinch vertices are resolved by the usual clockwise-rotation
rule so every emitted cycle is simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .scalars import Q, Scalar

XY = tuple  # (x, y) pairs of Scalars


@dataclass(frozen=True)
class Line:
    """Non-vertical line y = m*x + c with m in {-1, 0, 1}."""

    m: int
    c: Scalar

    def at(self, x: Scalar) -> Scalar:
        return self.m * x + self.c if self.m else self.c

    def key(self):
        return (self.m, self.c)


def _pair_key(ln: Line, xm: Scalar):
    return (ln.at(xm), ln.m, ln.c)


def _merge_traps(traps: list[tuple[Line, Line]]) -> list[tuple[Line, Line]]:
    """Drop zero-height trapezoids and merge ones sharing a boundary line."""
    out: list[tuple[Line, Line]] = []
    for lo, hi in traps:
        if lo.key() == hi.key():
            continue
        if out and out[-1][1].key() == lo.key():
            out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _union_intervals(ivs: list[tuple[Scalar, Scalar]]) -> list[tuple[Scalar, Scalar]]:
    """Union of closed intervals, merging ones that overlap or touch."""
    ivs = sorted((iv for iv in ivs if iv[0] <= iv[1]), key=lambda iv: (iv[0], iv[1]))
    out: list[tuple[Scalar, Scalar]] = []
    for a, b in ivs:
        if out and a <= out[-1][1]:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return out


def _symdiff_intervals(left, right):
    """Symmetric difference of two closed-interval unions.

    Returns (only_left, only_right) as lists of positive-length intervals.
    """
    events = sorted({e for iv in left for e in iv} | {e for iv in right for e in iv})
    only_left, only_right = [], []

    def covered(ivs, a, b):
        return any(lo <= a and b <= hi for lo, hi in ivs)

    for a, b in zip(events, events[1:]):
        inl = covered(left, a, b)
        inr = covered(right, a, b)
        if inl and not inr:
            only_left.append((a, b))
        elif inr and not inl:
            only_right.append((a, b))
    return _union_intervals(only_left), _union_intervals(only_right)


class RegionSet:
    """A finite union of polygons in the slope-{0,inf,+-1} edge class."""

    __slots__ = ("xs", "slabs")

    def __init__(self, xs: list[Scalar], slabs: list[list[tuple[Line, Line]]]):
        self.xs = xs
        self.slabs = slabs

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls) -> "RegionSet":
        return cls([], [])

    @classmethod
    def box(cls, x0, y0, x1, y1) -> "RegionSet":
        x0, y0, x1, y1 = Q(x0), Q(y0), Q(x1), Q(y1)
        if x0 >= x1 or y0 >= y1:
            return cls.empty()
        return cls([x0, x1], [[(Line(0, y0), Line(0, y1))]])

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[XY]]) -> "RegionSet":
        """Even-odd fill of one or more non-crossing vertex cycles."""
        edges = []  # (xa, xb, Line)
        xs_set = set()
        for cyc in cycles:
            n = len(cyc)
            for i in range(n):
                ax, ay = cyc[i]
                bx, by = cyc[(i + 1) % n]
                ax, ay, bx, by = Q(ax), Q(ay), Q(bx), Q(by)
                xs_set.add(ax)
                if ax == bx:
                    continue
                m_q = (by - ay) / (bx - ax)
                m = int(m_q)
                if m != m_q or m not in (-1, 0, 1):
                    raise ValueError(f"edge slope {m_q} not in {{0, +1, -1}}")
                c = ay - m * ax
                edges.append((min(ax, bx), max(ax, bx), Line(m, c)))
        xs = sorted(xs_set)
        if len(xs) < 2:
            return cls.empty()
        slabs = []
        for x0, x1 in zip(xs, xs[1:]):
            xm = (x0 + x1) / 2
            active = [ln for xa, xb, ln in edges if xa <= x0 and xb >= x1]
            active.sort(key=lambda ln: _pair_key(ln, xm))
            if len(active) % 2:
                raise ValueError("open or self-crossing cycle input")
            traps = [(active[i], active[i + 1]) for i in range(0, len(active), 2)]
            slabs.append(_merge_traps(traps))
        return cls(xs, slabs)._normalized()

    # -- canonical form ----------------------------------------------------

    def _normalized(self) -> "RegionSet":
        xs, slabs = self.xs, self.slabs
        # trim empty outer slabs
        lo, hi = 0, len(slabs)
        while lo < hi and not slabs[lo]:
            lo += 1
        while hi > lo and not slabs[hi - 1]:
            hi -= 1
        xs, slabs = xs[lo : hi + 1], slabs[lo:hi]
        if not slabs:
            return RegionSet.empty()
        # merge adjacent slabs with identical trapezoid lists
        out_xs = [xs[0]]
        out_slabs = []
        prev_key = None
        for i, traps in enumerate(slabs):
            keyed = tuple((a.key(), b.key()) for a, b in traps)
            if out_slabs and prev_key == keyed:
                out_xs[-1] = xs[i + 1]
            else:
                out_slabs.append(traps)
                out_xs.append(xs[i + 1])
            prev_key = keyed
        return RegionSet(out_xs, out_slabs)

    # -- queries -----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.slabs

    def area(self) -> Scalar:
        total = Q(0)
        for i, traps in enumerate(self.slabs):
            x0, x1 = self.xs[i], self.xs[i + 1]
            w = x1 - x0
            for lo, hi in traps:
                total += w * ((hi.at(x0) - lo.at(x0)) + (hi.at(x1) - lo.at(x1))) / 2
        return total

    def bounding_box(self):
        """(xmin, ymin, xmax, ymax) of the closed set; None when empty."""
        if self.is_empty:
            return None
        ymin = ymax = None
        for i, traps in enumerate(self.slabs):
            x0, x1 = self.xs[i], self.xs[i + 1]
            for lo, hi in traps:
                for x in (x0, x1):
                    a, b = lo.at(x), hi.at(x)
                    ymin = a if ymin is None or a < ymin else ymin
                    ymax = b if ymax is None or b > ymax else ymax
        return (self.xs[0], ymin, self.xs[-1], ymax)

    def sections_at(self, x: Scalar) -> list[tuple[Scalar, Scalar]]:
        """Closed y-intervals of the set on the vertical line at x."""
        x = Q(x)
        ivs = []
        for i, traps in enumerate(self.slabs):
            if self.xs[i] <= x <= self.xs[i + 1]:
                ivs.extend((lo.at(x), hi.at(x)) for lo, hi in traps)
        return _union_intervals(ivs)

    def row_sections(self, y: Scalar) -> list[tuple[Scalar, Scalar]]:
        """Closed x-intervals of the set on the horizontal line at y."""
        y = Q(y)
        ivs = []
        for i, traps in enumerate(self.slabs):
            x0, x1 = self.xs[i], self.xs[i + 1]
            for lo, hi in traps:
                # lo(x) <= y and y <= hi(x), each linear in x over [x0, x1]
                a, b = x0, x1
                for ln, sense in ((lo, -1), (hi, 1)):
                    # sense=+1 wants y <= ln(x); sense=-1 wants ln(x) <= y
                    v0 = sense * (ln.at(x0) - y)
                    v1 = sense * (ln.at(x1) - y)
                    if v0 >= 0 and v1 >= 0:
                        continue
                    if v0 < 0 and v1 < 0:
                        a = b = None
                        break
                    t = (x1 - x0) * v0 / (v0 - v1)  # zero crossing offset
                    xc = x0 + t
                    if v0 < 0:
                        a = max(a, xc)
                    else:
                        b = min(b, xc)
                if a is not None and a <= b:
                    ivs.append((a, b))
        return _union_intervals(ivs)

    def contains(self, x: Scalar, y: Scalar) -> bool:
        """Closed-set membership."""
        x, y = Q(x), Q(y)
        return any(a <= y <= b for a, b in self.sections_at(x))

    # -- booleans ----------------------------------------------------------

    def _slab_for(self, x0: Scalar) -> list[tuple[Line, Line]]:
        """Trapezoids of the slab whose interval contains [x0, x0+eps)."""
        import bisect

        i = bisect.bisect_right(self.xs, x0) - 1
        if 0 <= i < len(self.slabs):
            return self.slabs[i]
        return []

    def _combine(self, other: "RegionSet", op: Callable[[bool, bool], bool]) -> "RegionSet":
        if self.is_empty and other.is_empty:
            return RegionSet.empty()
        events = set(self.xs) | set(other.xs)
        # x of crossings between boundary lines of the two sets
        for ai in range(len(self.slabs)):
            ax0, ax1 = self.xs[ai], self.xs[ai + 1]
            alines = {ln for t in self.slabs[ai] for ln in t}
            for bi in range(len(other.slabs)):
                bx0, bx1 = other.xs[bi], other.xs[bi + 1]
                lo, hi = max(ax0, bx0), min(ax1, bx1)
                if lo >= hi:
                    continue
                blines = {ln for t in other.slabs[bi] for ln in t}
                for la in alines:
                    for lb in blines:
                        if la.m != lb.m:
                            x = Q(lb.c - la.c) / (la.m - lb.m)
                            if lo < x < hi:
                                events.add(x)
        xs = sorted(events)
        out_slabs = []
        for x0, x1 in zip(xs, xs[1:]):
            xm = (x0 + x1) / 2
            entries = []  # (sort key, which, line)
            for t in self._slab_for(x0) if self._covers_interval(x0, x1) else []:
                for ln in t:
                    entries.append((_pair_key(ln, xm), 0, ln))
            for t in other._slab_for(x0) if other._covers_interval(x0, x1) else []:
                for ln in t:
                    entries.append((_pair_key(ln, xm), 1, ln))
            entries.sort(key=lambda e: e[0])
            inside = [False, False]
            res = op(False, False)
            if res:
                raise ValueError("boolean op must map (False, False) -> False")
            traps = []
            lo_line = None
            i = 0
            while i < len(entries):
                j = i
                key = entries[i][0]
                while j < len(entries) and entries[j][0] == key:
                    inside[entries[j][1]] = not inside[entries[j][1]]
                    j += 1
                new = op(inside[0], inside[1])
                if new != res:
                    if new:
                        lo_line = entries[i][2]
                    else:
                        traps.append((lo_line, entries[i][2]))
                    res = new
                i = j
            out_slabs.append(_merge_traps(traps))
        return RegionSet(xs, out_slabs)._normalized()

    def _covers_interval(self, x0, x1) -> bool:
        return bool(self.xs) and self.xs[0] <= x0 and x1 <= self.xs[-1]

    def intersect(self, other: "RegionSet") -> "RegionSet":
        return self._combine(other, lambda a, b: a and b)

    def union(self, other: "RegionSet") -> "RegionSet":
        return self._combine(other, lambda a, b: a or b)

    def subtract(self, other: "RegionSet") -> "RegionSet":
        return self._combine(other, lambda a, b: a and not b)

    # -- polygon extraction --------------------------------------------------

    def to_cycles(self) -> list[list[XY]]:
        """Boundary as simple cycles: outer cycles CCW, holes CW."""
        if self.is_empty:
            return []
        segs: list[tuple[XY, XY]] = []  # directed, interior on the left
        # non-vertical edges from trapezoid tops/bottoms
        for i, traps in enumerate(self.slabs):
            x0, x1 = self.xs[i], self.xs[i + 1]
            for lo, hi in traps:
                segs.append(((x0, lo.at(x0)), (x1, lo.at(x1))))  # bottom: +x
                segs.append(((x1, hi.at(x1)), (x0, hi.at(x0))))  # top: -x
        # vertical edges from slab-boundary cross-section differences
        for k in range(len(self.xs)):
            x = self.xs[k]
            left = (
                [
                    (lo.at(x), hi.at(x))
                    for lo, hi in self.slabs[k - 1]
                ]
                if k > 0
                else []
            )
            right = (
                [(lo.at(x), hi.at(x)) for lo, hi in self.slabs[k]]
                if k < len(self.slabs)
                else []
            )
            only_left, only_right = _symdiff_intervals(
                _union_intervals(left), _union_intervals(right)
            )
            for a, b in only_left:  # interior is west: travel upward
                segs.append(((x, a), (x, b)))
            for a, b in only_right:  # interior is east: travel downward
                segs.append(((x, b), (x, a)))
        return _stitch(segs)

    def components(self) -> list["RegionSet"]:
        """Split into connected components (sharing a point does not connect)."""
        cycles = self.to_cycles()
        outers = []
        holes = []
        for cyc in cycles:
            (outers if _signed_area(cyc) > 0 else holes).append(cyc)
        comps = []
        for outer in outers:
            mine = [outer]
            for h in holes:
                if _point_in_cycle(h[0], outer):
                    mine.append(h)
            comps.append(RegionSet.from_cycles(mine))
        return comps


# -- cycle helpers -----------------------------------------------------------

_DIR_INDEX = {
    (1, 0): 0,
    (1, 1): 1,
    (0, 1): 2,
    (-1, 1): 3,
    (-1, 0): 4,
    (-1, -1): 5,
    (0, -1): 6,
    (1, -1): 7,
}


def _dir_index(a: XY, b: XY) -> int:
    dx = (b[0] > a[0]) - (b[0] < a[0])
    dy = (b[1] > a[1]) - (b[1] < a[1])
    return _DIR_INDEX[(dx, dy)]


def _signed_area(cycle: Sequence[XY]) -> Scalar:
    s = Q(0)
    n = len(cycle)
    for i in range(n):
        ax, ay = cycle[i]
        bx, by = cycle[(i + 1) % n]
        s += ax * by - bx * ay
    return s / 2


def _point_in_cycle(pt: XY, cycle: Sequence[XY]) -> bool:
    """Even-odd test; points exactly on the boundary count as inside."""
    x, y = Q(pt[0]), Q(pt[1])
    inside = False
    n = len(cycle)
    for i in range(n):
        ax, ay = cycle[i]
        bx, by = cycle[(i + 1) % n]
        # boundary check
        if min(ax, bx) <= x <= max(ax, bx) and min(ay, by) <= y <= max(ay, by):
            if (bx - ax) * (y - ay) == (by - ay) * (x - ax):
                return True
        if (ay > y) != (by > y):
            xi = ax + (bx - ax) * (y - ay) / (by - ay)
            if x < xi:
                inside = not inside
    return inside


def _stitch(segs: list[tuple[XY, XY]]) -> list[list[XY]]:
    """Assemble directed boundary segments into simple vertex cycles."""
    from collections import defaultdict

    # split cancelling opposite pairs is unnecessary: trapezoid interiors
    # produce each interior edge twice with opposite direction only for
    # vertical edges, which the symdiff already removed; collinear abutting
    # top/bottom edges of adjacent slabs are distinct segments that the
    # collinear merge below cleans up.
    out_edges: dict[XY, list[int]] = defaultdict(list)
    for idx, (a, b) in enumerate(segs):
        if a != b:
            out_edges[a].append(idx)
    used = [False] * len(segs)
    cycles = []
    for start_idx in range(len(segs)):
        if used[start_idx]:
            continue
        path = []
        idx = start_idx
        while not used[idx]:
            used[idx] = True
            a, b = segs[idx]
            path.append(a)
            cands = [j for j in out_edges[b] if not used[j]]
            if not cands and b == segs[start_idx][0]:
                break  # closed
            if not cands:
                raise RuntimeError("boundary stitching failed: dead end")
            if len(cands) == 1:
                idx = cands[0]
            else:
                rev = (_dir_index(a, b) + 4) % 8
                idx = min(
                    cands,
                    key=lambda j: (rev - _dir_index(*segs[j])) % 8 or 8,
                )
        cycles.append(_simplify_cycle(path))
    return [c for c in cycles if len(c) >= 3]


def _simplify_cycle(path: list[XY]) -> list[XY]:
    """Merge consecutive collinear edges and drop duplicate vertices."""
    if not path:
        return path
    out: list[XY] = []
    n = len(path)
    for i in range(n):
        prev = path[i - 1]
        cur = path[i]
        nxt = path[(i + 1) % n]
        if cur == prev:
            continue
        if cur != nxt and _dir_index(prev, cur) == _dir_index(cur, nxt):
            continue
        out.append(cur)
    # one more pass in case of wrap-around collinearity
    changed = True
    while changed and len(out) >= 3:
        changed = False
        m = len(out)
        for i in range(m):
            prev, cur, nxt = out[i - 1], out[i], out[(i + 1) % m]
            if cur == prev or (
                cur != nxt and _dir_index(prev, cur) == _dir_index(cur, nxt)
            ):
                out.pop(i)
                changed = True
                break
    # deterministic start vertex
    if out:
        k = min(range(len(out)), key=lambda i: out[i])
        out = out[k:] + out[:k]
    return out
