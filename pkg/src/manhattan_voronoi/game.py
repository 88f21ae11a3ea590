"""One-round two-player Voronoi game under the Manhattan metric.

White places n points in a 1 x rho rectangle, then Black places n points,
and each player scores the total area of the cells of their points.  Ties
between points of the same colour are resolved by treating the degenerate
bisector as a horizontal one; ties across colours leave the contested
corner regions neutral.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from .scalars import Q, Scalar, to_scalar
from .geometry import (
    Point,
    Rect,
    TiePolicy,
    arms,
    half_cells,
    voronoi_diagram,
)
from .balance import Configuration, make_grid

log = logging.getLogger(__name__)


class Winner(Enum):
    WHITE = "white"
    BLACK = "black"
    TIE = "tie"


class Certificate(Enum):
    HALVING_ATTACK = "halving-attack"
    WINNING_POINT_PLUS_STEALS = "winning-point-plus-steals"
    BEST_TIE_ATTEMPT = "best-tie-attempt"


@dataclass(frozen=True)
class GamePosition:
    rect: Rect
    white: tuple[Point, ...]
    black: tuple[Point, ...]

    def __init__(self, rect, white, black):
        white = tuple(white)
        black = tuple(black)
        if len(white) != len(black):
            raise ValueError("both players place the same number of points")
        if not white:
            raise ValueError("empty position")
        seen = set()
        for p in white + black:
            if not rect.contains(p):
                raise ValueError(f"point {p} outside the rectangle")
            key = (p.x, p.y)
            if key in seen:
                raise ValueError(f"duplicate point {p}")
            seen.add(key)
        object.__setattr__(self, "rect", rect)
        object.__setattr__(self, "white", white)
        object.__setattr__(self, "black", black)

    @property
    def n(self) -> int:
        return len(self.white)


@dataclass(frozen=True)
class Score:
    white_area: Scalar
    black_area: Scalar
    neutral_area: Scalar
    winner: Winner


@dataclass(frozen=True)
class StrategyOutcome:
    black: tuple[Point, ...]
    score: Score
    certificate: Certificate


def _mixed_policy(n_white: int):
    """Same-colour degenerate pairs get the horizontal award, cross-colour
    pairs keep the neutral zone."""

    def policy(i: int, j: int) -> TiePolicy:
        same = (i < n_white) == (j < n_white)
        return TiePolicy.AWARD_HORIZONTAL if same else TiePolicy.NEUTRAL_ZONE

    return policy


def score(pos: GamePosition) -> Score:
    """Exact score of a finished game position."""
    sites = pos.white + pos.black
    diagram = voronoi_diagram(sites, pos.rect, _mixed_policy(len(pos.white)))
    white_area = Q(0)
    black_area = Q(0)
    for i, cell in enumerate(diagram.cells):
        if i < len(pos.white):
            white_area += cell.area()
        else:
            black_area += cell.area()
    neutral = pos.rect.area() - white_area - black_area
    if white_area > black_area:
        winner = Winner.WHITE
    elif black_area > white_area:
        winner = Winner.BLACK
    else:
        winner = Winner.TIE
    return Score(white_area, black_area, neutral, winner)


def verdict(n: int, rho) -> Winner:
    """Who wins with optimal play: White exactly when rho >= n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    r = to_scalar(rho)
    if r < 1:
        raise ValueError("rho must be at least 1")
    return Winner.WHITE if r >= n else Winner.BLACK


def white_optimal(n: int, rect: Rect) -> Configuration:
    """White's unique winning first move: the 1 x n grid.

    Raises when the rectangle's aspect ratio is below n, in which case no
    unbeatable white set exists.
    """
    if rect.aspect < n:
        raise ValueError("no unbeatable white set exists when rho < n")
    return make_grid(1, n, rect)


# -- cell evaluation helpers ----------------------------------------------------


def black_cell_area(b: Point, white: Sequence[Point], rect: Rect) -> Scalar:
    """Exact area of the cell a single black point b would get against the
    white set (cross-colour neutral-zone ties)."""
    region = rect.as_region_set()
    from .geometry import _dominance_rset  # internal exact kernel

    for w in white:
        if (w.x, w.y) == (b.x, b.y):
            raise ValueError("black point coincides with a white point")
        region = region.intersect(_dominance_rset(b, w, rect, TiePolicy.NEUTRAL_ZONE))
    return region.area()


def _white_diagram(white: Sequence[Point], rect: Rect):
    return voronoi_diagram(tuple(white), rect, TiePolicy.AWARD_HORIZONTAL)


_HALF_OFFSETS = {
    "left": (-1, 0),
    "right": (1, 0),
    "bottom": (0, -1),
    "top": (0, 1),
}


def steal_point(
    w: Point,
    half: str,
    eps,
    white: Configuration,
) -> Point:
    """Black point capturing the chosen half cell of white site w up to eps.

    The point sits at a small offset delta from w into the half.  The loss
    relative to the full half is at most (sum of the two bounding arm
    lengths) * delta / 2, so delta is chosen from eps accordingly, kept
    strictly inside the cell, and the capture is re-verified exactly
    (shrinking delta when the first-order bound was not tight enough).
    """
    eps = to_scalar(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if half not in _HALF_OFFSETS:
        raise ValueError(f"unknown half cell {half!r}")
    diagram = _white_diagram(white.points, white.rect)
    idx = white.points.index(w)
    cell = diagram.cells[idx]
    halves = half_cells(w, cell)
    target = halves[half].area()
    cell_arms = arms(w, cell, white.rect)
    if half in ("left", "right"):
        bounding = cell_arms.top + cell_arms.bottom
        clearance = cell_arms.left if half == "left" else cell_arms.right
    else:
        bounding = cell_arms.left + cell_arms.right
        clearance = cell_arms.bottom if half == "bottom" else cell_arms.top
    if bounding == 0:
        bounding = Q(1)
    delta = 2 * eps / bounding
    clamped = delta >= clearance
    # interior choice: strict inequalities in the capture bound
    delta = min(delta, clearance) / 2
    dx, dy = _HALF_OFFSETS[half]
    others = [p for p in white.points]
    for _ in range(40):
        b = Point(w.x + dx * delta, w.y + dy * delta)
        captured = black_cell_area(b, others, white.rect)
        region = white.rect.as_region_set()
        from .geometry import _dominance_rset

        for site in others:
            region = region.intersect(_dominance_rset(b, site, white.rect, TiePolicy.NEUTRAL_ZONE))
        inside_half = region.intersect(halves[half]._rset).area()
        if inside_half >= target - eps:
            if clamped:
                log.info("steal delta clamped to the cell interior")
            return b
        delta /= 2
    raise RuntimeError("steal verification did not converge")


def halving_attack(white: Configuration) -> Optional[StrategyOutcome]:
    """Black's winning reply when some white half cell misses the fair share.

    Picks the orientation class (vertical or horizontal halves) whose n
    largest halves exceed half the playing field, steals each of them, and
    returns the resulting position; returns None when every half cell
    equals area(rect)/(2n) so no such attack exists.
    """
    rect = white.rect
    n = len(white.points)
    target = rect.area() / (2 * n)
    diagram = _white_diagram(white.points, rect)
    all_equal = True
    class_sums = {"vertical": Q(0), "horizontal": Q(0)}
    picks = {"vertical": [], "horizontal": []}
    for p, cell in zip(diagram.sites, diagram.cells):
        halves = half_cells(p, cell)
        for name, region in halves.items():
            if region.area() != target:
                all_equal = False
        lv, rv = halves["left"].area(), halves["right"].area()
        bv, tv = halves["bottom"].area(), halves["top"].area()
        side_v = "left" if lv >= rv else "right"
        side_h = "bottom" if bv >= tv else "top"
        class_sums["vertical"] += max(lv, rv)
        class_sums["horizontal"] += max(bv, tv)
        picks["vertical"].append((p, side_v))
        picks["horizontal"].append((p, side_h))
    if all_equal:
        return None
    cls = max(class_sums, key=lambda k: class_sums[k])
    surplus = class_sums[cls] - rect.area() / 2
    if surplus <= 0:
        # the larger class always clears half the field when halves differ,
        # n * mean of the per-site maxima being strictly above target
        raise RuntimeError("half-cell audit inconsistent with the class sums")
    eps = surplus / (2 * n)
    for _ in range(20):
        black = tuple(steal_point(p, side, eps, white) for p, side in picks[cls])
        pos = GamePosition(rect, white.points, black)
        sc = score(pos)
        if sc.black_area > rect.area() / 2:
            return StrategyOutcome(black, sc, Certificate.HALVING_ATTACK)
        eps /= 2
    raise RuntimeError("halving attack failed to verify")


_DIAGONALS = {
    "ne": (1, 1),
    "nw": (-1, 1),
    "se": (1, -1),
    "sw": (-1, -1),
}


def diagonal_shift_point(w: Point, delta, orientation: str, cell=None) -> Point:
    """Candidate winning point at diagonal offset delta from white site w.

    When the targeted arms of w's cell differ enough (delta below 2/3 of
    the arm-length difference), the candidate's cell strictly exceeds the
    fair share; the caller certifies that with an exact area evaluation.
    """
    delta = to_scalar(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if orientation not in _DIAGONALS:
        raise ValueError(f"unknown orientation {orientation!r}")
    dx, dy = _DIAGONALS[orientation]
    b = Point(w.x + dx * delta, w.y + dy * delta)
    if cell is not None and not cell.contains(b):
        raise ValueError("candidate outside the cell")
    return b


def _square_grid_shape(white: Configuration, rect: Rect):
    """(rows, cols, arm length) when white is a square grid with both sides
    at least 2, else None."""
    n = len(white.points)
    for rows in range(2, n + 1):
        if n % rows:
            continue
        cols = n // rows
        if cols < 2:
            continue
        if set(white.points) == set(make_grid(rows, cols, rect).points):
            d_x = rect.width / (2 * cols)
            d_y = rect.height / (2 * rows)
            if d_x == d_y:
                return rows, cols, d_x
    return None


def grid_corner_winning_point(white: Configuration, rect: Rect) -> tuple[Point, Scalar]:
    """Black's corner reply to a square grid: the cell near the top-left
    grid point at distance 3d/2 from the top and left boundary has area
    2d^2 + d^2/4, strictly above the fair share 2d^2.

    The returned area is the horizontal-limit reading of the point's two
    degenerate ties (one corner square to Black, one to White); under the
    strict neutral-zone rule the cell at the exact location loses both
    corner squares, so winning placements perturb the point slightly
    along an axis (the search does this automatically).
    """
    shape = _square_grid_shape(white, rect)
    if shape is None:
        raise ValueError("white set is not a square grid with both sides >= 2")
    _, _, d = shape
    b = Point(Q(3, 2) * d, rect.height - Q(3, 2) * d)
    return b, 2 * d * d + d * d / 4


def grid_black_area(x, y, n: int, rect: Rect) -> Scalar:
    """Closed-form best black cell area at offset (x, y) from the nearest
    white point of the 1 x n grid (w_b left of and not below the black
    point, interior slot).  At x = y half of the neutral zone is credited
    to Black."""
    x, y = to_scalar(x), to_scalar(y)
    wp = rect.width / (2 * n)
    hp = rect.height / 2
    if not (0 <= x <= wp and 0 <= y <= hp):
        raise ValueError("offset outside the grid cell")
    share = rect.area() / (2 * n)
    if x > y:
        return share - y * y
    return share - y * (wp - hp) - (3 * y * y + x * x) / 4


@dataclass(frozen=True)
class SearchParams:
    """Knobs for the winning-point search."""

    lattice_resolution: int = 16
    delta_ladder: int = 6
    refine_rounds: int = 8


def _candidate_points(white: Configuration, rect: Rect, params: SearchParams):
    """Analytic candidates first, then a uniform lattice."""
    n = len(white.points)
    taken = {(p.x, p.y) for p in white.points}
    out = []

    def push(p: Point):
        if (p.x, p.y) in taken:
            return
        if not (0 < p.x < rect.width and 0 < p.y < rect.height):
            return
        taken.add((p.x, p.y))
        out.append(p)

    diagram = _white_diagram(white.points, rect)

    # midpoints between every pair of sites (grid ties live here)
    for a, b in itertools.combinations(white.points, 2):
        push(Point((a.x + b.x) / 2, (a.y + b.y) / 2))

    # diagonal shifts scaled from arm-length differences
    for p, cell in zip(diagram.sites, diagram.cells):
        ar = arms(p, cell, rect)
        lengths = {"left": ar.left, "right": ar.right, "bottom": ar.bottom, "top": ar.top}
        gaps = [abs(a - b) for a, b in itertools.combinations(lengths.values(), 2) if a != b]
        base = max(gaps) if gaps else max(lengths.values())
        for k in range(1, params.delta_ladder + 1):
            delta = base * Q(2, 3) * Q(k, params.delta_ladder + 1)
            if delta <= 0:
                continue
            for orientation in _DIAGONALS:
                try:
                    shifted = diagonal_shift_point(p, delta, orientation, cell)
                except ValueError:
                    continue
                push(shifted)
                # break the degenerate tie with p: nudge one coordinate so
                # the bisector collapses to a near-axis staircase and the
                # intended half cell goes to the shifted point
                for eta in (delta / 16, delta / 64):
                    sx = 1 if shifted.x > p.x else -1
                    sy = 1 if shifted.y > p.y else -1
                    push(Point(shifted.x + sx * eta, shifted.y))
                    push(Point(shifted.x, shifted.y + sy * eta))

    # square-grid corner reply, axis-perturbed to dodge the degenerate ties
    shape = _square_grid_shape(white, rect)
    if shape is not None:
        _, _, d = shape
        corner, _ = grid_corner_winning_point(white, rect)
        push(corner)
        for eta in (d / 16, d / 64):
            push(Point(corner.x + eta, corner.y))
            push(Point(corner.x, corner.y - eta))

    # steals of the largest half cells
    target = rect.area() / (2 * n)
    for p, cell in zip(diagram.sites, diagram.cells):
        halves = half_cells(p, cell)
        for name, region in halves.items():
            gain = region.area() - target
            if gain > 0:
                try:
                    push(steal_point(p, name, gain / 2, white))
                except (RuntimeError, ValueError):
                    continue

    # uniform lattice
    res = params.lattice_resolution
    nx = max(2, int(res * float(rect.width / rect.height)))
    ny = max(2, res)
    for i in range(1, nx):
        for j in range(1, ny):
            push(Point(rect.width * Q(i, nx), rect.height * Q(j, ny)))
    return out


def find_winning_point(
    white: Configuration, rect: Rect, params: SearchParams | None = None
) -> Optional[tuple[Point, Scalar]]:
    """Search for a black point whose exact cell beats area(rect)/(2n).

    Every returned hit is certified by an exact area computation.  A None
    result only means no candidate at this search depth won, never a proof
    that no winning point exists.
    """
    params = params or SearchParams()
    n = len(white.points)
    share = rect.area() / (2 * n)
    best: Optional[tuple[Point, Scalar]] = None
    searched = 0
    for b in _candidate_points(white, rect, params):
        area = black_cell_area(b, white.points, rect)
        searched += 1
        if area > share:
            if best is None or (area, str(b.x), str(b.y)) > (best[1], str(best[0].x), str(best[0].y)):
                best = (b, area)
    log.info("winning-point search examined %d candidates", searched)
    return best


def complete_black_set(white: Configuration, b: Point, surplus) -> StrategyOutcome:
    """Extend a certified winning point to a full winning black set.

    For n-1 white sites a half cell disjoint from b's cell is stolen with
    a budget keeping the total strictly above half the field; the final
    score is re-verified exactly.
    """
    surplus = to_scalar(surplus)
    if surplus <= 0:
        raise ValueError("surplus must be positive")
    rect = white.rect
    n = len(white.points)
    if n == 1:
        pos = GamePosition(rect, white.points, (b,))
        return StrategyOutcome((b,), score(pos), Certificate.WINNING_POINT_PLUS_STEALS)

    from .geometry import _dominance_rset

    b_region = rect.as_region_set()
    for site in white.points:
        b_region = b_region.intersect(_dominance_rset(b, site, rect, TiePolicy.NEUTRAL_ZONE))

    diagram = _white_diagram(white.points, rect)
    steals = []
    for p, cell in zip(diagram.sites, diagram.cells):
        if len(steals) == n - 1:
            break
        halves = half_cells(p, cell)
        options = []
        for name, region in halves.items():
            if region._rset.intersect(b_region).area() == 0:
                options.append((region.area(), name))
        if not options:
            # a single cell cannot meet both opposite halves of another site
            raise RuntimeError("no half cell disjoint from the winning cell")
        options.sort(reverse=True)
        steals.append((p, options[0][1]))

    eps = surplus / (2 * (n - 1))
    for _ in range(20):
        black = [b] + [steal_point(p, side, eps, white) for p, side in steals]
        pos = GamePosition(rect, white.points, black)
        sc = score(pos)
        if sc.black_area > rect.area() / 2:
            return StrategyOutcome(tuple(black), sc, Certificate.WINNING_POINT_PLUS_STEALS)
        eps /= 2
    raise RuntimeError("black completion failed to verify")


def black_best_response(
    white: Configuration, rect: Rect | None = None, params: SearchParams | None = None
) -> StrategyOutcome:
    """Black's constructive reply: halving attack, then winning point plus
    steals, then the best tie attempt."""
    rect = rect or white.rect
    n = len(white.points)
    attack = halving_attack(white)
    if attack is not None:
        return attack
    hit = find_winning_point(white, rect, params)
    if hit is not None:
        b, area = hit
        return complete_black_set(white, b, area - rect.area() / (2 * n))
    # tie attempt: the centre-line midpoints capture exactly the fair share
    candidates = []
    pts = sorted(white.points, key=lambda p: (p.x, p.y))
    for a, c in zip(pts, pts[1:]):
        candidates.append(Point((a.x + c.x) / 2, (a.y + c.y) / 2))
    taken = {(p.x, p.y) for p in white.points}
    black: list[Point] = []
    for cand in candidates:
        if len(black) == n:
            break
        if (cand.x, cand.y) not in taken:
            black.append(cand)
            taken.add((cand.x, cand.y))
    lattice = SearchParams(lattice_resolution=max(8, (params or SearchParams()).lattice_resolution))
    if len(black) < n:
        scored = []
        for cand in _candidate_points(white, rect, lattice):
            if (cand.x, cand.y) in taken:
                continue
            scored.append((black_cell_area(cand, white.points, rect), str(cand.x), str(cand.y), cand))
        scored.sort(reverse=True)
        for _, _, _, cand in scored:
            if len(black) == n:
                break
            if (cand.x, cand.y) not in taken:
                black.append(cand)
                taken.add((cand.x, cand.y))
    pos = GamePosition(rect, white.points, black)
    return StrategyOutcome(tuple(black), score(pos), Certificate.BEST_TIE_ATTEMPT)
