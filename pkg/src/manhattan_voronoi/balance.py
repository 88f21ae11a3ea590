"""Balanced configurations: verification, atomic blocks, and concatenation.

A point set is balanced when every half cell has area area(rect)/(2n),
which is equivalent to fairness (equal cells) plus local optimality (every
site is the L1 median of its cell).  Small atomic blocks that cannot be
decomposed into rectangular sub-blocks are kept as frozen exact data; see
tools/derive_blocks.py in the repository for the one-time derivation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional, Sequence

from .geometry import (
    Diagram,
    Point,
    Rect,
    Region,
    TiePolicy,
    half_cells,
    quarter_cells,
    voronoi_diagram,
)
from .scalars import Q, Scalar, scalar_str, to_scalar

HALF_KEYS = ("left", "right", "top", "bottom")


@dataclass(frozen=True)
class Configuration:
    rect: Rect
    points: tuple

    def __init__(self, rect: Rect, points: Sequence[Point]):
        object.__setattr__(self, "rect", rect)
        object.__setattr__(self, "points", tuple(points))
        seen = set()
        for p in self.points:
            if not rect.contains(p):
                raise ValueError(f"point outside rectangle: {p}")
            if p in seen:
                raise ValueError(f"duplicate point: {p}")
            seen.add(p)

    def __len__(self):
        return len(self.points)


@dataclass
class BalanceReport:
    target: Scalar  # area(rect) / (2n)
    half_areas: list  # per site: dict half-name -> Scalar
    is_balanced: bool
    worst_deviation: Scalar
    diagram: Diagram

    def site_deviation(self, i: int) -> Scalar:
        return max(abs(a - self.target) for a in self.half_areas[i].values())


@dataclass(frozen=True)
class Block:
    """A balanced building block of height 1; cells tile the block rectangle."""

    name: str
    rect: Rect
    points: tuple
    provenance: str = ""

    def as_configuration(self) -> Configuration:
        return Configuration(self.rect, self.points)


def is_locally_optimal(p: Point, cell: Region) -> bool:
    """Quarter-cell property: diagonally opposite quarter cells equal.

    Also evaluates the equivalent four-equal-half-cells test and insists the
    two agree, as a self-check of the construction.
    """
    qs = [r.area() for r in quarter_cells(p, cell)]
    quarter_ok = qs[0] == qs[2] and qs[1] == qs[3]
    hs = [r.area() for r in half_cells(p, cell).values()]
    half_ok = len(set(hs)) == 1
    if quarter_ok != half_ok:
        raise AssertionError(
            f"median-lemma equivalence violated: quarters={qs} halves={hs}"
        )
    return quarter_ok


def is_balanced(cfg: Configuration) -> BalanceReport:
    """Exact per-site half-cell audit against area(rect)/(2n)."""
    n = len(cfg.points)
    diagram = voronoi_diagram(cfg.points, cfg.rect, TiePolicy.NEUTRAL_ZONE)
    target = cfg.rect.area() / (2 * n)
    half_areas = []
    worst = Q(0)
    for p, cell in zip(cfg.points, diagram.cells):
        areas = {k: r.area() for k, r in half_cells(p, cell).items()}
        half_areas.append(areas)
        for a in areas.values():
            dev = abs(a - target)
            if dev > worst:
                worst = dev
    return BalanceReport(
        target=target,
        half_areas=half_areas,
        is_balanced=(worst == 0),
        worst_deviation=worst,
        diagram=diagram,
    )


def make_grid(rows: int, cols: int, rect: Rect) -> Configuration:
    """rows x cols grid of cell centers."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be >= 1")
    pts = [
        Point(Q(2 * j - 1) * rect.width / (2 * cols), Q(2 * i - 1) * rect.height / (2 * rows))
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
    ]
    return Configuration(rect, pts)


# -- atomic blocks ------------------------------------------------------------


def _load_block_data() -> dict:
    text = resources.files("manhattan_voronoi").joinpath("data/atomic_blocks.json").read_text()
    return json.loads(text)


_BLOCK_CACHE: Optional[dict] = None


def _block_data() -> dict:
    global _BLOCK_CACHE
    if _BLOCK_CACHE is None:
        _BLOCK_CACHE = _load_block_data()
    return _BLOCK_CACHE


def _mirror_x(points, width):
    return tuple(Point(width - p.x, p.y) for p in points)


def atomic(name: str, rho: Scalar | str | None = None) -> Block:
    """Named atomic balanced blocks: R2(rho), R3, R3', R4, R5.

    R2 takes the strip width rho in [1, 3/2]; the others are fixed blocks
    whose exact coordinates were derived once and frozen (see data file).
    All blocks have height 1 and tile their rectangle with their cells.
    """
    if name == "R2":
        if rho is None:
            raise ValueError("R2 requires rho")
        r = to_scalar(rho)
        if not Q(1) <= r <= Q(3, 2):
            raise ValueError("R2 strip width must lie in [1, 3/2]")
        rect = Rect(r, 1)
        pts = (Point(Q(1, 2), Q(1, 4)), Point(r - Q(1, 2), Q(3, 4)))
        return Block("R2", rect, pts, provenance="closed form")
    if rho is not None:
        raise ValueError(f"{name} takes no rho parameter")
    mirror = name.endswith("'")
    base = name.rstrip("'")
    data = _block_data().get(base)
    if data is None:
        raise ValueError(f"unknown atomic block: {name}")
    width = to_scalar(data["width"])
    height = to_scalar(data["height"])
    pts = tuple(Point(to_scalar(x), to_scalar(y)) for x, y in data["points"])
    if mirror:
        pts = _mirror_x(pts, width)
    return Block(name, Rect(width, height), pts, provenance=data.get("provenance", ""))


def _oriented(block: Block, flip_x: bool, flip_y: bool) -> tuple[Point, ...]:
    w, h = block.rect.width, block.rect.height
    out = []
    for p in block.points:
        x = w - p.x if flip_x else p.x
        y = h - p.y if flip_y else p.y
        out.append(Point(x, y))
    return tuple(out)


def concatenate(blocks: Sequence[Block], auto_orient: bool = True) -> Configuration:
    """Place height-1 blocks side by side into one balanced strip.

    Balance of the joined strip depends on the orientation of each block:
    a seam only stays a straight wall of the diagram when the points next
    to it on both sides are mirror images of each other.  With auto_orient
    each appended block is tried in its four axis-mirrored orientations and
    the first one keeping the exact prefix balanced is used; a ValueError
    is raised when none does.
    """
    if not blocks:
        raise ValueError("empty block list")
    for b in blocks:
        if b.rect.height != 1:
            raise ValueError(f"block {b.name} does not have height 1")
    width = Q(0)
    pts: list[Point] = []
    for b in blocks:
        placed = None
        orientations = [(False, False), (True, False), (False, True), (True, True)]
        if not auto_orient or not pts:
            orientations = orientations[:1]
        for fx, fy in orientations:
            cand = pts + [p.translated(width, 0) for p in _oriented(b, fx, fy)]
            cfg = Configuration(Rect(width + b.rect.width, 1), cand)
            report = is_balanced(cfg)
            if report.is_balanced and report.diagram.neutral_area() == 0:
                placed = cand
                break
        if placed is None:
            raise ValueError(f"block {b.name} cannot be joined while keeping balance")
        pts = placed
        width += b.rect.width
    return Configuration(Rect(width, 1), pts)


def encode_binary_string(bits: str) -> Configuration:
    """Injective encoding of 0-1 strings into balanced strip configurations.

    Position i contributes the pair (R3, R3'); an R5 block is appended after
    the i-th pair exactly when bit i is 1.
    """
    if not bits:
        raise ValueError("empty string")
    blocks = []
    for ch in bits:
        if ch not in "01":
            raise ValueError(f"non-binary character {ch!r}")
        blocks.append(atomic("R3"))
        blocks.append(atomic("R3'"))
        if ch == "1":
            blocks.append(atomic("R5"))
    return concatenate(blocks)


# -- congruence (for injectivity checks) ---------------------------------------


def canonical_form(cfg: Configuration):
    """Point multiset normalized under the rectangle's dihedral symmetries
    and uniform scaling; usable as a congruence-class key."""
    w, h = cfg.rect.width, cfg.rect.height
    scale = Q(1) / h
    variants = []
    dims = []
    for swap in (False, True):
        ww, hh = (h, w) if swap else (w, h)
        for fx in (False, True):
            for fy in (False, True):
                pts = []
                for p in cfg.points:
                    x, y = (p.y, p.x) if swap else (p.x, p.y)
                    if fx:
                        x = ww - x
                    if fy:
                        y = hh - y
                    pts.append((x / hh, y / hh))
                variants.append((scalar_str(ww / hh), tuple(sorted((scalar_str(x), scalar_str(y)) for x, y in pts))))
    return min(variants)


def congruent(a: Configuration, b: Configuration) -> bool:
    return canonical_form(a) == canonical_form(b)


# -- numerical search for balanced non-grid sets -------------------------------


@dataclass
class SearchHit:
    rho: float
    points: list  # [(x, y) floats]
    deviation: float
    configuration: Configuration


def _balance_residuals_exact(rect: Rect, coords) -> list:
    pts = [Point(Q(coords[i]), Q(coords[i + 1])) for i in range(0, len(coords), 2)]
    cfg = Configuration(rect, pts)
    rep = is_balanced(cfg)
    out = []
    for areas in rep.half_areas:
        out.extend(areas[k] - rep.target for k in HALF_KEYS)
    return out


def _balance_objective(params, n, rho_fixed):
    """least_squares residuals; float params converted exactly to rationals."""
    import math

    if any(not math.isfinite(v) for v in params):
        return [1e3] * (4 * n)
    if rho_fixed is None:
        rho, coords = params[0], params[1:]
    else:
        rho, coords = rho_fixed, params
    try:
        rect = Rect(Q(float(rho)), 1)
        res = _balance_residuals_exact(rect, [float(c) for c in coords])
        return [float(r) for r in res]
    except (ValueError, ZeroDivisionError):
        return [1e3] * (4 * n)


def _near_grid(points, rho, n, postol) -> bool:
    import itertools

    grids = []
    for rows in (1, 2, 3, 4):
        if n % rows == 0:
            cols = n // rows
            grids.append(
                sorted(
                    ((2 * j - 1) * rho / (2 * cols), (2 * i - 1) / (2 * rows))
                    for i in range(1, rows + 1)
                    for j in range(1, cols + 1)
                )
            )
    # jitter can reorder near-equal coordinates, so match greedily rather
    # than pairing two sorted lists positionally
    for g in grids:
        pool = list(points)
        for gx, gy in g:
            match = next(
                (
                    k
                    for k, (px, py) in enumerate(pool)
                    if abs(px - gx) <= postol and abs(py - gy) <= postol
                ),
                None,
            )
            if match is None:
                break
            pool.pop(match)
        else:
            return True
    return False


def search_balanced_nongrid(
    n: int,
    resolution: int = 32,
    tol: Scalar | None = None,
    rho_range: tuple = (1, 2),
    seeds_per_rho: int = 24,
    seed: int = 0,
) -> list[SearchHit]:
    """Desk-scale falsification search for balanced non-grid point sets.

    Seeds are drawn per aspect-ratio lattice value (step 1/resolution) and
    refined by local least-squares descent with the aspect ratio free within
    half a lattice step; every reported hit is certified by an exact
    half-cell deviation <= tol.  Absence of hits is evidence, not proof.
    """
    import random

    import numpy as np
    from scipy.optimize import least_squares

    if n not in (2, 3):
        raise ValueError("search supports n in {2, 3}")
    if resolution < 8:
        raise ValueError("resolution must be >= 8")
    rng = random.Random(seed)
    lo, hi = float(rho_range[0]), float(rho_range[1])
    step = 1.0 / resolution
    rhos = [lo + k * step for k in range(int(round((hi - lo) * resolution)) + 1)]
    if not rhos:
        rhos = [lo]
    tol_q = Q(tol) if tol is not None else None

    hits: list[SearchHit] = []
    seen_keys = set()
    for rho0 in rhos:
        r_lo = max(lo, rho0 - step / 2)
        r_hi = min(hi, rho0 + step / 2)
        rho_fixed = rho0 if r_lo == r_hi else None
        for _ in range(seeds_per_rho):
            coords = []
            for _ in range(n):
                coords.extend([rng.uniform(0.05, 0.95) * rho0, rng.uniform(0.05, 0.95)])
            if rho_fixed is None:
                x0 = [rho0] + coords
                bounds = (
                    [r_lo] + [0.0] * (2 * n),
                    [r_hi] + [max(hi, 1.0) + 1.0, 1.0] * n,
                )
            else:
                x0 = coords
                bounds = ([0.0] * (2 * n), [rho0, 1.0] * n)
            try:
                sol = least_squares(
                    _balance_objective,
                    x0,
                    bounds=bounds,
                    args=(n, rho_fixed),
                    xtol=1e-13,
                    ftol=1e-13,
                    gtol=1e-13,
                    max_nfev=400,
                )
            except Exception:
                continue
            if rho_fixed is None:
                rho_v, cs = float(sol.x[0]), list(sol.x[1:])
            else:
                rho_v, cs = rho0, list(sol.x)
            rect_area = rho_v
            max_dev = max(abs(v) for v in _balance_objective(sol.x, n, rho_fixed))
            cutoff = float(tol_q) if tol_q is not None else rect_area / 1e4
            if max_dev > cutoff:
                continue
            pts = [(cs[i], cs[i + 1]) for i in range(0, len(cs), 2)]
            if _near_grid(pts, rho_v, n, postol=1.0 / resolution):
                continue
            key = (round(rho_v * 4 * resolution), tuple(sorted((round(x * 4 * resolution), round(y * 4 * resolution)) for x, y in pts)))
            if key in seen_keys:
                continue
            # certify exactly
            rect = Rect(Q(rho_v), 1)
            try:
                res = _balance_residuals_exact(rect, [Q(x) for x in [c for xy in pts for c in xy]])
            except ValueError:
                continue
            exact_dev = max(abs(r) for r in res)
            limit = tol_q if tol_q is not None else rect.area() / 10**4
            if exact_dev > limit:
                continue
            seen_keys.add(key)
            cfg = Configuration(rect, [Point(Q(x), Q(y)) for x, y in pts])
            hits.append(SearchHit(rho=rho_v, points=pts, deviation=float(exact_dev), configuration=cfg))
    return hits
