"""Sampling-based ground truth, independent of the exact region kernel.

Areas are estimated by classifying lattice (or random) sample points by
their nearest site, using only Manhattan distances.  Lattice mode scales
every coordinate to a common integer denominator so distance comparisons
and tie detection are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .scalars import Q, Scalar, scalar_float
from .geometry import Point, Rect, manhattan_distance
from .balance import Configuration
from .game import GamePosition


@dataclass(frozen=True)
class SampleSpec:
    """Grid sampling at `resolution` points per unit length, or uniform
    random sampling of `samples` points when `seed` is set."""

    resolution: int = 128
    samples: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.resolution < 8:
            raise ValueError("resolution must be at least 8")


@dataclass(frozen=True)
class SampledScore:
    white_area: float
    black_area: float
    neutral_area: float
    error_bound: float


def _lattice(rect: Rect, spec: SampleSpec):
    """Sample points as exact rationals at lattice cell centers."""
    nx = max(1, round(spec.resolution * scalar_float(rect.width)))
    ny = max(1, round(spec.resolution * scalar_float(rect.height)))
    xs = [rect.width * Q(2 * i + 1, 2 * nx) for i in range(nx)]
    ys = [rect.height * Q(2 * j + 1, 2 * ny) for j in range(ny)]
    return xs, ys, nx * ny


def _int_grid(values: Sequence[Scalar], scale: int) -> np.ndarray:
    ints = [int(v * scale) for v in values]
    return np.array(ints, dtype=object)


def _common_scale(rect: Rect, sites: Sequence[Point], xs, ys) -> int:
    denoms = [rect.width.denominator, rect.height.denominator]
    for p in sites:
        denoms += [p.x.denominator, p.y.denominator]
    denoms += [v.denominator for v in xs[:1] + ys[:1]]
    scale = 1
    for d in denoms:
        scale = scale * d // math.gcd(scale, d)
    return scale


def _owner_counts(sites: Sequence[Point], colors: Sequence[int], rect: Rect, spec: SampleSpec):
    """Counts per color (0, 1) plus neutral, by exact nearest-site tests.

    Same-color ties keep the point for that color; cross-color ties are
    neutral, mirroring the scoring semantics in measure.
    """
    if spec.seed is not None and spec.samples:
        rng = np.random.default_rng(spec.seed)
        w, h = scalar_float(rect.width), scalar_float(rect.height)
        pts_x = [Q(v) for v in rng.uniform(0, w, spec.samples)]
        pts_y = [Q(v) for v in rng.uniform(0, h, spec.samples)]
        total = spec.samples
        sx = [scalar_float(p.x) for p in sites]
        sy = [scalar_float(p.y) for p in sites]
        counts = [0, 0, 0]
        ax = np.array([scalar_float(v) for v in pts_x])
        ay = np.array([scalar_float(v) for v in pts_y])
        dists = np.abs(ax[:, None] - np.array(sx)[None, :]) + np.abs(
            ay[:, None] - np.array(sy)[None, :]
        )
        nearest = np.argmin(dists, axis=1)
        col = np.array(colors)[nearest]
        counts[0] = int(np.sum(col == 0))
        counts[1] = int(np.sum(col == 1))
        err = 3.0 * 0.5 / math.sqrt(total)
        return counts, total, err * scalar_float(rect.area())

    xs, ys, total = _lattice(rect, spec)
    scale = _common_scale(rect, sites, xs, ys)
    gx = _int_grid(xs, scale)
    gy = _int_grid(ys, scale)
    px = _int_grid([p.x for p in sites], scale)
    py = _int_grid([p.y for p in sites], scale)
    counts = [0, 0, 0]
    color_arr = np.array(colors)
    for yi in gy:
        dy = np.abs(py - yi)
        # distances of this sample row to every site, exact integers
        d = np.abs(px[None, :] - gx[:, None]) + dy[None, :]
        for row, drow in zip(gx, d):
            best = min(drow)
            owners = {int(color_arr[k]) for k, v in enumerate(drow) if v == best}
            if len(owners) == 1:
                counts[owners.pop()] += 1
            else:
                counts[2] += 1
    perimeter = 2 * scalar_float(rect.width + rect.height)
    err = perimeter * (len(sites) + 1) / spec.resolution
    return counts, total, err


def sampled_owner_areas(pos: GamePosition, spec: SampleSpec | None = None) -> SampledScore:
    """Approximate game score by nearest-site sampling."""
    spec = spec or SampleSpec()
    sites = pos.white + pos.black
    colors = [0] * len(pos.white) + [1] * len(pos.black)
    counts, total, err = _owner_counts(sites, colors, pos.rect, spec)
    area = scalar_float(pos.rect.area())
    return SampledScore(
        white_area=counts[0] / total * area,
        black_area=counts[1] / total * area,
        neutral_area=counts[2] / total * area,
        error_bound=err,
    )


def sampled_cell_area(p: Point, cfg: Configuration, spec: SampleSpec | None = None) -> float:
    """Approximate area of the set of points strictly closest to p."""
    spec = spec or SampleSpec()
    if p not in cfg.points:
        raise ValueError("point is not a site of the configuration")
    sites = list(cfg.points)
    colors = [0 if q == p else 1 for q in sites]
    counts, total, _ = _owner_counts(sites, colors, cfg.rect, spec)
    return counts[0] / total * scalar_float(cfg.rect.area())


def brute_force_winning_point(
    white: Configuration, rect: Rect, spec: SampleSpec | None = None
) -> tuple[Point, float]:
    """Lattice argmax of the sampled black cell area over candidate points."""
    spec = spec or SampleSpec(resolution=64)
    res = max(8, spec.resolution // 8)
    nx = max(2, round(res * scalar_float(rect.width)))
    ny = max(2, round(res * scalar_float(rect.height)))
    taken = {(p.x, p.y) for p in white.points}
    best = None
    eval_spec = SampleSpec(resolution=spec.resolution)
    for i in range(1, nx):
        for j in range(1, ny):
            b = Point(rect.width * Q(i, nx), rect.height * Q(j, ny))
            if (b.x, b.y) in taken:
                continue
            sites = list(white.points) + [b]
            colors = [0] * len(white.points) + [1]
            counts, total, _ = _owner_counts(sites, colors, rect, eval_spec)
            est = counts[1] / total * scalar_float(rect.area())
            key = (est, scalar_float(b.x), scalar_float(b.y))
            if best is None or key > best[0]:
                best = (key, b, est)
    assert best is not None
    return best[1], best[2]
