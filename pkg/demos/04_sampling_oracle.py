"""Cross-checking the exact kernel against dumb sampling.

The region kernel computes areas as exact rationals.  The oracle module
ignores all of that machinery and just classifies lattice points by
nearest site with integer arithmetic — slow, crude, and a completely
independent path to the same numbers.  This script compares the two on
a game position and brute-forces a winning point the hard way.
"""

from manhattan_voronoi.scalars import Q
from manhattan_voronoi.geometry import Point, Rect
from manhattan_voronoi.balance import make_grid
from manhattan_voronoi.game import GamePosition, black_cell_area, score
from manhattan_voronoi.oracle import (
    SampleSpec,
    brute_force_winning_point,
    sampled_owner_areas,
)

unit = Rect(1, 1)
pos = GamePosition(
    unit,
    [Point(Q(1, 4), Q(1, 2)), Point(Q(3, 4), Q(1, 2))],
    [Point(Q(1, 2), Q(1, 4)), Point(Q(1, 2), Q(3, 4))],
)

exact = score(pos)
print("exact score")
print(f"  white={exact.white_area} black={exact.black_area} "
      f"neutral={exact.neutral_area} -> {exact.winner.value}")

est = sampled_owner_areas(pos, SampleSpec(resolution=128))
print("\nsampled score (128 points per unit length)")
print(f"  white~{est.white_area:.4f} black~{est.black_area:.4f} "
      f"neutral~{est.neutral_area:.4f} (error bound {est.error_bound:.4f})")
assert abs(est.white_area - float(exact.white_area)) <= est.error_bound

print("\nbrute-force winning point against the 2 x 2 grid")
white = make_grid(2, 2, unit)
b, sampled = brute_force_winning_point(white, unit, SampleSpec(resolution=64))
certified = black_cell_area(b, white.points, unit)
print(f"  sampled argmax at ({b.x}, {b.y}): ~{sampled:.4f}, "
      f"exact cell {certified}")
print(f"  fair share is {unit.area() / 8}; the exact engine certifies the win")
