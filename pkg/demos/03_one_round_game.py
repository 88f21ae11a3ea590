"""The one-round placement game, played exactly.

White places n points in a 1 x rho rectangle, Black replies with n
points, and each player owns the area closer to their sites (Manhattan
distance; contested ties count for nobody).  White wins with optimal
play exactly when rho >= n — this script walks the threshold and shows
the constructive strategies on both sides.
"""

from manhattan_voronoi.scalars import Q
from manhattan_voronoi.geometry import Rect
from manhattan_voronoi.balance import make_grid
from manhattan_voronoi.game import (
    black_best_response,
    grid_corner_winning_point,
    verdict,
    white_optimal,
)

print("verdict sweep (White wins iff rho >= n)")
for n in (1, 2, 3):
    for num in (4 * n - 2, 4 * n, 4 * n + 2):
        rho = max(Q(num, 4), Q(1))
        print(f"  n={n}, rho={rho}: {verdict(n, rho).value}")

print("\nWhite's side of the threshold: the 1 x n grid holds a tie")
rect = Rect(2, 1)
white = white_optimal(2, rect)
out = black_best_response(white)
print(f"  n=2, rho=2: black reply via {out.certificate.value}, "
      f"score white={out.score.white_area} black={out.score.black_area} "
      f"-> {out.score.winner.value}")

print("\nBlack's side: a sub-threshold rectangle falls to a winning point")
rect = Rect(Q(3, 2), 1)
white = make_grid(1, 2, rect)
out = black_best_response(white)
pts = ", ".join(f"({p.x}, {p.y})" for p in out.black)
print(f"  n=2, rho=3/2: {out.certificate.value} at {pts}")
print(f"  score white={out.score.white_area} black={out.score.black_area} "
      f"-> {out.score.winner.value}")

print("\neven square grids lose: the corner reply to the 2 x 2 grid")
unit = Rect(1, 1)
white = make_grid(2, 2, unit)
b, area = grid_corner_winning_point(white, unit)
print(f"  corner point ({b.x}, {b.y}): cell area {area} "
      f"vs fair share {unit.area() / 8}")
out = black_best_response(white)
print(f"  full reply: {out.certificate.value} -> {out.score.winner.value} "
      f"(black area {out.score.black_area})")
