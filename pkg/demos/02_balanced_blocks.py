"""Balanced point sets beyond grids.

A set of n points in a rectangle is balanced when all 4n half cells of
its L1 Voronoi diagram have the same area.  Grids are the obvious
examples; this script shows the less obvious ones: the two-point family
R2 on strip widths [1, 3/2], the frozen three- and five-point blocks
R3/R5, seam-respecting concatenation, and the resulting injective
encoding of 0-1 strings into balanced configurations.
"""

from manhattan_voronoi.scalars import Q
from manhattan_voronoi.balance import (
    Configuration,
    atomic,
    concatenate,
    encode_binary_string,
    is_balanced,
    make_grid,
)
from manhattan_voronoi.geometry import Rect

print("grids are balanced")
for rows, cols in [(1, 3), (2, 2), (3, 4)]:
    report = is_balanced(make_grid(rows, cols, Rect(cols, rows)))
    print(f"  {rows}x{cols}: balanced={report.is_balanced}, "
          f"half-cell target {report.target}")

print("\nthe two-point family R2 (non-grid for rho > 1)")
for rho in (Q(1), Q(9, 8), Q(5, 4), Q(11, 8)):
    block = atomic("R2", rho=rho)
    report = is_balanced(Configuration(block.rect, block.points))
    pts = ", ".join(f"({p.x}, {p.y})" for p in block.points)
    print(f"  rho={rho}: points {pts} -> balanced={report.is_balanced}")

print("\nfrozen atomic blocks")
for name in ("R3", "R5"):
    block = atomic(name)
    report = is_balanced(Configuration(block.rect, block.points))
    print(f"  {name}: width {block.rect.width}, {len(block.points)} points, "
          f"balanced={report.is_balanced}")

print("\nconcatenation keeps balance (seams force orientations)")
cfg = concatenate([atomic("R3"), atomic("R3"), atomic("R5")])
print(f"  R3+R3+R5: width {cfg.rect.width}, {len(cfg.points)} points, "
      f"balanced={is_balanced(cfg).is_balanced}")

print("\nencoding 0-1 strings as balanced strips")
for bits in ("0", "1", "01", "110"):
    cfg = encode_binary_string(bits)
    print(f"  {bits!r}: width {cfg.rect.width}, {len(cfg.points)} points, "
          f"balanced={is_balanced(cfg).is_balanced}")

# distinct strings give distinct point sets
a = encode_binary_string("1100")
b = encode_binary_string("0110")
same = {(p.x, p.y) for p in a.points} == {(p.x, p.y) for p in b.points}
print(f"\n'1100' and '0110' share a point set: {same} "
      "(they are mirror images, but not the same configuration)")
