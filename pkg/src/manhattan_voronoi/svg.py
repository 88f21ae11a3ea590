"""SVG 1.1 export of diagrams.

The viewBox uses rectangle units directly (y flipped into screen
coordinates); all styling goes through CSS classes so a stylesheet swap
retthemes the picture without touching geometry.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .geometry import Diagram, Point
from .scalars import scalar_float

_STYLE = """
  .cell { stroke: #333; stroke-width: 0.004; fill: #cfe3f5; }
  .cell.black { fill: #d8d8d8; }
  .neutral { fill: url(#hatch); stroke: #666; stroke-width: 0.003; }
  .site { fill: #1d4f8f; }
  .site.black { fill: #111; }
  .frame { fill: none; stroke: #000; stroke-width: 0.006; }
"""


def _fmt(value) -> str:
    return f"{scalar_float(value):.9f}".rstrip("0").rstrip(".") or "0"


def _path(vertices: Sequence[Point], height) -> str:
    cmds = []
    for i, v in enumerate(vertices):
        op = "M" if i == 0 else "L"
        cmds.append(f"{op}{_fmt(v.x)},{_fmt(height - v.y)}")
    cmds.append("Z")
    return " ".join(cmds)


def diagram_svg(diagram: Diagram, colors: Optional[Sequence[str]] = None) -> str:
    """Render a diagram; `colors` tags each cell polygon with a CSS class."""
    rect = diagram.rect
    w, h = scalar_float(rect.width), scalar_float(rect.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(rect.width)} '
        f'{_fmt(rect.height)}" width="{w * 480:.0f}" height="{h * 480:.0f}">',
        "<defs>",
        '<pattern id="hatch" width="0.03" height="0.03" patternTransform="rotate(45)" '
        'patternUnits="userSpaceOnUse"><rect width="0.03" height="0.03" fill="#f5efd8"/>'
        '<line x1="0" y1="0" x2="0" y2="0.03" stroke="#b09a4e" stroke-width="0.008"/></pattern>',
        f"<style>{_STYLE}</style>",
        "</defs>",
        f'<rect class="frame" x="0" y="0" width="{_fmt(rect.width)}" height="{_fmt(rect.height)}"/>',
    ]
    for i, cell in enumerate(diagram.cells):
        cls = "cell"
        if colors and i < len(colors) and colors[i] != "white":
            cls = f"cell {colors[i]}"
        for comp in cell.components():
            out.append(f'<path class="{cls}" d="{_path(comp.vertices, rect.height)}"/>')
    for region in diagram.neutral_regions:
        for comp in region.components():
            out.append(f'<path class="neutral" d="{_path(comp.vertices, rect.height)}"/>')
    for i, site in enumerate(diagram.sites):
        cls = "site"
        if colors and i < len(colors) and colors[i] != "white":
            cls = f"site {colors[i]}"
        out.append(
            f'<circle class="{cls}" cx="{_fmt(site.x)}" cy="{_fmt(rect.height - site.y)}" r="0.012"/>'
        )
    out.append("</svg>")
    return "\n".join(out)
