"""JSON configuration documents.

Rationals travel as strings ("p/q" or exact decimals) so no precision is
lost; decimal mirrors are attached on output for display only.
"""

from __future__ import annotations

from typing import Any, Optional

from .scalars import Scalar, scalar_float, scalar_str, to_scalar
from .geometry import Point, Rect
from .balance import Configuration
from .game import GamePosition


class ConfigError(ValueError):
    """Malformed or geometrically invalid configuration document."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _scalar(value: Any, where: str) -> Scalar:
    try:
        return to_scalar(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ConfigError("bad-number", f"{where}: {exc}") from exc


def _points(raw: Any, where: str) -> tuple[Point, ...]:
    if not isinstance(raw, list):
        raise ConfigError("bad-points", f"{where} must be a list of [x, y] pairs")
    out = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ConfigError("bad-points", f"{where}[{i}] must be an [x, y] pair")
        out.append(Point(_scalar(entry[0], f"{where}[{i}].x"), _scalar(entry[1], f"{where}[{i}].y")))
    return tuple(out)


def parse_document(doc: Any) -> dict:
    """Validate a ConfigDocument; returns rect, white, black, metadata."""
    if not isinstance(doc, dict):
        raise ConfigError("bad-document", "document must be a JSON object")
    raw_rect = doc.get("rect")
    if not isinstance(raw_rect, dict) or "width" not in raw_rect or "height" not in raw_rect:
        raise ConfigError("bad-rect", "rect must carry width and height")
    width = _scalar(raw_rect["width"], "rect.width")
    height = _scalar(raw_rect["height"], "rect.height")
    if width <= 0 or height <= 0:
        raise ConfigError("bad-rect", "rect sides must be positive")
    rect = Rect(width, height)
    white = _points(doc.get("white", []), "white")
    black = _points(doc["black"], "black") if doc.get("black") is not None else None
    if not white:
        raise ConfigError("bad-points", "at least one white point is required")
    seen = set()
    for p in white + (black or ()):
        if not rect.contains(p):
            raise ConfigError("point-outside", f"point ({p.x}, {p.y}) lies outside the rectangle")
        if (p.x, p.y) in seen:
            raise ConfigError("duplicate-point", f"duplicate point ({p.x}, {p.y})")
        seen.add((p.x, p.y))
    return {
        "rect": rect,
        "white": white,
        "black": black,
        "metadata": doc.get("metadata") or {},
    }


def to_configuration(doc: Any) -> Configuration:
    parsed = parse_document(doc)
    return Configuration(parsed["rect"], parsed["white"])


def to_position(doc: Any) -> GamePosition:
    parsed = parse_document(doc)
    if parsed["black"] is None:
        raise ConfigError("missing-black", "a game position needs black points")
    try:
        return GamePosition(parsed["rect"], parsed["white"], parsed["black"])
    except ValueError as exc:
        raise ConfigError("bad-position", str(exc)) from exc


def _pair(p: Point) -> list[str]:
    return [scalar_str(p.x), scalar_str(p.y)]


def document(
    rect: Rect,
    white,
    black=None,
    metadata: Optional[dict] = None,
) -> dict:
    """Serialize to a ConfigDocument (exact strings plus decimal mirrors)."""
    doc = {
        "rect": {
            "width": scalar_str(rect.width),
            "height": scalar_str(rect.height),
            "width_decimal": scalar_float(rect.width),
            "height_decimal": scalar_float(rect.height),
        },
        "white": [_pair(p) for p in white],
        "white_decimal": [[scalar_float(p.x), scalar_float(p.y)] for p in white],
    }
    if black is not None:
        doc["black"] = [_pair(p) for p in black]
        doc["black_decimal"] = [[scalar_float(p.x), scalar_float(p.y)] for p in black]
    if metadata:
        doc["metadata"] = metadata
    return doc


def configuration_document(cfg: Configuration, metadata: Optional[dict] = None) -> dict:
    return document(cfg.rect, cfg.points, metadata=metadata)
