"""Command line interface.

All subcommands read and write ConfigDocument JSON (stdin/stdout friendly)
and report failures as machine-readable JSON on stderr:

    exit 3  malformed JSON input
    exit 4  invalid geometry (bad rect, duplicate or out-of-rect points)
    exit 5  domain errors (unknown block, rho out of range, ...)
    exit 1  negative verification result (e.g. `balance` on an unbalanced set)
"""

from __future__ import annotations

import json
import os
import sys

import click

from .scalars import Q, scalar_float, scalar_str, to_scalar
from .geometry import Rect, TiePolicy, voronoi_diagram
from . import balance as bal
from . import game as g
from .config_io import ConfigError, configuration_document, document, parse_document
from .svg import diagram_svg

EXIT_BAD_JSON = 3
EXIT_BAD_GEOMETRY = 4
EXIT_DOMAIN = 5


def _fail(code: str, message: str, exit_code: int):
    click.echo(json.dumps({"code": code, "message": message}), err=True)
    sys.exit(exit_code)


def _read_doc(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _fail("bad-json", str(exc), EXIT_BAD_JSON)


def _parse(doc: dict) -> dict:
    try:
        return parse_document(doc)
    except ConfigError as exc:
        _fail(exc.code, exc.message, EXIT_BAD_GEOMETRY)


def _emit(obj):
    click.echo(json.dumps(obj, indent=2))


def _score_json(sc: g.Score) -> dict:
    return {
        "white": scalar_str(sc.white_area),
        "black": scalar_str(sc.black_area),
        "neutral": scalar_str(sc.neutral_area),
        "white_decimal": scalar_float(sc.white_area),
        "black_decimal": scalar_float(sc.black_area),
        "neutral_decimal": scalar_float(sc.neutral_area),
        "winner": sc.winner.value,
    }


@click.group()
def main():
    """Manhattan Voronoi diagrams, balanced point sets and the one-round
    placement game."""


@main.command()
@click.option("--input", "path", default="-", show_default=True)
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False))
@click.option("--json", "json_path", type=click.Path(dir_okay=False))
@click.option("--tie", type=click.Choice(["neutral", "award-horizontal"]), default="neutral")
def diagram(path, svg_path, json_path, tie):
    """Exact Voronoi diagram of the white points."""
    parsed = _parse(_read_doc(path))
    policy = TiePolicy(tie)
    dia = voronoi_diagram(parsed["white"], parsed["rect"], policy)
    cells = []
    for site, cell in zip(dia.sites, dia.cells):
        cells.append(
            {
                "site": [scalar_str(site.x), scalar_str(site.y)],
                "area": scalar_str(cell.area()),
                "area_decimal": scalar_float(cell.area()),
                "vertices": [
                    [[scalar_str(v.x), scalar_str(v.y)] for v in comp.vertices]
                    for comp in cell.components()
                ],
            }
        )
    out = {
        "rect": {"width": scalar_str(parsed["rect"].width), "height": scalar_str(parsed["rect"].height)},
        "tie": tie,
        "cells": cells,
        "neutral_area": scalar_str(dia.neutral_area()),
        "neutral": [
            [[scalar_str(v.x), scalar_str(v.y)] for v in comp.vertices]
            for region in dia.neutral_regions
            for comp in region.components()
        ],
    }
    if json_path:
        with open(json_path, "w") as fh:
            json.dump(out, fh, indent=2)
    if svg_path:
        with open(svg_path, "w") as fh:
            fh.write(diagram_svg(dia))
    if not json_path and not svg_path:
        _emit(out)


@main.command()
@click.option("--input", "path", default="-", show_default=True)
def balance(path):
    """Check the exact balance of the white points; exit 0 iff balanced."""
    parsed = _parse(_read_doc(path))
    cfg = bal.Configuration(parsed["rect"], parsed["white"])
    report = bal.is_balanced(cfg)
    _emit(
        {
            "balanced": report.is_balanced,
            "target": scalar_str(report.target),
            "worst_deviation": scalar_str(report.worst_deviation),
            "half_areas": [
                {k: scalar_str(v) for k, v in areas.items()} for areas in report.half_areas
            ],
        }
    )
    sys.exit(0 if report.is_balanced else 1)


@main.command()
@click.argument("name")
@click.option("--rho", default=None, help="strip width for R2, as p/q")
@click.option("--rows", type=int, default=None)
@click.option("--cols", type=int, default=None)
def atomic(name, rho, rows, cols):
    """Emit a named balanced block (R2 --rho, R3, R3', R4, R5, or grid)."""
    try:
        if name == "grid":
            if not rows or not cols:
                _fail("missing-parameter", "grid needs --rows and --cols", EXIT_DOMAIN)
            rect = Rect(Q(cols), Q(rows)) if rho is None else Rect(to_scalar(rho), 1)
            cfg = bal.make_grid(rows, cols, rect)
            _emit(configuration_document(cfg, metadata={"name": f"grid {rows}x{cols}"}))
            return
        block = bal.atomic(name, rho=rho)
    except ValueError as exc:
        _fail("bad-block", str(exc), EXIT_DOMAIN)
    _emit(document(block.rect, block.points, metadata={"name": block.name}))


@main.command()
@click.argument("blocks", nargs=-1, required=True)
def concat(blocks):
    """Concatenate named blocks (e.g. R3 R3' R5) into a balanced strip."""
    try:
        parts = []
        for spec in blocks:
            if spec.startswith("R2:"):
                parts.append(bal.atomic("R2", rho=spec.split(":", 1)[1]))
            else:
                parts.append(bal.atomic(spec))
        cfg = bal.concatenate(parts)
    except ValueError as exc:
        _fail("bad-block", str(exc), EXIT_DOMAIN)
    _emit(configuration_document(cfg, metadata={"name": "+".join(blocks)}))


@main.command()
@click.argument("bits")
def encode(bits):
    """Encode a 0-1 string as a balanced strip configuration."""
    try:
        cfg = bal.encode_binary_string(bits)
    except ValueError as exc:
        _fail("bad-string", str(exc), EXIT_DOMAIN)
    _emit(configuration_document(cfg, metadata={"name": f"encode {bits}"}))


@main.group()
def game():
    """Score positions, compute replies, decide the winner."""


@game.command()
@click.option("--input", "path", default="-", show_default=True)
def score(path):
    """Exact score of a finished position (white and black points)."""
    parsed = _parse(_read_doc(path))
    if parsed["black"] is None:
        _fail("missing-black", "score needs black points", EXIT_BAD_GEOMETRY)
    try:
        pos = g.GamePosition(parsed["rect"], parsed["white"], parsed["black"])
    except ValueError as exc:
        _fail("bad-position", str(exc), EXIT_BAD_GEOMETRY)
    _emit(_score_json(g.score(pos)))


@game.command()
@click.option("--input", "path", default="-", show_default=True)
@click.option("--resolution", type=int, default=16, show_default=True)
def respond(path, resolution):
    """Black's best constructive reply to the white points."""
    parsed = _parse(_read_doc(path))
    cfg = bal.Configuration(parsed["rect"], parsed["white"])
    outcome = g.black_best_response(cfg, params=g.SearchParams(lattice_resolution=resolution))
    _emit(
        {
            "certificate": outcome.certificate.value,
            "black": [[scalar_str(p.x), scalar_str(p.y)] for p in outcome.black],
            "black_decimal": [[scalar_float(p.x), scalar_float(p.y)] for p in outcome.black],
            "score": _score_json(outcome.score),
        }
    )


@game.command()
@click.option("--n", type=int, required=True)
@click.option("--rho", required=True, help="aspect ratio, as p/q")
def verdict(n, rho):
    """Who wins with optimal play in a 1 x rho rectangle."""
    try:
        winner = g.verdict(n, to_scalar(rho))
    except ValueError as exc:
        _fail("bad-parameter", str(exc), EXIT_DOMAIN)
    _emit({"n": n, "rho": rho, "winner": winner.value})


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--resolution", type=int, default=32, show_default=True)
@click.option("--tol", default=None, help="certification tolerance, as p/q")
@click.option("--seed", type=int, default=0, show_default=True)
def search(n, resolution, tol, seed):
    """Search for balanced non-grid configurations of n points."""
    try:
        hits = bal.search_balanced_nongrid(
            n, resolution=resolution, tol=None if tol is None else to_scalar(tol), seed=seed
        )
    except ValueError as exc:
        _fail("bad-parameter", str(exc), EXIT_DOMAIN)
    _emit(
        [
            {
                "rho": hit.rho,
                "points": [[scalar_str(p.x), scalar_str(p.y)] for p in hit.configuration.points],
                "deviation": hit.deviation,
            }
            for hit in hits
        ]
    )


@main.command()
@click.option("--port", type=int, default=None)
@click.option("--host", default=None)
def serve(port, host):
    """Run the HTTP JSON service (MVG_PORT / MVG_HOST override defaults)."""
    import uvicorn

    from .api import app

    port = port if port is not None else int(os.environ.get("MVG_PORT", "8000"))
    host = host if host is not None else os.environ.get("MVG_HOST", "127.0.0.1")
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
