"""Stateless HTTP JSON service.

Bodies mirror the ConfigDocument schema; every response carries exact
rationals as strings with decimal mirrors for display.  Invalid geometry
is a 400, unsupported parameters are a 422, both as {code, message}.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from .scalars import Q, scalar_float, scalar_str, to_scalar
from .geometry import Rect, TiePolicy, voronoi_diagram
from . import balance as bal
from . import game as g
from .config_io import ConfigError, parse_document
from .svg import diagram_svg

app = FastAPI(title="manhattan-voronoi", version="1.0")


class DomainError(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        self.message = message


@app.exception_handler(ConfigError)
async def _config_error(_req: Request, exc: ConfigError):
    return JSONResponse(status_code=400, content={"code": exc.code, "message": exc.message})


@app.exception_handler(DomainError)
async def _domain_error(_req: Request, exc: DomainError):
    return JSONResponse(status_code=422, content={"code": exc.code, "message": exc.message})


def _scalar_pair(value):
    return {"exact": scalar_str(value), "decimal": scalar_float(value)}


def _points_json(points):
    return {
        "exact": [[scalar_str(p.x), scalar_str(p.y)] for p in points],
        "decimal": [[scalar_float(p.x), scalar_float(p.y)] for p in points],
    }


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


def _diagram_json(dia) -> dict:
    return {
        "rect": {
            "width": scalar_str(dia.rect.width),
            "height": scalar_str(dia.rect.height),
        },
        "cells": [
            {
                "site": [scalar_str(site.x), scalar_str(site.y)],
                "site_decimal": [scalar_float(site.x), scalar_float(site.y)],
                "area": _scalar_pair(cell.area()),
                "vertices": [
                    [[scalar_str(v.x), scalar_str(v.y)] for v in comp.vertices]
                    for comp in cell.components()
                ],
                "vertices_decimal": [
                    [[scalar_float(v.x), scalar_float(v.y)] for v in comp.vertices]
                    for comp in cell.components()
                ],
            }
            for site, cell in zip(dia.sites, dia.cells)
        ],
        "neutral_area": _scalar_pair(dia.neutral_area()),
        "neutral": [
            [[scalar_float(v.x), scalar_float(v.y)] for v in comp.vertices]
            for region in dia.neutral_regions
            for comp in region.components()
        ],
    }


@app.post("/api/diagram")
async def post_diagram(body: dict, tie: str = Query("neutral")):
    parsed = parse_document(body)
    if tie not in ("neutral", "award-horizontal"):
        raise DomainError("bad-tie", f"unsupported tie policy {tie!r}")
    sites = parsed["white"] + (parsed["black"] or ())
    dia = voronoi_diagram(sites, parsed["rect"], TiePolicy(tie))
    out = _diagram_json(dia)
    out["svg"] = diagram_svg(
        dia, colors=["white"] * len(parsed["white"]) + ["black"] * len(parsed["black"] or ())
    )
    return out


@app.post("/api/score")
async def post_score(body: dict):
    parsed = parse_document(body)
    if parsed["black"] is None:
        raise ConfigError("missing-black", "a game position needs black points")
    try:
        pos = g.GamePosition(parsed["rect"], parsed["white"], parsed["black"])
    except ValueError as exc:
        raise ConfigError("bad-position", str(exc))
    return _score_json(g.score(pos))


@app.post("/api/respond")
async def post_respond(body: dict, resolution: int = Query(16, ge=2, le=64)):
    parsed = parse_document(body)
    cfg = bal.Configuration(parsed["rect"], parsed["white"])
    outcome = g.black_best_response(cfg, params=g.SearchParams(lattice_resolution=resolution))
    sites = tuple(parsed["white"]) + outcome.black
    dia = voronoi_diagram(sites, parsed["rect"], g._mixed_policy(len(parsed["white"])))
    return {
        "certificate": outcome.certificate.value,
        "black": _points_json(outcome.black),
        "score": _score_json(outcome.score),
        "diagram": _diagram_json(dia),
        "svg": diagram_svg(
            dia, colors=["white"] * len(parsed["white"]) + ["black"] * len(outcome.black)
        ),
    }


@app.post("/api/balance")
async def post_balance(body: dict):
    parsed = parse_document(body)
    cfg = bal.Configuration(parsed["rect"], parsed["white"])
    report = bal.is_balanced(cfg)
    return {
        "balanced": report.is_balanced,
        "target": _scalar_pair(report.target),
        "worst_deviation": _scalar_pair(report.worst_deviation),
        "half_areas": [
            {k: _scalar_pair(v) for k, v in areas.items()} for areas in report.half_areas
        ],
        "diagram": _diagram_json(report.diagram),
    }


@app.get("/api/atomic/{name}")
async def get_atomic(name: str, rho: str | None = None, rows: int | None = None, cols: int | None = None):
    try:
        if name == "grid":
            if not rows or not cols:
                raise DomainError("missing-parameter", "grid needs rows and cols")
            rect = Rect(Q(cols), Q(rows)) if rho is None else Rect(to_scalar(rho), 1)
            cfg = bal.make_grid(rows, cols, rect)
            return {
                "name": f"grid {rows}x{cols}",
                "rect": {"width": scalar_str(cfg.rect.width), "height": scalar_str(cfg.rect.height)},
                "white": _points_json(cfg.points),
            }
        block = bal.atomic(name, rho=rho)
    except ValueError as exc:
        raise DomainError("bad-block", str(exc))
    return {
        "name": block.name,
        "rect": {"width": scalar_str(block.rect.width), "height": scalar_str(block.rect.height)},
        "white": _points_json(block.points),
    }


@app.get("/api/verdict")
async def get_verdict(n: int, rho: str):
    try:
        winner = g.verdict(n, to_scalar(rho))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError("bad-parameter", str(exc))
    return {"n": n, "rho": rho, "winner": winner.value}
