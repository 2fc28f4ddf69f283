"""HTTP service exposing the library: group data, classification,
enumeration, stroke replication, tilings, and mesh reports.

All handlers call pure library code; identical requests produce identical
responses.  Cross-origin requests are allowed from anywhere unless an
explicit origin list is given (the drawing client usually runs on another
port).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np
from fastapi import FastAPI, HTTPException, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import euler, hyperbolic, isometry, notation, polyhedron

__all__ = ["create_app", "serve"]

MAX_TILE_ORDER = 12
MAX_TILE_DEPTH = 6


def _chi_json(chi: Fraction) -> dict:
    return {"num": chi.numerator, "den": chi.denominator}


def _group_descriptor(sig_text: str) -> dict:
    sig = notation.parse(sig_text)
    group = isometry.group_for(sig)
    name = euler.conway_name(sig)
    assert name is not None
    return {
        "signature": sig_text,
        "name": name.full,
        "chi": _chi_json(euler.euler_characteristic(sig)),
        "point_group_order": group.point_group_order,
        "lattice": [[float(x) for x in vec] for vec in group.lattice],
    }


def _stroke_arrays(strokes: Sequence["StrokeModel"]) -> list[np.ndarray]:
    return [np.asarray(s.points, dtype=float) for s in strokes]


def _stroke_json(strokes: Sequence[np.ndarray]) -> list[dict]:
    return [{"points": [[float(x), float(y)] for x, y in stroke]} for stroke in strokes]


class StrokeModel(BaseModel):
    points: list[tuple[float, float]]


class ViewportModel(BaseModel):
    xmin: float
    ymin: float
    xmax: float
    ymax: float


class ReplicateRequestModel(BaseModel):
    signature: str
    cell_scale: float = 1.0
    strokes: list[StrokeModel]
    viewport: ViewportModel


def create_app(allowed_origins: Sequence[str] | None = None) -> FastAPI:
    """Build the application; ``allowed_origins`` restricts CORS if given."""
    app = FastAPI(title="orbifold service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(allowed_origins) if allowed_origins else ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/groups")
    def groups() -> list[dict]:
        return [_group_descriptor(text) for text in isometry.EUCLIDEAN_SIGNATURES]

    @app.get("/api/classify")
    def classify(sig: str) -> dict:
        try:
            parsed = notation.parse(sig)
            chi = euler.euler_characteristic(parsed)
            geo = euler.classify(parsed)
            name = euler.conway_name(parsed)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "chi": _chi_json(chi),
            "class": geo.kind,
            "order": geo.order,
            "name": name.full if name else None,
        }

    @app.get("/api/enumerate")
    def enumerate_groups(
        kind: str | None = Query(default=None, alias="class"),
        max_order: str | None = None,
        chi_min: str | None = None,
        chi_max: str | None = None,
    ) -> dict:
        if kind == "euclidean":
            sigs = euler.enumerate_euclidean()
        elif kind == "spherical":
            if max_order is None:
                raise HTTPException(status_code=400, detail="spherical enumeration needs max_order")
            try:
                sigs = euler.enumerate_spherical(int(max_order))
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        elif kind == "hyperbolic":
            try:
                lo = Fraction(chi_min or "")
                hi = Fraction(chi_max or "")
                order_cap = int(max_order or "")
            except (ValueError, ZeroDivisionError):
                raise HTTPException(
                    status_code=400,
                    detail="hyperbolic enumeration needs chi_min, chi_max, max_order",
                )
            try:
                sigs = euler.enumerate_by_chi(lo, hi, order_cap)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        else:
            raise HTTPException(
                status_code=400, detail="class must be euclidean, spherical, or hyperbolic"
            )
        texts = sorted(notation.to_string(s) for s in sigs)
        return {"class": kind, "count": len(texts), "signatures": texts}

    @app.post("/api/replicate")
    def replicate(req: ReplicateRequestModel) -> dict:
        try:
            group = isometry.group_for(req.signature, cell_scale=req.cell_scale)
            view = isometry.Viewport(
                req.viewport.xmin, req.viewport.ymin, req.viewport.xmax, req.viewport.ymax
            )
            images = isometry.replicate(group, _stroke_arrays(req.strokes), view)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"strokes": _stroke_json(images)}

    @app.get("/api/tile")
    def tile(p: int, q: int, r: int, depth: int) -> Response:
        for label, value in (("p", p), ("q", q), ("r", r)):
            if not 2 <= value <= MAX_TILE_ORDER:
                raise HTTPException(
                    status_code=400, detail=f"{label} must be between 2 and {MAX_TILE_ORDER}"
                )
        if not 0 <= depth <= MAX_TILE_DEPTH:
            raise HTTPException(
                status_code=400, detail=f"depth must be between 0 and {MAX_TILE_DEPTH}"
            )
        try:
            tiles = hyperbolic.triangle_tiling(p, q, r, depth)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        svg = hyperbolic.render_tiling_svg(tiles)
        return Response(content=svg, media_type="image/svg+xml")

    @app.post("/api/polyhedron/report")
    async def polyhedron_report(request: Request) -> dict:
        body = await request.body()
        try:
            surface = polyhedron.load_off(body.decode("utf-8", errors="strict"))
            report = polyhedron.total_defect(surface)
        except (ValueError, UnicodeDecodeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {
            "V": surface.vertex_count,
            "E": surface.edge_count,
            "F": surface.face_count,
            "chi": report.euler,
            "total_defect": report.total,
            "expected_total": report.expected_total,
            "discrepancy": report.discrepancy,
            "vertex_defects": list(report.vertex_defects),
        }

    return app


def serve(port: int = 8000, host: str = "127.0.0.1", allowed_origins: Sequence[str] | None = None):
    """Run the service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(allowed_origins), host=host, port=port)
