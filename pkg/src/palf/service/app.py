"""HTTP front end.  Run with ``palf serve`` or point uvicorn at
``palf.service.app:app``."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from ..documents import PalfParseError
from . import operations as ops
from .models import (CompareRequest, CompareResponse, GenerateRequest,
                     GenerateResponse, HurwitzSearchRequest,
                     HurwitzSearchResponse, InvariantsRequest,
                     InvariantsResponse, MonodromyRequest, MonodromyResponse,
                     RelationsRequest, RelationsResponse, RenderRequest,
                     RenderResponse, ValidateRequest, ValidateResponse)


def _call(fn, *args, **kwargs):
    """Parse errors keep their structured handler; anything else the
    operations flag as bad input becomes a plain 400."""
    try:
        return fn(*args, **kwargs)
    except PalfParseError:
        raise
    except (ValueError, KeyError) as e:
        raise HTTPException(status_code=400, detail=str(e)) from e


def create_app() -> FastAPI:
    app = FastAPI(
        title="palf",
        description="Genus-zero positive allowable Lefschetz fibrations: "
                    "validation, invariants, monodromy, Hurwitz search, "
                    "datasets, rendering.",
        version="0.1.0",
    )

    @app.exception_handler(PalfParseError)
    async def _parse_error(request: Request, exc: PalfParseError):
        return JSONResponse(status_code=400, content={
            "detail": {"line": exc.line, "column": exc.column,
                       "message": exc.message}})

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok"}

    @app.post("/validate", response_model=ValidateResponse)
    async def validate(req: ValidateRequest):
        return _call(ops.validate_text, req.text)

    @app.post("/invariants", response_model=InvariantsResponse)
    async def invariants(req: InvariantsRequest):
        return _call(ops.invariants, req.text, req.palf)

    @app.post("/monodromy", response_model=MonodromyResponse)
    async def monodromy(req: MonodromyRequest):
        return _call(ops.monodromy, req.text, req.palf, req.show)

    @app.post("/compare", response_model=CompareResponse)
    async def compare(req: CompareRequest):
        return _call(ops.compare_texts, req.text_a, req.text_b,
                     req.palf_a, req.palf_b)

    @app.post("/hurwitz/search", response_model=HurwitzSearchResponse)
    async def hurwitz_search(req: HurwitzSearchRequest):
        return _call(ops.hurwitz_search, req.text_a, req.text_b, req.depth,
                     req.palf_a, req.palf_b, req.conjugation)

    @app.post("/datasets/generate", response_model=GenerateResponse)
    async def generate(req: GenerateRequest):
        return _call(ops.generate, req.which, req.m)

    @app.post("/relations/check", response_model=RelationsResponse)
    async def relations_check(req: RelationsRequest):
        return _call(ops.check_relation, req.kind, req.boundaries)

    @app.post("/render", response_model=RenderResponse)
    async def render(req: RenderRequest):
        return _call(ops.render_text, req.text, req.palf)

    return app


app = create_app()
