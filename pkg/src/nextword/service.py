"""HTTP adapter around the predictor.

POST /api/predict {text, k?, prefix?} returns ranked suggestions;
GET /api/health reports model stats. The service is read-only over an
immutable in-process model, so concurrent requests need no locking and
identical requests produce identical bodies apart from elapsed_micros.
"""
from __future__ import annotations

import time
from pathlib import Path

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import EmptyModel, NextwordError
from .predict import BackoffConfig, PredictionRequest, suggest
from .storage import load_model

MAX_TEXT_BYTES = 4096


class PredictBody(BaseModel):
    text: str
    k: int | None = Field(default=None, ge=1)
    prefix: str | None = None


def create_app(model_dir: Path | str | None = None) -> FastAPI:
    """Build the app; a None model_dir serves 503s until restarted."""
    if model_dir is not None:
        model, manifest = load_model(Path(model_dir))
        model.successors(())  # build the successor index before traffic
        model.unigrams_by_count()
    else:
        model, manifest = None, None
    backoff = BackoffConfig()

    app = FastAPI(title="nextword", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(RequestValidationError)
    async def malformed(request, exc):
        return JSONResponse({"detail": "malformed request"}, status_code=400)

    def unavailable() -> JSONResponse:
        return JSONResponse({"detail": "no model loaded"}, status_code=503)

    @app.get("/api/health")
    async def health():
        if model is None:
            return unavailable()
        return JSONResponse({
            "status": "ok",
            "model_id": manifest.model_id,
            "orders": model.max_order,
            "vocab_size": len(model.vocabulary()),
            "script_mode": model.norm_config.script_mode,
        })

    @app.post("/api/predict")
    async def predict(body: PredictBody):
        if model is None:
            return unavailable()
        if len(body.text.encode("utf-8")) > MAX_TEXT_BYTES:
            return JSONResponse({"detail": "text too large"},
                                status_code=400)
        started = time.perf_counter()
        request = PredictionRequest(context_text=body.text, k=body.k,
                                    prefix=body.prefix)
        try:
            suggestions = suggest(model, request, backoff)
        except EmptyModel:
            return unavailable()
        except NextwordError as exc:
            return JSONResponse({"detail": str(exc)}, status_code=400)
        elapsed = int((time.perf_counter() - started) * 1_000_000)
        # plain JSONResponse: the payload is primitives, skip the encoder
        return JSONResponse({
            "suggestions": [
                {"word": s.word, "score": s.score,
                 "matched_order": s.matched_order}
                for s in suggestions
            ],
            "model_id": manifest.model_id,
            "elapsed_micros": elapsed,
        })

    return app
