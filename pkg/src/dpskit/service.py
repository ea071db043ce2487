"""HTTP questionnaire service over a saved model artifact.

The artifact is immutable shared state; every request is answered from it
alone, so responses are deterministic (explanations use the artifact's fixed
seed) and concurrent identical requests return identical bodies. Validation
failures on answer content return 400 with the offending attribute index;
type-level failures (non-integer values) surface as 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import models
from .artifact import ModelArtifact
from .lime import LimeConfig, explain
from .questions import SCALE_MAX, SCALE_MIN


class PredictRequest(BaseModel):
    answers: dict[int, int]  # attribute_index -> Likert value
    explain: bool = True


def _predict_payload(artifact: ModelArtifact, req: PredictRequest) -> dict:
    served = artifact.model.feature_indices
    answers = req.answers

    for idx in served:
        if idx not in answers:
            raise HTTPException(status_code=400, detail=f"missing answer for attribute {idx}")
    for idx in answers:
        if idx not in served:
            raise HTTPException(status_code=400, detail=f"unexpected attribute {idx}")
    for idx in served:
        v = answers[idx]
        if not SCALE_MIN <= v <= SCALE_MAX:
            raise HTTPException(
                status_code=400,
                detail=f"answer {v} for attribute {idx} outside {SCALE_MIN}..{SCALE_MAX}",
            )

    x = [answers[idx] for idx in served]
    class_code = models.predict(artifact.model, x)
    proba_class1 = models.predict_proba(artifact.model, x)
    probability_divorced = proba_class1 if artifact.divorced_code == 1 else 1.0 - proba_class1

    payload = {
        "label": artifact.label_for(class_code),
        "class_code": class_code,
        "probability_divorced": probability_divorced,
        "explanation": None,
    }
    if req.explain:
        cfg = LimeConfig(
            num_features_out=min(10, len(served)),
            seed=artifact.lime_seed,
        )
        result = explain(artifact.model, x, artifact.perturbation_stats, cfg)
        payload["explanation"] = [
            {
                "attribute_index": e.attribute_index,
                "weight": e.weight,
                "instance_value": e.instance_value,
            }
            for e in result.entries
        ]
    return payload


def create_app(artifact: ModelArtifact, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="divorce predictor service")

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception) -> JSONResponse:
        # Never leak internals on unexpected failures.
        return JSONResponse(status_code=500, content={"detail": "internal server error"})

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/questions")
    def questions() -> list[dict]:
        return [
            {
                "attribute_index": idx,
                "text": text,
                "scale": {"min": SCALE_MIN, "max": SCALE_MAX},
            }
            for idx, text in artifact.questions
        ]

    @app.get("/api/model")
    def model_metadata() -> dict:
        spec = artifact.model.spec
        return {
            "schema_version": artifact.schema_version,
            "created_at": artifact.created_at,
            "algorithm": spec.algorithm,
            "hyperparameters": spec.hyperparameters,
            "standardize": spec.standardize,
            "feature_indices": list(artifact.model.feature_indices),
            "divorced_code": artifact.divorced_code,
            "training_summary": artifact.training_summary,
        }

    @app.post("/api/predict")
    def predict(req: PredictRequest) -> dict:
        return _predict_payload(artifact, req)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    return app


def serve(artifact: ModelArtifact, port: int, host: str = "127.0.0.1", static_dir: str | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(artifact, static_dir=static_dir), host=host, port=port)
