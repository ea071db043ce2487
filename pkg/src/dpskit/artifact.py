"""JSON persistence for trained models.

An artifact bundles everything the service needs to answer requests without
the raw dataset: the model parameters, scaler statistics, the served question
subset, perturbation statistics for explanations, and a fixed explanation
seed. Floats survive the JSON round trip exactly (repr-based encoding), so a
reloaded model reproduces the original's predictions bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

from .data import ScalerStats
from .lime import PerturbationStats, build_perturbation_stats
from .models import (
    CARTParams,
    KNNParams,
    LDAParams,
    LRParams,
    ModelSpec,
    NBParams,
    SVMParams,
    TrainedModel,
    TreeLeaf,
    TreeSplit,
)
from .models.base import DimensionMismatchError
from .questions import question_catalog

SCHEMA_VERSION = 1
ARTIFACT_SUFFIX = ".dps.json"


class SchemaMismatchError(ValueError):
    pass


class CorruptArtifactError(ValueError):
    pass


@dataclass(frozen=True)
class ModelArtifact:
    schema_version: int
    created_at: str  # ISO 8601 UTC
    model: TrainedModel
    questions: tuple[tuple[int, str], ...]  # (attribute_index, text) per served feature
    perturbation_stats: PerturbationStats
    lime_seed: int
    divorced_code: int  # class code presented as "divorced"
    training_summary: dict

    def __post_init__(self):
        if self.schema_version != SCHEMA_VERSION:
            raise SchemaMismatchError(
                f"schema_version {self.schema_version}, supported {SCHEMA_VERSION}"
            )
        if len(self.questions) != len(self.model.feature_indices):
            raise CorruptArtifactError(
                f"{len(self.questions)} questions for "
                f"{len(self.model.feature_indices)} feature indices"
            )
        if self.perturbation_stats.feature_count != len(self.model.feature_indices):
            raise CorruptArtifactError("perturbation stats width does not match the model")
        if self.divorced_code not in (0, 1):
            raise CorruptArtifactError(f"divorced_code {self.divorced_code} not in {{0, 1}}")

    def label_for(self, class_code: int) -> str:
        return "divorced" if class_code == self.divorced_code else "married"


def make_artifact(
    model: TrainedModel,
    train_data,
    cv_mean_accuracy: float | None = None,
    lime_seed: int = 0,
    divorced_code: int = 1,
) -> ModelArtifact:
    """Bundle a model with serving metadata.

    train_data must already be projected to the model's feature subset; its
    rows feed the embedded perturbation statistics.
    """
    if train_data.attribute_count != len(model.feature_indices):
        raise DimensionMismatchError(
            f"training data width {train_data.attribute_count} does not match "
            f"{len(model.feature_indices)} model features"
        )
    catalog = question_catalog()
    questions = tuple((idx, catalog.text(idx)) for idx in model.feature_indices)
    summary = {"n_train": len(train_data), "cv_mean_accuracy": cv_mean_accuracy}
    return ModelArtifact(
        schema_version=SCHEMA_VERSION,
        created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        model=model,
        questions=questions,
        perturbation_stats=build_perturbation_stats(train_data),
        lime_seed=lime_seed,
        divorced_code=divorced_code,
        training_summary=summary,
    )


def _tree_to_json(node):
    if isinstance(node, TreeLeaf):
        return {"kind": "leaf", "class_counts": list(node.class_counts)}
    return {
        "kind": "split",
        "feature": node.feature,
        "threshold": node.threshold,
        "left": _tree_to_json(node.left),
        "right": _tree_to_json(node.right),
    }


def _tree_from_json(doc):
    if doc["kind"] == "leaf":
        c0, c1 = doc["class_counts"]
        return TreeLeaf(class_counts=(int(c0), int(c1)))
    return TreeSplit(
        feature=int(doc["feature"]),
        threshold=float(doc["threshold"]),
        left=_tree_from_json(doc["left"]),
        right=_tree_from_json(doc["right"]),
    )


def _params_to_json(algorithm: str, params) -> dict:
    if algorithm == "cart":
        return {"root": _tree_to_json(params.root), "n_features": params.n_features}
    return asdict(params)


def _pairs(rows):
    return tuple(tuple(float(v) for v in row) for row in rows)


def _params_from_json(algorithm: str, doc: dict):
    if algorithm == "lr":
        return LRParams(
            weights=tuple(float(v) for v in doc["weights"]),
            bias=float(doc["bias"]),
            n_iter=int(doc["n_iter"]),
            converged=bool(doc["converged"]),
        )
    if algorithm == "lda":
        return LDAParams(
            class_means=_pairs(doc["class_means"]),
            chol_lower=_pairs(doc["chol_lower"]),
            log_priors=tuple(float(v) for v in doc["log_priors"]),
            ridge_lambda=float(doc["ridge_lambda"]),
        )
    if algorithm == "knn":
        return KNNParams(
            train_rows=_pairs(doc["train_rows"]),
            train_labels=tuple(int(v) for v in doc["train_labels"]),
            k=int(doc["k"]),
        )
    if algorithm == "cart":
        return CARTParams(root=_tree_from_json(doc["root"]), n_features=int(doc["n_features"]))
    if algorithm == "nb":
        return NBParams(
            class_means=_pairs(doc["class_means"]),
            class_variances=_pairs(doc["class_variances"]),
            log_priors=tuple(float(v) for v in doc["log_priors"]),
            smoothing=float(doc["smoothing"]),
        )
    return SVMParams(
        support_vectors=_pairs(doc["support_vectors"]),
        dual_coef=tuple(float(v) for v in doc["dual_coef"]),
        bias=float(doc["bias"]),
        C=float(doc["C"]),
        platt_a=float(doc["platt_a"]),
        platt_b=float(doc["platt_b"]),
    )


def save_model(artifact: ModelArtifact, path: str) -> None:
    model = artifact.model
    doc = {
        "schema_version": artifact.schema_version,
        "created_at": artifact.created_at,
        "spec": {
            "algorithm": model.spec.algorithm,
            "hyperparameters": model.spec.hyperparameters,
            "standardize": model.spec.standardize,
        },
        "params": _params_to_json(model.spec.algorithm, model.params),
        "scaler": None if model.scaler is None else asdict(model.scaler),
        "feature_indices": list(model.feature_indices),
        "questions": [[idx, text] for idx, text in artifact.questions],
        "perturbation_stats": [list(row) for row in artifact.perturbation_stats.probabilities],
        "lime_seed": artifact.lime_seed,
        "divorced_code": artifact.divorced_code,
        "training_summary": artifact.training_summary,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def load_model(path: str) -> ModelArtifact:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CorruptArtifactError(f"not valid JSON: {exc}") from None

    if not isinstance(doc, dict) or "schema_version" not in doc:
        raise CorruptArtifactError("missing schema_version")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaMismatchError(
            f"schema_version {doc['schema_version']}, supported {SCHEMA_VERSION}"
        )

    try:
        spec_doc = doc["spec"]
        spec = ModelSpec(
            algorithm=spec_doc["algorithm"],
            hyperparameters=dict(spec_doc["hyperparameters"]),
            standardize=bool(spec_doc["standardize"]),
        )
        scaler_doc = doc["scaler"]
        scaler = (
            None
            if scaler_doc is None
            else ScalerStats(
                means=tuple(float(v) for v in scaler_doc["means"]),
                stds=tuple(float(v) for v in scaler_doc["stds"]),
            )
        )
        model = TrainedModel(
            spec=spec,
            scaler=scaler,
            feature_indices=tuple(int(i) for i in doc["feature_indices"]),
            params=_params_from_json(spec.algorithm, doc["params"]),
        )
        return ModelArtifact(
            schema_version=doc["schema_version"],
            created_at=str(doc["created_at"]),
            model=model,
            questions=tuple((int(i), str(t)) for i, t in doc["questions"]),
            perturbation_stats=PerturbationStats(
                probabilities=tuple(tuple(float(p) for p in row) for row in doc["perturbation_stats"])
            ),
            lime_seed=int(doc["lime_seed"]),
            divorced_code=int(doc["divorced_code"]),
            training_summary=dict(doc["training_summary"]),
        )
    except (SchemaMismatchError, CorruptArtifactError):
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CorruptArtifactError(f"invalid artifact field: {exc}") from exc
