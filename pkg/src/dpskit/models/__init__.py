"""Six binary classifiers behind one fit/predict/probability contract.

Every algorithm is implemented in this package from first principles; the
only numerics dependency is numpy/scipy linear algebra. A TrainedModel is an
immutable bundle of its ModelSpec, optional scaler statistics, the 1-based
attribute indices the model was fit on, and the algorithm parameters, so it
can be shipped around and served without keeping any training state alive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

import numpy as np

from ..data import ScalerStats
from . import cart as _cart
from . import knn as _knn
from . import lda as _lda
from . import logistic as _logistic
from . import naive_bayes as _nb
from . import svm as _svm
from .base import (
    DimensionMismatchError,
    NonConvergenceWarning,
    SingleClassTrainingError,
    apply_scaler,
    fit_scaler,
    validate_training_data,
)
from .cart import CARTParams, TreeLeaf, TreeSplit
from .knn import KNNParams
from .lda import LDAParams
from .logistic import LRParams
from .naive_bayes import NBParams
from .svm import SVMParams

ALGORITHMS = ("lr", "lda", "knn", "cart", "nb", "svm")

HYPERPARAM_DEFAULTS: dict[str, dict[str, Any]] = {
    "lr": {"learning_rate": 0.1, "l2": 1e-4, "max_iter": 2000, "tol": 1e-8},
    "lda": {"ridge_scale": 1e-3},
    "knn": {"k": 5},
    "cart": {"min_samples_split": 2},
    "nb": {"var_smoothing": 1e-9},
    "svm": {"C": 1.0, "tol": 1e-3, "max_passes": 100},
}

# Gradient descent and SMO assume comparable feature scales; the rest run on
# raw answers.
STANDARDIZE_DEFAULTS = {
    "lr": True,
    "lda": False,
    "knn": False,
    "cart": False,
    "nb": False,
    "svm": True,
}

_POSITIVE = ("learning_rate", "tol", "C")
_NON_NEGATIVE = ("l2", "ridge_scale", "var_smoothing")
_COUNT_MINIMUMS = {"max_iter": 1, "k": 1, "min_samples_split": 2, "max_passes": 1}

Params = Union[LRParams, LDAParams, KNNParams, CARTParams, NBParams, SVMParams]


def _check_hyperparameters(algorithm: str, hp: dict[str, Any]) -> None:
    unknown = set(hp) - set(HYPERPARAM_DEFAULTS[algorithm])
    if unknown:
        raise ValueError(f"unknown hyperparameters for {algorithm}: {sorted(unknown)}")
    for name, value in hp.items():
        if name in _COUNT_MINIMUMS:
            low = _COUNT_MINIMUMS[name]
            if not isinstance(value, int) or value < low:
                raise ValueError(f"{name} must be an integer >= {low}, got {value!r}")
        elif name in _POSITIVE:
            if not value > 0:
                raise ValueError(f"{name} must be > 0, got {value!r}")
        elif name in _NON_NEGATIVE:
            if value < 0:
                raise ValueError(f"{name} must be >= 0, got {value!r}")


@dataclass(frozen=True)
class ModelSpec:
    """Algorithm choice plus hyperparameters; omitted values take the defaults."""

    algorithm: str
    hyperparameters: dict[str, Any] = field(default_factory=dict)
    standardize: bool | None = None

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}"
            )
        _check_hyperparameters(self.algorithm, self.hyperparameters)
        merged = {**HYPERPARAM_DEFAULTS[self.algorithm], **self.hyperparameters}
        object.__setattr__(self, "hyperparameters", merged)
        if self.standardize is None:
            object.__setattr__(self, "standardize", STANDARDIZE_DEFAULTS[self.algorithm])


@dataclass(frozen=True)
class TrainedModel:
    spec: ModelSpec
    scaler: ScalerStats | None
    feature_indices: tuple[int, ...]  # 1-based attribute indices, in input order
    params: Params


def fit(spec: ModelSpec, X, y, feature_indices=None) -> TrainedModel:
    """Train spec.algorithm on (X, y); deterministic for fixed spec and data."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    validate_training_data(X, y)

    if feature_indices is None:
        feature_indices = tuple(range(1, X.shape[1] + 1))
    else:
        feature_indices = tuple(int(i) for i in feature_indices)
        if len(feature_indices) != X.shape[1]:
            raise DimensionMismatchError(
                f"{len(feature_indices)} feature indices for {X.shape[1]} columns"
            )
        if len(set(feature_indices)) != len(feature_indices):
            raise ValueError("feature indices must be distinct")
        if any(i < 1 for i in feature_indices):
            raise ValueError("feature indices are 1-based")

    scaler = fit_scaler(X) if spec.standardize else None
    Xf = apply_scaler(scaler, X)
    hp = spec.hyperparameters
    if spec.algorithm == "lr":
        params: Params = _logistic.fit_logistic(Xf, y, **hp)
    elif spec.algorithm == "lda":
        params = _lda.fit_lda(Xf, y, **hp)
    elif spec.algorithm == "knn":
        params = _knn.fit_knn(Xf, y, **hp)
    elif spec.algorithm == "cart":
        params = _cart.fit_cart(Xf, y, **hp)
    elif spec.algorithm == "nb":
        params = _nb.fit_naive_bayes(Xf, y, **hp)
    else:
        params = _svm.fit_svm(Xf, y, **hp)
    return TrainedModel(spec=spec, scaler=scaler, feature_indices=feature_indices, params=params)


def _as_matrix(m: TrainedModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    single = X.ndim == 1
    if single:
        X = X[None, :]
    if X.ndim != 2 or X.shape[1] != len(m.feature_indices):
        raise DimensionMismatchError(
            f"expected width {len(m.feature_indices)}, got shape {X.shape}"
        )
    return apply_scaler(m.scaler, X)


def predict_proba_batch(m: TrainedModel, X) -> np.ndarray:
    """Class-1 probability for each row of X."""
    Xf = _as_matrix(m, X)
    if m.spec.algorithm == "lr":
        return _logistic.proba(m.params, Xf)
    if m.spec.algorithm == "lda":
        return _lda.proba(m.params, Xf)
    if m.spec.algorithm == "knn":
        return _knn.proba(m.params, Xf)
    if m.spec.algorithm == "cart":
        return _cart.proba(m.params, Xf)
    if m.spec.algorithm == "nb":
        return _nb.proba(m.params, Xf)
    return _svm.proba(m.params, Xf)


def predict_batch(m: TrainedModel, X) -> np.ndarray:
    """Class labels for each row of X; probability >= 0.5 maps to class 1,
    except that KNN vote ties and CART leaf-count ties resolve to class 0."""
    Xf = _as_matrix(m, X)
    if m.spec.algorithm == "knn":
        return _knn.classify(m.params, Xf)
    if m.spec.algorithm == "cart":
        return _cart.classify(m.params, Xf)
    return (predict_proba_batch(m, X) >= 0.5).astype(np.int64)


def predict_proba(m: TrainedModel, x) -> float:
    """Class-1 probability for a single answers vector."""
    return float(predict_proba_batch(m, np.asarray(x, dtype=np.float64).reshape(1, -1))[0])


def predict(m: TrainedModel, x) -> int:
    """Class label for a single answers vector."""
    return int(predict_batch(m, np.asarray(x, dtype=np.float64).reshape(1, -1))[0])
