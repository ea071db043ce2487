"""Shared pieces for the classifier implementations."""

from __future__ import annotations

import numpy as np

from ..data import ScalerStats


class SingleClassTrainingError(ValueError):
    """Training data contains only one class."""


class DimensionMismatchError(ValueError):
    """Input width does not match what the model was trained on."""


class NonConvergenceWarning(UserWarning):
    """An iterative fit hit its iteration cap; the best iterate is kept."""

    def __init__(self, algorithm: str, iterations: int):
        self.algorithm = algorithm
        self.iterations = iterations
        super().__init__(f"{algorithm}: no convergence after {iterations} iterations")


def validate_training_data(X: np.ndarray, y: np.ndarray) -> None:
    if X.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D instance matrix, got ndim={X.ndim}")
    if X.shape[0] != y.shape[0]:
        raise DimensionMismatchError(
            f"{X.shape[0]} instances but {y.shape[0]} labels"
        )
    classes = set(np.unique(y).tolist())
    if not classes <= {0, 1}:
        raise ValueError(f"labels must be in {{0, 1}}, got {sorted(classes)}")
    if len(classes) < 2:
        raise SingleClassTrainingError("need at least one instance of each class")


def fit_scaler(X: np.ndarray) -> ScalerStats:
    """Column means and population stds of a raw matrix (zero std stored as 1)."""
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds = np.where(stds > 0.0, stds, 1.0)
    return ScalerStats(means=tuple(means.tolist()), stds=tuple(stds.tolist()))


def apply_scaler(scaler: ScalerStats | None, X: np.ndarray) -> np.ndarray:
    if scaler is None:
        return X
    return (X - np.asarray(scaler.means)) / np.asarray(scaler.stds)
