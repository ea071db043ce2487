"""Stratified k-fold cross-validation and classification metrics.

Fold assignment is a greedy deal: each class's instances are shuffled with the
run seed, then handed one at a time to the currently smallest fold (ties to
the lower fold id). That keeps fold sizes within 1 of each other and per-fold
class counts within 1 of proportionality, deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import models
from .data import Dataset


class TooFewInstancesError(ValueError):
    pass


class TooFewPerClassError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


class EmptyInputError(ValueError):
    pass


class FoldFitError(RuntimeError):
    """A per-fold fit failed; carries the fold id and the original error."""

    def __init__(self, fold_id: int, cause: Exception):
        self.fold_id = fold_id
        super().__init__(f"fit failed on fold {fold_id}: {cause}")


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: tuple[int, ...]  # per-instance fold id in 0..k-1
    seed: int
    stratified: bool


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class MacroMetrics:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class MetricsReport:
    confusion: tuple[tuple[int, int], tuple[int, int]]  # [actual][predicted]
    accuracy: float
    error: float
    per_class: tuple[ClassMetrics, ClassMetrics]
    macro_avg: MacroMetrics


@dataclass(frozen=True)
class CrossValReport:
    per_fold: tuple[MetricsReport, ...]
    mean_accuracy: float
    std_accuracy: float
    mean_error: float


def kfold_plan(n: int, labels, k: int, seed: int) -> FoldPlan:
    """Stratified fold assignment for n instances with the given labels."""
    if k < 2:
        raise TooFewInstancesError(f"k must be >= 2, got {k}")
    if n < k:
        raise TooFewInstancesError(f"cannot make {k} folds from {n} instances")
    labels = np.asarray(labels, dtype=np.int64)
    if len(labels) != n:
        raise LengthMismatchError(f"{len(labels)} labels for {n} instances")

    classes = sorted(set(labels.tolist()))
    for c in classes:
        # With fewer than 2 members a class vanishes from some training split.
        if int((labels == c).sum()) < 2:
            raise TooFewPerClassError(f"class {c} has fewer than 2 instances")

    rng = np.random.default_rng(seed)
    assignments = np.empty(n, dtype=np.int64)
    sizes = np.zeros(k, dtype=np.int64)
    for c in classes:
        members = np.flatnonzero(labels == c)
        rng.shuffle(members)
        for idx in members:
            fold = int(np.argmin(sizes))  # first minimum -> lower fold id
            assignments[idx] = fold
            sizes[fold] += 1
    return FoldPlan(k=k, assignments=tuple(int(a) for a in assignments), seed=seed, stratified=True)


def fold_indices(plan: FoldPlan, fold_id: int) -> tuple[np.ndarray, np.ndarray]:
    """(train_indices, test_indices) for one fold, each in ascending order."""
    if not 0 <= fold_id < plan.k:
        raise IndexError(f"fold id {fold_id} outside 0..{plan.k - 1}")
    a = np.asarray(plan.assignments)
    return np.flatnonzero(a != fold_id), np.flatnonzero(a == fold_id)


def compute_metrics(y_true, y_pred) -> MetricsReport:
    """Confusion matrix, accuracy, and per-class precision/recall/f1."""
    y_true = np.asarray(y_true, dtype=np.int64)
    y_pred = np.asarray(y_pred, dtype=np.int64)
    if y_true.shape != y_pred.shape or y_true.ndim != 1:
        raise LengthMismatchError(
            f"shapes differ: {y_true.shape} vs {y_pred.shape}"
        )
    if len(y_true) == 0:
        raise EmptyInputError("no predictions to score")
    for arr, name in ((y_true, "y_true"), (y_pred, "y_pred")):
        if not np.isin(arr, (0, 1)).all():
            raise ValueError(f"{name} contains labels outside {{0, 1}}")

    confusion = tuple(
        tuple(int(((y_true == a) & (y_pred == p)).sum()) for p in (0, 1)) for a in (0, 1)
    )
    total = len(y_true)
    correct = confusion[0][0] + confusion[1][1]
    accuracy = correct / total

    per_class = []
    for c in (0, 1):
        tp = confusion[c][c]
        fp = confusion[1 - c][c]
        fn = confusion[c][1 - c]
        precision = tp / (tp + fp) if tp + fp > 0 else 0.0
        recall = tp / (tp + fn) if tp + fn > 0 else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        per_class.append(
            ClassMetrics(precision=precision, recall=recall, f1=f1, support=tp + fn)
        )

    macro = MacroMetrics(
        precision=(per_class[0].precision + per_class[1].precision) / 2,
        recall=(per_class[0].recall + per_class[1].recall) / 2,
        f1=(per_class[0].f1 + per_class[1].f1) / 2,
    )
    return MetricsReport(
        confusion=confusion,
        accuracy=accuracy,
        error=1.0 - accuracy,
        per_class=(per_class[0], per_class[1]),
        macro_avg=macro,
    )


def fit_fold(spec: models.ModelSpec, X: np.ndarray, y: np.ndarray, train_idx) -> models.TrainedModel:
    """Fit on the training rows only; the seam the leakage check exercises."""
    return models.fit(spec, X[train_idx], y[train_idx])


def cross_validate(spec: models.ModelSpec, d: Dataset, k: int, seed: int) -> CrossValReport:
    """k-fold CV: per-fold fit on the remaining folds, scored on the held-out one."""
    X = d.features()
    y = d.labels()
    plan = kfold_plan(len(d), y, k, seed)

    reports = []
    for fold_id in range(k):
        train_idx, test_idx = fold_indices(plan, fold_id)
        try:
            model = fit_fold(spec, X, y, train_idx)
        except Exception as exc:
            raise FoldFitError(fold_id, exc) from exc
        y_pred = models.predict_batch(model, X[test_idx])
        reports.append(compute_metrics(y[test_idx], y_pred))

    accuracies = np.array([r.accuracy for r in reports])
    return CrossValReport(
        per_fold=tuple(reports),
        mean_accuracy=float(accuracies.mean()),
        std_accuracy=float(accuracies.std()),
        mean_error=float(np.mean([r.error for r in reports])),
    )
