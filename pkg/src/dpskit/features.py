"""Univariate ANOVA-F feature scoring, top-k selection, and column projection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Dataset, QuestionnaireInstance


class SingleClassDataError(ValueError):
    pass


class BadKError(ValueError):
    pass


class BadIndexError(IndexError):
    pass


class DuplicateIndexError(ValueError):
    pass


@dataclass(frozen=True)
class FeatureScore:
    attribute_index: int  # 1-based
    f_statistic: float  # non-negative, may be +inf
    rank: int  # 1 = highest F


def anova_f_statistics(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Two-class ANOVA F per column.

    F = [sum_c n_c (mean_c - mean)^2 / (C-1)] / [within-class SS / (n-C)].
    Conventions: 0/0 -> 0 (constant feature), positive/0 -> +inf (perfectly
    class-separated feature).
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    classes = sorted(set(y.tolist()))
    if len(classes) < 2:
        raise SingleClassDataError("both classes must be present")
    n = len(y)
    c = len(classes)
    grand = X.mean(axis=0)
    between = np.zeros(X.shape[1])
    within = np.zeros(X.shape[1])
    for cls in classes:
        rows = X[y == cls]
        mu = rows.mean(axis=0)
        between += len(rows) * (mu - grand) ** 2
        within += ((rows - mu) ** 2).sum(axis=0)
    between_ms = between / (c - 1)
    within_ms = within / (n - c) if n > c else np.zeros_like(within)
    with np.errstate(divide="ignore", invalid="ignore"):
        f = between_ms / within_ms
    f[within_ms == 0.0] = np.where(between_ms[within_ms == 0.0] > 0.0, np.inf, 0.0)
    return f


def anova_f_scores(d: Dataset) -> list[FeatureScore]:
    """Scores for every attribute, sorted by descending F (ties: lower index)."""
    f = anova_f_statistics(d.features(), d.labels())
    order = sorted(range(d.attribute_count), key=lambda j: (-f[j], j))
    return [
        FeatureScore(attribute_index=j + 1, f_statistic=float(f[j]), rank=pos + 1)
        for pos, j in enumerate(order)
    ]


def select_top_k(scores: list[FeatureScore], k: int) -> list[int]:
    """The k best attribute indices, best first."""
    if not 1 <= k <= len(scores):
        raise BadKError(f"k must be in 1..{len(scores)}, got {k}")
    ranked = sorted(scores, key=lambda s: s.rank)
    return [s.attribute_index for s in ranked[:k]]


def project(d: Dataset, indices) -> Dataset:
    """Keep only the given 1-based attribute columns, in the given order."""
    indices = [int(i) for i in indices]
    if len(set(indices)) != len(indices):
        raise DuplicateIndexError(f"indices contain duplicates: {indices}")
    for i in indices:
        if not 1 <= i <= d.attribute_count:
            raise BadIndexError(f"attribute index {i} outside 1..{d.attribute_count}")
    instances = tuple(
        QuestionnaireInstance(
            answers=tuple(inst.answers[i - 1] for i in indices), label=inst.label
        )
        for inst in d.instances
    )
    return Dataset(instances=instances, attribute_count=len(indices), source_path=d.source_path)
