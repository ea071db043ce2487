"""Gaussian naive Bayes on raw questionnaire answers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit


@dataclass(frozen=True)
class NBParams:
    class_means: tuple[tuple[float, ...], ...]  # [class][feature]
    class_variances: tuple[tuple[float, ...], ...]  # smoothed, [class][feature]
    log_priors: tuple[float, float]
    smoothing: float


def fit_naive_bayes(X: np.ndarray, y: np.ndarray, var_smoothing: float = 1e-9) -> NBParams:
    n = len(y)
    # Floor keeps constant features usable: their variance becomes eps, not 0.
    eps = max(var_smoothing * float(X.var(axis=0).max()), 1e-12)
    means = []
    variances = []
    log_priors = []
    for c in (0, 1):
        rows = X[y == c]
        means.append(tuple(float(v) for v in rows.mean(axis=0)))
        variances.append(tuple(float(v) + eps for v in rows.var(axis=0)))
        log_priors.append(float(np.log(len(rows) / n)))
    return NBParams(
        class_means=tuple(means),
        class_variances=tuple(variances),
        log_priors=(log_priors[0], log_priors[1]),
        smoothing=eps,
    )


def joint_log_likelihood(params: NBParams, X: np.ndarray) -> np.ndarray:
    """Per-class joint log likelihood, shape (n, 2)."""
    out = np.empty((len(X), 2), dtype=np.float64)
    for c in (0, 1):
        mu = np.asarray(params.class_means[c], dtype=np.float64)
        var = np.asarray(params.class_variances[c], dtype=np.float64)
        ll = -0.5 * np.sum(np.log(2.0 * np.pi * var))
        out[:, c] = params.log_priors[c] + ll - 0.5 * np.sum(
            (X - mu) ** 2 / var, axis=1
        )
    return out


def proba(params: NBParams, X: np.ndarray) -> np.ndarray:
    ll = joint_log_likelihood(params, X)
    return expit(ll[:, 1] - ll[:, 0])
