"""Logistic regression trained by full-batch gradient descent.

Deterministic by construction: zero-initialized weights, fixed step size, and
a loss-change stopping rule. The loss is mean cross-entropy plus an L2 penalty
on the weights (bias unpenalized).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .base import NonConvergenceWarning


@dataclass(frozen=True)
class LRParams:
    weights: tuple[float, ...]
    bias: float
    n_iter: int
    converged: bool


def loss_and_gradient(w: np.ndarray, b: float, X: np.ndarray, y: np.ndarray, l2: float):
    """Regularized mean cross-entropy and its analytic gradient.

    Uses log(1 + e^z) - y*z per sample, which is stable for large |z|.
    """
    n = X.shape[0]
    z = X @ w + b
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z) + 0.5 * l2 * np.dot(w, w))
    r = expit(z) - y
    grad_w = X.T @ r / n + l2 * w
    grad_b = float(r.mean())
    return loss, grad_w, grad_b


def fit_logistic(
    X: np.ndarray,
    y: np.ndarray,
    learning_rate: float = 0.1,
    l2: float = 1e-4,
    max_iter: int = 2000,
    tol: float = 1e-8,
    warn_label: str = "lr",
) -> LRParams:
    n, d = X.shape
    w = np.zeros(d)
    b = 0.0
    best_loss, best_w, best_b = np.inf, w, b
    prev_loss = np.inf
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        loss, grad_w, grad_b = loss_and_gradient(w, b, X, y, l2)
        if loss < best_loss:
            best_loss, best_w, best_b = loss, w, b
        if abs(prev_loss - loss) < tol:
            converged = True
            break
        prev_loss = loss
        w = w - learning_rate * grad_w
        b = b - learning_rate * grad_b
    if not converged:
        loss, _, _ = loss_and_gradient(w, b, X, y, l2)
        if loss < best_loss:
            best_loss, best_w, best_b = loss, w, b
        warnings.warn(NonConvergenceWarning(warn_label, max_iter), stacklevel=2)
    return LRParams(
        weights=tuple(best_w.tolist()), bias=float(best_b), n_iter=it, converged=converged
    )


def proba(params: LRParams, X: np.ndarray) -> np.ndarray:
    return expit(X @ np.asarray(params.weights) + params.bias)
