"""Linear discriminant analysis with a ridge-stabilized pooled covariance.

The pooled within-class covariance of Likert answers is often ill-conditioned,
so the discriminants are computed from a Cholesky factorization of
(pooled covariance + lambda*I); no matrix is ever explicitly inverted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_solve
from scipy.special import expit


@dataclass(frozen=True)
class LDAParams:
    class_means: tuple[tuple[float, ...], tuple[float, ...]]
    chol_lower: tuple[tuple[float, ...], ...]  # lower Cholesky factor of cov + lambda*I
    log_priors: tuple[float, float]
    ridge_lambda: float


def fit_lda(X: np.ndarray, y: np.ndarray, ridge_scale: float = 1e-3) -> LDAParams:
    n, d = X.shape
    means = []
    pooled = np.zeros((d, d))
    priors = []
    for c in (0, 1):
        Xc = X[y == c]
        mu = Xc.mean(axis=0)
        centered = Xc - mu
        pooled += centered.T @ centered
        means.append(mu)
        priors.append(len(Xc) / n)
    pooled /= max(n - 2, 1)
    lam = max(ridge_scale * np.trace(pooled) / d, 1e-12)
    factor = np.linalg.cholesky(pooled + lam * np.eye(d))
    return LDAParams(
        class_means=(tuple(means[0].tolist()), tuple(means[1].tolist())),
        chol_lower=tuple(tuple(row) for row in factor.tolist()),
        log_priors=(float(np.log(priors[0])), float(np.log(priors[1]))),
        ridge_lambda=float(lam),
    )


def _discriminant_terms(params: LDAParams):
    """Coefficient vector and constant of each class discriminant."""
    factor = (np.asarray(params.chol_lower), True)
    coefs = []
    consts = []
    for c in (0, 1):
        mu = np.asarray(params.class_means[c])
        w = cho_solve(factor, mu)
        coefs.append(w)
        consts.append(-0.5 * float(mu @ w) + params.log_priors[c])
    return coefs, consts


def proba(params: LDAParams, X: np.ndarray) -> np.ndarray:
    coefs, consts = _discriminant_terms(params)
    margin = X @ (coefs[1] - coefs[0]) + (consts[1] - consts[0])
    return expit(margin)
