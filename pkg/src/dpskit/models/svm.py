"""Linear soft-margin SVM trained with simplified sequential minimal optimization.

The dual is solved two multipliers at a time. The first index sweeps the
training set in order; the second is the one maximizing |E_i - E_j| with ties
to the lower index, falling back to an ascending scan when that choice cannot
make progress. A pass that changes nothing counts as non-improving and the
loop stops after max_passes of those in a row, which keeps training fully
deterministic. Probabilities come from a Platt sigmoid fit on the training
decision values with the logistic optimizer from this package.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import expit

from .base import NonConvergenceWarning
from .logistic import fit_logistic

# Safety valve only: the non-improving-pass rule is the real stopping criterion.
_MAX_TOTAL_PASSES = 1000
# small enough that blocked steps cannot leave KKT residuals near the 1e-3
# working tolerance (step resolution scales with the kernel diagonal)
_MIN_ALPHA_STEP = 1e-7


@dataclass(frozen=True)
class SVMParams:
    support_vectors: tuple[tuple[float, ...], ...]
    dual_coef: tuple[float, ...]  # alpha_i * y_i with y in {-1, +1}
    bias: float
    C: float
    platt_a: float
    platt_b: float


def _try_update(i, j, alpha, b, E, K, ys, C):
    """Attempt one SMO pair update. Returns (alpha, b, E, True) on progress."""
    if i == j:
        return alpha, b, E, False
    if ys[i] != ys[j]:
        lo = max(0.0, alpha[j] - alpha[i])
        hi = min(C, C + alpha[j] - alpha[i])
    else:
        lo = max(0.0, alpha[i] + alpha[j] - C)
        hi = min(C, alpha[i] + alpha[j])
    if lo == hi:
        return alpha, b, E, False
    eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
    if eta >= 0.0:
        return alpha, b, E, False
    aj = alpha[j] - ys[j] * (E[i] - E[j]) / eta
    aj = min(hi, max(lo, aj))
    if abs(aj - alpha[j]) < _MIN_ALPHA_STEP:
        return alpha, b, E, False
    ai = alpha[i] + ys[i] * ys[j] * (alpha[j] - aj)
    # the derived coordinate can leave [0, C] by rounding; the box is exact
    ai = min(C, max(0.0, ai))
    di = ys[i] * (ai - alpha[i])
    dj = ys[j] * (aj - alpha[j])
    b1 = b - E[i] - di * K[i, i] - dj * K[i, j]
    b2 = b - E[j] - di * K[i, j] - dj * K[j, j]
    if 0.0 < ai < C:
        new_b = b1
    elif 0.0 < aj < C:
        new_b = b2
    else:
        new_b = (b1 + b2) / 2.0
    E = E + di * K[i] + dj * K[j] + (new_b - b)
    alpha = alpha.copy()
    alpha[i] = ai
    alpha[j] = aj
    return alpha, new_b, E, True


def smo_solve(X: np.ndarray, ys: np.ndarray, C: float, tol: float, max_passes: int):
    """Solve the dual for labels in {-1,+1}. Returns (alpha, b)."""
    n = len(ys)
    K = X @ X.T
    alpha = np.zeros(n, dtype=np.float64)
    b = 0.0
    quiet_passes = 0
    total = 0
    while quiet_passes < max_passes:
        if total >= _MAX_TOTAL_PASSES:
            warnings.warn(NonConvergenceWarning("svm", total))
            break
        E = (K @ (alpha * ys) + b) - ys
        changed = 0
        for i in range(n):
            r = ys[i] * E[i]
            if not ((r < -tol and alpha[i] < C) or (r > tol and alpha[i] > 0.0)):
                continue
            gap = np.abs(E[i] - E)
            gap[i] = -np.inf
            j = int(np.argmax(gap))
            alpha, b, E, ok = _try_update(i, j, alpha, b, E, K, ys, C)
            if not ok:
                for j in range(n):
                    alpha, b, E, ok = _try_update(i, j, alpha, b, E, K, ys, C)
                    if ok:
                        break
            if ok:
                changed += 1
        quiet_passes = quiet_passes + 1 if changed == 0 else 0
        total += 1
    # residues closer to a bound than the step floor can never be moved by a
    # pair update, so they are numerical dust, not support vectors
    alpha[alpha < _MIN_ALPHA_STEP] = 0.0
    alpha[alpha > C - _MIN_ALPHA_STEP] = C
    return alpha, b


def fit_svm(
    X: np.ndarray,
    y: np.ndarray,
    C: float = 1.0,
    tol: float = 1e-3,
    max_passes: int = 100,
) -> SVMParams:
    ys = np.where(y == 1, 1.0, -1.0)
    alpha, b = smo_solve(X, ys, C, tol, max_passes)
    keep = alpha > 0.0
    sv = X[keep]
    coef = alpha[keep] * ys[keep]
    margins = X @ sv.T @ coef + b
    platt = fit_logistic(margins[:, None], y, warn_label="svm-platt")
    return SVMParams(
        support_vectors=tuple(tuple(float(v) for v in row) for row in sv),
        dual_coef=tuple(float(v) for v in coef),
        bias=float(b),
        C=C,
        platt_a=float(platt.weights[0]),
        platt_b=float(platt.bias),
    )


def decision_values(params: SVMParams, X: np.ndarray) -> np.ndarray:
    sv = np.asarray(params.support_vectors, dtype=np.float64)
    coef = np.asarray(params.dual_coef, dtype=np.float64)
    return X @ sv.T @ coef + params.bias


def proba(params: SVMParams, X: np.ndarray) -> np.ndarray:
    return expit(params.platt_a * decision_values(params, X) + params.platt_b)
