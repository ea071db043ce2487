"""Local explanation of one prediction via perturbation and a sparse surrogate.

The instance is perturbed feature-by-feature with draws from smoothed training
frequencies, each perturbed row is scored by the model, and a weighted ridge
regression over the binary did-it-change code yields per-feature weights. The
top features by absolute weight are refit to produce the reported entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from . import models
from .data import Dataset, EmptyDatasetError
from .models.base import DimensionMismatchError
from .questions import SCALE_MAX, SCALE_MIN

_SCALE_CARDINALITY = SCALE_MAX - SCALE_MIN + 1


class SingularSystemError(ValueError):
    pass


@dataclass(frozen=True)
class PerturbationStats:
    """Per-feature categorical distribution over the 5 Likert values."""

    probabilities: tuple[tuple[float, ...], ...]  # [feature][value 0..4]

    def __post_init__(self):
        for j, row in enumerate(self.probabilities):
            if len(row) != _SCALE_CARDINALITY:
                raise ValueError(f"feature {j + 1}: expected {_SCALE_CARDINALITY} probabilities")
            if any(p <= 0.0 for p in row):
                raise ValueError(f"feature {j + 1}: probabilities must be positive")
            if abs(sum(row) - 1.0) > 1e-9:
                raise ValueError(f"feature {j + 1}: probabilities sum to {sum(row)}")

    @property
    def feature_count(self) -> int:
        return len(self.probabilities)


@dataclass(frozen=True)
class LimeConfig:
    num_samples: int = 5000
    kernel_width: float | None = None  # None resolves to 0.75 * sqrt(d)
    ridge_lambda: float = 1.0
    num_features_out: int = 10
    seed: int = 0

    def __post_init__(self):
        if self.num_samples < 10:
            raise ValueError(f"num_samples must be >= 10, got {self.num_samples}")
        if self.kernel_width is not None and not self.kernel_width > 0:
            raise ValueError(f"kernel_width must be > 0, got {self.kernel_width}")
        if self.ridge_lambda < 0:
            raise ValueError(f"ridge_lambda must be >= 0, got {self.ridge_lambda}")
        if self.num_features_out < 1:
            raise ValueError(f"num_features_out must be >= 1, got {self.num_features_out}")

    def resolved_kernel_width(self, feature_count: int) -> float:
        if self.kernel_width is not None:
            return self.kernel_width
        return 0.75 * float(np.sqrt(feature_count))


@dataclass(frozen=True)
class ExplanationEntry:
    attribute_index: int  # 1-based, in the full instrument's numbering
    weight: float
    instance_value: int


@dataclass(frozen=True)
class Explanation:
    entries: tuple[ExplanationEntry, ...]  # sorted by |weight| descending
    intercept: float
    surrogate_r2: float
    config: LimeConfig
    degenerate: bool = False  # all sampled targets identical


def build_perturbation_stats(train: Dataset) -> PerturbationStats:
    """Add-one-smoothed value frequencies per feature: p(v) = (count+1)/(n+5)."""
    if len(train) == 0:
        raise EmptyDatasetError("cannot build perturbation stats from an empty dataset")
    X = train.features()
    n = len(train)
    rows = []
    for j in range(train.attribute_count):
        counts = [(X[:, j] == v).sum() for v in range(SCALE_MIN, SCALE_MAX + 1)]
        rows.append(tuple((c + 1) / (n + _SCALE_CARDINALITY) for c in counts))
    return PerturbationStats(probabilities=tuple(rows))


def weighted_ridge(Z, y, w, ridge_lambda: float):
    """Minimize sum w_i (y_i - beta.z_i - b0)^2 + lambda ||beta||^2.

    The intercept is unpenalized. Solved through a Cholesky factorization of
    the augmented normal equations. Returns (beta, b0).
    """
    Z = np.asarray(Z, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if Z.ndim != 2 or y.shape != (Z.shape[0],) or w.shape != (Z.shape[0],):
        raise ValueError(f"inconsistent shapes: Z {Z.shape}, y {y.shape}, w {w.shape}")
    if (w < 0).any() or not (w > 0).any():
        raise ValueError("weights must be non-negative and not all zero")
    if ridge_lambda < 0:
        raise ValueError(f"ridge_lambda must be >= 0, got {ridge_lambda}")

    d = Z.shape[1]
    wZ = Z * w[:, None]
    system = np.empty((d + 1, d + 1), dtype=np.float64)
    system[:d, :d] = Z.T @ wZ + ridge_lambda * np.eye(d)
    system[:d, d] = wZ.sum(axis=0)
    system[d, :d] = system[:d, d]
    system[d, d] = w.sum()
    rhs = np.empty(d + 1, dtype=np.float64)
    rhs[:d] = Z.T @ (w * y)
    rhs[d] = w @ y
    try:
        factor = cho_factor(system)
    except LinAlgError:
        if ridge_lambda == 0.0:
            raise SingularSystemError("rank-deficient design with ridge_lambda 0") from None
        raise
    if ridge_lambda == 0.0:
        # an exactly singular PSD system can slip through the factorization
        # with a rounding-level pivot; the minimizer is not unique there
        pivots = np.abs(np.diag(factor[0]))
        if pivots.min() <= 1e-7 * pivots.max():
            raise SingularSystemError("rank-deficient design with ridge_lambda 0")
    solution = cho_solve(factor, rhs)
    return solution[:d], float(solution[d])


def _sample_perturbations(x, stats: PerturbationStats, num_samples: int, seed: int) -> np.ndarray:
    """num_samples rows; row 0 is x itself, the rest are independent redraws."""
    d = stats.feature_count
    rng = np.random.default_rng(seed)
    u = rng.random((num_samples - 1, d))
    samples = np.empty((num_samples, d), dtype=np.float64)
    samples[0] = x
    for j in range(d):
        cdf = np.cumsum(stats.probabilities[j])
        drawn = np.searchsorted(cdf, u[:, j], side="right")
        samples[1:, j] = np.minimum(drawn, _SCALE_CARDINALITY - 1) + SCALE_MIN
    return samples


def _weighted_r2(y, y_hat, w) -> float:
    y_bar = (w @ y) / w.sum()
    ss_res = w @ (y - y_hat) ** 2
    ss_tot = w @ (y - y_bar) ** 2
    if ss_tot <= 0.0:
        return 0.0
    return float(min(1.0, max(0.0, 1.0 - ss_res / ss_tot)))


def explain(model, x, stats: PerturbationStats, cfg: LimeConfig) -> Explanation:
    """Explain the class-1 probability at x.

    model is either a TrainedModel or a callable mapping an (n, d) matrix to n
    probabilities. Deterministic for a fixed cfg.seed.
    """
    d = stats.feature_count
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (d,):
        raise DimensionMismatchError(f"instance shape {x.shape} does not match {d} features")
    for j, v in enumerate(x):
        if not (float(v).is_integer() and SCALE_MIN <= v <= SCALE_MAX):
            raise ValueError(f"answer {v} at attribute {j + 1} outside {SCALE_MIN}..{SCALE_MAX}")
    if cfg.num_features_out > d:
        raise ValueError(f"num_features_out {cfg.num_features_out} exceeds {d} features")

    if isinstance(model, models.TrainedModel):
        if len(model.feature_indices) != d:
            raise DimensionMismatchError(
                f"model expects {len(model.feature_indices)} features, stats have {d}"
            )
        indices = model.feature_indices
        proba_fn = lambda M: models.predict_proba_batch(model, M)  # noqa: E731
    else:
        indices = tuple(range(1, d + 1))
        proba_fn = model

    samples = _sample_perturbations(x, stats, cfg.num_samples, cfg.seed)
    Z = (samples == x).astype(np.float64)
    flipped = d - Z.sum(axis=1)
    width = cfg.resolved_kernel_width(d)
    weights = np.exp(-flipped / (width * width))
    targets = np.asarray(proba_fn(samples), dtype=np.float64).reshape(-1)
    if targets.shape != (cfg.num_samples,):
        raise DimensionMismatchError(
            f"model returned {targets.shape} probabilities for {cfg.num_samples} samples"
        )

    if np.all(targets == targets[0]):
        entries = tuple(
            ExplanationEntry(attribute_index=indices[j], weight=0.0, instance_value=int(x[j]))
            for j in range(cfg.num_features_out)
        )
        return Explanation(
            entries=entries,
            intercept=float(targets[0]),
            surrogate_r2=0.0,
            config=cfg,
            degenerate=True,
        )

    beta, _ = weighted_ridge(Z, targets, weights, cfg.ridge_lambda)
    chosen = sorted(range(d), key=lambda j: (-abs(beta[j]), j))[: cfg.num_features_out]
    beta_r, b0_r = weighted_ridge(Z[:, chosen], targets, weights, cfg.ridge_lambda)
    r2 = _weighted_r2(targets, Z[:, chosen] @ beta_r + b0_r, weights)

    entries = [
        ExplanationEntry(
            attribute_index=indices[j], weight=float(beta_r[pos]), instance_value=int(x[j])
        )
        for pos, j in enumerate(chosen)
    ]
    entries.sort(key=lambda e: (-abs(e.weight), e.attribute_index))
    return Explanation(
        entries=tuple(entries), intercept=b0_r, surrogate_r2=r2, config=cfg, degenerate=False
    )
