"""Binary classification tree grown to purity with Gini splits.

Candidate thresholds sit at midpoints of consecutive distinct sorted values
per feature. Equal impurity drops resolve to the lower feature index, then the
lower threshold, which makes growth fully deterministic. Routing is
x <= threshold to the left child.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np


@dataclass(frozen=True)
class TreeLeaf:
    class_counts: tuple[int, int]

    @property
    def label(self) -> int:
        c0, c1 = self.class_counts
        return 1 if c1 > c0 else 0


@dataclass(frozen=True)
class TreeSplit:
    feature: int  # 0-based column in the fit matrix
    threshold: float
    left: "TreeNode"
    right: "TreeNode"


TreeNode = Union[TreeLeaf, TreeSplit]


@dataclass(frozen=True)
class CARTParams:
    root: TreeNode
    n_features: int


def _gini_from_counts(c0: float, c1: float) -> float:
    m = c0 + c1
    if m == 0:
        return 0.0
    return 1.0 - (c0 * c0 + c1 * c1) / (m * m)


def best_split(X: np.ndarray, y: np.ndarray):
    """Best (feature, threshold, impurity_drop) over all candidates, or None.

    Scans features in ascending index and thresholds in ascending value,
    keeping only strictly better drops, so ties resolve as documented.
    """
    m = len(y)
    total1 = int(y.sum())
    total0 = m - total1
    parent = _gini_from_counts(total0, total1)
    best = None  # (drop, feature, threshold)
    for j in range(X.shape[1]):
        v = X[:, j]
        order = np.argsort(v, kind="stable")
        vs = v[order]
        ys = y[order]
        bounds = np.flatnonzero(vs[:-1] != vs[1:])
        if bounds.size == 0:
            continue
        cum1 = np.cumsum(ys)
        nl = bounds + 1.0
        nr = m - nl
        c1l = cum1[bounds].astype(np.float64)
        c0l = nl - c1l
        c1r = total1 - c1l
        c0r = nr - c1r
        gl = 1.0 - (c0l * c0l + c1l * c1l) / (nl * nl)
        gr = 1.0 - (c0r * c0r + c1r * c1r) / (nr * nr)
        drops = parent - (nl * gl + nr * gr) / m
        pos = int(np.argmax(drops))  # first max -> lowest threshold
        if best is None or drops[pos] > best[0]:
            thresh = (vs[bounds[pos]] + vs[bounds[pos] + 1]) / 2.0
            best = (float(drops[pos]), j, float(thresh))
    if best is None:
        return None
    drop, feature, threshold = best
    return feature, threshold, drop


def _grow(X: np.ndarray, y: np.ndarray, min_samples_split: int) -> TreeNode:
    c1 = int(y.sum())
    c0 = len(y) - c1
    if c0 == 0 or c1 == 0 or len(y) < min_samples_split:
        return TreeLeaf(class_counts=(c0, c1))
    found = best_split(X, y)
    if found is None or found[2] <= 0.0:
        return TreeLeaf(class_counts=(c0, c1))
    feature, threshold, _ = found
    mask = X[:, feature] <= threshold
    return TreeSplit(
        feature=feature,
        threshold=threshold,
        left=_grow(X[mask], y[mask], min_samples_split),
        right=_grow(X[~mask], y[~mask], min_samples_split),
    )


def fit_cart(X: np.ndarray, y: np.ndarray, min_samples_split: int = 2) -> CARTParams:
    return CARTParams(root=_grow(X, y, min_samples_split), n_features=X.shape[1])


def leaf_counts(params: CARTParams, X: np.ndarray) -> np.ndarray:
    """Class counts of the leaf each row lands in, shape (n, 2)."""
    out = np.empty((len(X), 2), dtype=np.float64)

    def route(node: TreeNode, idx: np.ndarray) -> None:
        if isinstance(node, TreeLeaf):
            out[idx] = node.class_counts
            return
        mask = X[idx, node.feature] <= node.threshold
        route(node.left, idx[mask])
        route(node.right, idx[~mask])

    route(params.root, np.arange(len(X)))
    return out


def proba(params: CARTParams, X: np.ndarray) -> np.ndarray:
    counts = leaf_counts(params, X)
    return counts[:, 1] / counts.sum(axis=1)


def classify(params: CARTParams, X: np.ndarray) -> np.ndarray:
    counts = leaf_counts(params, X)
    return (counts[:, 1] > counts[:, 0]).astype(np.int64)
