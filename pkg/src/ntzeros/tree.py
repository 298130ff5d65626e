"""Decision trees built from scratch on numpy.

Two fitting routines share one node type: a Gini-impurity classification
tree grown depth-first (the forest member), and a least-squares regression
tree grown best-first to a leaf budget (the boosting member). Split
thresholds are midpoints between consecutive distinct sorted values; ties in
split quality resolve to the smallest feature index, then the smallest
threshold, so fits are deterministic given the rng.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np


@dataclass
class TreeNode:
    """Internal node (feature, threshold, children) or leaf (value).

    Leaf `value` is a class-probability vector for classification trees and
    a scalar float for regression trees. Rows with x[feature] <= threshold
    go left.
    """

    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    value: np.ndarray | float | None = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def n_leaves(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.n_leaves() + self.right.n_leaves()


def tree_apply(root: TreeNode, X: np.ndarray) -> list[TreeNode]:
    """Leaf reached by each row."""
    n = X.shape[0]
    out: list[TreeNode | None] = [None] * n
    stack = [(root, np.arange(n))]
    while stack:
        node, idx = stack.pop()
        if idx.size == 0:
            continue
        if node.is_leaf:
            for i in idx:
                out[i] = node
            continue
        mask = X[idx, node.feature] <= node.threshold
        stack.append((node.left, idx[mask]))
        stack.append((node.right, idx[~mask]))
    return out


def tree_predict_value(root: TreeNode, X: np.ndarray) -> np.ndarray:
    """Regression-tree outputs, shape (n,)."""
    leaves = tree_apply(root, X)
    return np.array([leaf.value for leaf in leaves], dtype=np.float64)


def tree_predict_proba(root: TreeNode, X: np.ndarray, n_classes: int) -> np.ndarray:
    """Classification-tree leaf distributions, shape (n, n_classes)."""
    leaves = tree_apply(root, X)
    out = np.empty((X.shape[0], n_classes), dtype=np.float64)
    for i, leaf in enumerate(leaves):
        out[i] = leaf.value
    return out


def _best_gini_split(
    X: np.ndarray,
    y_idx: np.ndarray,
    weights: np.ndarray,
    features: np.ndarray,
    n_classes: int,
    min_samples_leaf: int,
) -> tuple[int, float, float] | None:
    """Best (feature, threshold, weighted_child_impurity) over the features.

    Impurity is the weight-fraction-weighted Gini of the two children; the
    class weights enter both the Gini terms and the child sizes. Returns
    None when no admissible threshold exists.
    """
    n = X.shape[0]
    best: tuple[float, int, float] | None = None  # (impurity, feature, threshold)
    total_w_per_class = np.zeros(n_classes)
    np.add.at(total_w_per_class, y_idx, weights)
    total_w = total_w_per_class.sum()
    for f in features:
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        col_sorted = col[order]
        distinct = col_sorted[:-1] < col_sorted[1:]
        if min_samples_leaf > 1:
            pos_ok = np.zeros(n - 1, dtype=bool)
            pos_ok[min_samples_leaf - 1 : n - min_samples_leaf] = True
            distinct &= pos_ok
        if not distinct.any():
            continue
        cw = np.zeros((n, n_classes))
        cw[np.arange(n), y_idx[order]] = weights[order]
        left_cum = np.cumsum(cw, axis=0)[:-1]  # class-weight mass left of each boundary
        cand = np.flatnonzero(distinct)
        left = left_cum[cand]
        right = total_w_per_class - left
        wl = left.sum(axis=1)
        wr = total_w - wl
        gini_l = 1.0 - np.sum((left / wl[:, None]) ** 2, axis=1)
        gini_r = 1.0 - np.sum((right / wr[:, None]) ** 2, axis=1)
        impurity = (wl * gini_l + wr * gini_r) / total_w
        k = int(np.argmin(impurity))
        if best is None or impurity[k] < best[0] - 1e-12:
            pos = cand[k]
            threshold = (col_sorted[pos] + col_sorted[pos + 1]) / 2.0
            best = (float(impurity[k]), int(f), threshold)
    if best is None:
        return None
    return best[1], best[2], best[0]


def fit_classification_tree(
    X: np.ndarray,
    y_idx: np.ndarray,
    n_classes: int,
    sample_weight: np.ndarray,
    max_depth: int | None,
    min_samples_leaf: int,
    max_features: int,
    rng: np.random.Generator,
) -> TreeNode:
    """Gini CART on class indices 0..n_classes-1 with per-sample weights.

    A fresh feature subset of size max_features is drawn at every split.
    Nodes stop at purity, the depth cap, or when no threshold strictly
    reduces weighted Gini impurity.
    """
    if X.shape[0] == 0:
        raise ValueError("empty dataset")
    n_features = X.shape[1]

    def leaf(y_sub: np.ndarray, w_sub: np.ndarray) -> TreeNode:
        hist = np.zeros(n_classes)
        np.add.at(hist, y_sub, w_sub)
        return TreeNode(value=hist / hist.sum())

    def grow(idx: np.ndarray, depth: int) -> TreeNode:
        y_sub = y_idx[idx]
        w_sub = sample_weight[idx]
        if (
            (max_depth is not None and depth >= max_depth)
            or idx.size < 2 * min_samples_leaf
            or (y_sub == y_sub[0]).all()
        ):
            return leaf(y_sub, w_sub)
        if max_features < n_features:
            feats = np.sort(rng.choice(n_features, size=max_features, replace=False))
        else:
            feats = np.arange(n_features)
        hist = np.zeros(n_classes)
        np.add.at(hist, y_sub, w_sub)
        parent_gini = 1.0 - np.sum((hist / hist.sum()) ** 2)
        found = _best_gini_split(X[idx], y_sub, w_sub, feats, n_classes, min_samples_leaf)
        if found is None or found[2] >= parent_gini - 1e-12:
            return leaf(y_sub, w_sub)
        f, threshold, _ = found
        mask = X[idx, f] <= threshold
        return TreeNode(
            feature=f,
            threshold=threshold,
            left=grow(idx[mask], depth + 1),
            right=grow(idx[~mask], depth + 1),
        )

    return grow(np.arange(X.shape[0]), 0)


def _best_ls_split(
    X: np.ndarray, r: np.ndarray, min_samples_leaf: int
) -> tuple[int, float, float] | None:
    """Best (feature, threshold, sse_gain) for a least-squares target r."""
    n = X.shape[0]
    if n < 2 * min_samples_leaf:
        return None
    total = r.sum()
    base = total * total / n
    best: tuple[float, int, float] | None = None  # (-gain, feature, threshold)
    for f in range(X.shape[1]):
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        col_sorted = col[order]
        distinct = col_sorted[:-1] < col_sorted[1:]
        if min_samples_leaf > 1:
            pos_ok = np.zeros(n - 1, dtype=bool)
            pos_ok[min_samples_leaf - 1 : n - min_samples_leaf] = True
            distinct &= pos_ok
        if not distinct.any():
            continue
        left_sum = np.cumsum(r[order])[:-1]
        cand = np.flatnonzero(distinct)
        ls = left_sum[cand]
        nl = cand + 1.0
        gain = ls * ls / nl + (total - ls) ** 2 / (n - nl) - base
        k = int(np.argmax(gain))
        if gain[k] <= 1e-12:
            continue
        if best is None or -gain[k] < best[0] - 1e-12:
            pos = cand[k]
            best = (-float(gain[k]), f, (col_sorted[pos] + col_sorted[pos + 1]) / 2.0)
    if best is None:
        return None
    return best[1], best[2], -best[0]


def fit_regression_tree(
    X: np.ndarray,
    r: np.ndarray,
    max_leaves: int,
    min_samples_leaf: int = 1,
) -> TreeNode:
    """Least-squares tree grown best-first until max_leaves leaves.

    The split with the largest sum-of-squares reduction anywhere in the
    tree is applied next (leaf-wise growth); leaves predict the mean target.
    """
    if X.shape[0] == 0:
        raise ValueError("empty dataset")
    if max_leaves < 1:
        raise ValueError(f"max_leaves must be >= 1, got {max_leaves}")
    root = TreeNode(value=float(r.mean()))
    if max_leaves == 1:
        return root
    counter = 0
    heap: list[tuple[float, int, TreeNode, np.ndarray, tuple[int, float]]] = []

    def consider(node: TreeNode, idx: np.ndarray) -> None:
        nonlocal counter
        found = _best_ls_split(X[idx], r[idx], min_samples_leaf)
        if found is not None:
            f, threshold, gain = found
            heapq.heappush(heap, (-gain, counter, node, idx, (f, threshold)))
            counter += 1

    consider(root, np.arange(X.shape[0]))
    n_leaves = 1
    while heap and n_leaves < max_leaves:
        _, _, node, idx, (f, threshold) = heapq.heappop(heap)
        mask = X[idx, f] <= threshold
        left_idx, right_idx = idx[mask], idx[~mask]
        node.feature = f
        node.threshold = threshold
        node.left = TreeNode(value=float(r[left_idx].mean()))
        node.right = TreeNode(value=float(r[right_idx].mean()))
        node.value = None
        n_leaves += 1
        consider(node.left, left_idx)
        consider(node.right, right_idx)
    return root
