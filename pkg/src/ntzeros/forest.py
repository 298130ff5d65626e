"""Bootstrap-aggregated Gini trees with balanced class weights."""

from __future__ import annotations

from math import ceil, sqrt

import numpy as np
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, ClassifierMixin

from .tree import TreeNode, fit_classification_tree, tree_predict_proba


def balanced_class_weights(y) -> dict[int, float]:
    """Weight N / (K * count(c)) per class, so every class carries equal mass."""
    y = np.asarray(y)
    if y.size == 0:
        raise ValueError("empty label array")
    classes, counts = np.unique(y, return_counts=True)
    n, k = y.size, classes.size
    return {int(c): n / (k * int(cnt)) for c, cnt in zip(classes, counts)}


def _validate_xy(X, y) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    if X.ndim != 2:
        raise ValueError(f"X must be 2-dimensional, got shape {X.shape}")
    if X.shape[0] == 0:
        raise ValueError("empty dataset")
    if y.shape != (X.shape[0],):
        raise ValueError(f"y has shape {y.shape}, expected ({X.shape[0]},)")
    if not np.all(np.isfinite(X)):
        raise ValueError("X must be finite")
    return X, y


class ForestClassifier(BaseEstimator, ClassifierMixin):
    """Random forest of Gini CART trees, trained from scratch.

    Every tree sees a bootstrap resample of the data; a fresh feature subset
    of size max_features (default ceil(sqrt(d))) is drawn at each split.
    Balanced class weights N/(K*count) are applied inside the Gini criterion
    and in the leaf distributions. Per-tree generators are derived from
    (seed, tree index), so fits are reproducible and independent of n_jobs.
    """

    def __init__(
        self,
        n_trees: int = 200,
        max_depth: int | None = None,
        min_samples_leaf: int = 1,
        max_features: int | str | None = "sqrt",
        bootstrap: bool = True,
        class_weight: str | None = "balanced",
        seed: int = 0,
        n_jobs: int | None = None,
    ):
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.max_features = max_features
        self.bootstrap = bootstrap
        self.class_weight = class_weight
        self.seed = seed
        self.n_jobs = n_jobs

    def fit(self, X, y) -> "ForestClassifier":
        X, y = _validate_xy(X, y)
        if self.n_trees < 1:
            raise ValueError(f"n_trees must be >= 1, got {self.n_trees}")
        self.classes_ = np.unique(y)
        if self.classes_.size < 2:
            raise ValueError("need at least 2 distinct classes to fit")
        self.n_features_in_ = X.shape[1]
        self.feature_names_in_ = [f"f{i}" for i in range(X.shape[1])]
        class_to_idx = {c: i for i, c in enumerate(self.classes_)}
        y_idx = np.array([class_to_idx[v] for v in y], dtype=np.intp)
        if self.class_weight == "balanced":
            by_label = balanced_class_weights(y)
            weight_of = np.array([by_label[int(c)] for c in self.classes_])
        elif self.class_weight is None:
            weight_of = np.ones(self.classes_.size)
        else:
            raise ValueError(f"class_weight must be 'balanced' or None, got {self.class_weight!r}")
        m = self._resolve_max_features(X.shape[1])
        self.max_features_ = m
        n = X.shape[0]

        def build(t: int) -> TreeNode:
            rng = np.random.default_rng((self.seed, t))
            if self.bootstrap:
                rows = np.sort(rng.integers(0, n, size=n))
            else:
                rows = np.arange(n)
            return fit_classification_tree(
                X[rows],
                y_idx[rows],
                self.classes_.size,
                weight_of[y_idx[rows]],
                self.max_depth,
                self.min_samples_leaf,
                m,
                rng,
            )

        if self.n_jobs in (None, 1):
            self.trees_ = [build(t) for t in range(self.n_trees)]
        else:
            self.trees_ = Parallel(n_jobs=self.n_jobs, prefer="threads")(
                delayed(build)(t) for t in range(self.n_trees)
            )
        return self

    def _resolve_max_features(self, d: int) -> int:
        if self.max_features == "sqrt":
            return min(d, ceil(sqrt(d)))
        if self.max_features is None:
            return d
        m = int(self.max_features)
        if m < 1:
            raise ValueError(f"max_features must be >= 1, got {m}")
        return min(d, m)

    def predict_proba(self, X) -> np.ndarray:
        X = self._check_predict_input(X)
        k = self.classes_.size
        acc = np.zeros((X.shape[0], k))
        for tree in self.trees_:
            acc += tree_predict_proba(tree, X, k)
        return acc / len(self.trees_)

    def predict(self, X) -> np.ndarray:
        # argmax takes the first maximum, i.e. the smallest class label on ties
        return self.classes_[np.argmax(self.predict_proba(X), axis=1)]

    def _check_predict_input(self, X) -> np.ndarray:
        if not hasattr(self, "trees_"):
            raise ValueError("fit the model before predicting")
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected shape (n, {self.n_features_in_}), got {X.shape}")
        return X
