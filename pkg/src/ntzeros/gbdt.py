"""Multiclass gradient-boosted trees with softmax link and early stopping."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin

from .metrics import PROB_FLOOR, log_loss_from_proba
from .tree import fit_regression_tree, tree_predict_value
from .forest import _validate_xy


def softmax(scores: np.ndarray) -> np.ndarray:
    """Row-wise softmax, shifted for stability."""
    z = scores - scores.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def logloss_gradient(scores: np.ndarray, y_idx: np.ndarray) -> np.ndarray:
    """Gradient of total multiclass log loss with respect to raw scores.

    For L = -sum_i log softmax(scores_i)[y_i], dL/dscores = softmax - onehot.
    """
    grad = softmax(scores)
    grad[np.arange(len(y_idx)), y_idx] -= 1.0
    return grad


class GbdtClassifier(BaseEstimator, ClassifierMixin):
    """Gradient boosting: one least-squares tree per class per round.

    Raw scores start at the log class priors. Each round fits a regression
    tree (best-first, at most max_leaves leaves) to the negative gradient
    one-hot(y) - softmax(scores) for every class and adds learning_rate
    times its prediction. With a validation set, training stops once the
    validation log loss has not improved for early_stopping_rounds rounds,
    and only the best-scoring prefix of rounds is kept.
    """

    def __init__(
        self,
        n_rounds: int = 1500,
        learning_rate: float = 0.1,
        max_leaves: int = 127,
        min_samples_leaf: int = 1,
        early_stopping_rounds: int | None = 75,
        seed: int = 0,
    ):
        self.n_rounds = n_rounds
        self.learning_rate = learning_rate
        self.max_leaves = max_leaves
        self.min_samples_leaf = min_samples_leaf
        self.early_stopping_rounds = early_stopping_rounds
        self.seed = seed

    def fit(self, X, y, X_val=None, y_val=None) -> "GbdtClassifier":
        X, y = _validate_xy(X, y)
        if self.n_rounds < 1:
            raise ValueError(f"n_rounds must be >= 1, got {self.n_rounds}")
        if self.learning_rate < 0:
            raise ValueError(f"learning_rate must be >= 0, got {self.learning_rate}")
        self.classes_ = np.unique(y)
        k = self.classes_.size
        if k < 2:
            raise ValueError("need at least two classes")
        self.n_features_in_ = X.shape[1]
        self.feature_names_in_ = [f"f{i}" for i in range(X.shape[1])]
        class_to_idx = {c: i for i, c in enumerate(self.classes_)}
        y_idx = np.array([class_to_idx[v] for v in y], dtype=np.intp)

        use_val = X_val is not None
        if self.early_stopping_rounds is not None and not use_val:
            raise ValueError("early stopping needs a nonempty validation set")
        if use_val:
            X_val = np.asarray(X_val, dtype=np.float64)
            y_val = np.asarray(y_val)
            if X_val.ndim != 2 or X_val.shape[1] != X.shape[1] or X_val.shape[0] == 0:
                raise ValueError("validation set is empty or has mismatched features")

        priors = np.bincount(y_idx, minlength=k) / len(y_idx)
        self.init_scores_ = np.log(np.clip(priors, PROB_FLOOR, None))

        scores = np.tile(self.init_scores_, (X.shape[0], 1))
        val_scores = np.tile(self.init_scores_, (X_val.shape[0], 1)) if use_val else None
        rounds: list[list] = []
        self.val_losses_: list[float] = []
        best_loss, best_round = np.inf, 0
        for r in range(self.n_rounds):
            residual = -logloss_gradient(scores, y_idx)  # one-hot minus softmax
            round_trees = []
            for c in range(k):
                tree = fit_regression_tree(
                    X, residual[:, c], self.max_leaves, self.min_samples_leaf
                )
                round_trees.append(tree)
                scores[:, c] += self.learning_rate * tree_predict_value(tree, X)
                if use_val:
                    val_scores[:, c] += self.learning_rate * tree_predict_value(tree, X_val)
            rounds.append(round_trees)
            if use_val:
                loss = log_loss_from_proba(softmax(val_scores), y_val, self.classes_)
                self.val_losses_.append(loss)
                if loss < best_loss:
                    best_loss, best_round = loss, r
                if (
                    self.early_stopping_rounds is not None
                    and r - best_round >= self.early_stopping_rounds
                ):
                    break
        if use_val:
            self.best_iteration_ = int(np.argmin(self.val_losses_)) + 1
        else:
            self.best_iteration_ = len(rounds)
        self.rounds_ = rounds[: self.best_iteration_]
        return self

    def decision_function(self, X) -> np.ndarray:
        X = self._check_predict_input(X)
        scores = np.tile(self.init_scores_, (X.shape[0], 1))
        for round_trees in self.rounds_:
            for c, tree in enumerate(round_trees):
                scores[:, c] += self.learning_rate * tree_predict_value(tree, X)
        return scores

    def predict_proba(self, X) -> np.ndarray:
        return softmax(self.decision_function(X))

    def predict(self, X) -> np.ndarray:
        return self.classes_[np.argmax(self.predict_proba(X), axis=1)]

    def _check_predict_input(self, X) -> np.ndarray:
        if not hasattr(self, "rounds_"):
            raise ValueError("fit the model before predicting")
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected shape (n, {self.n_features_in_}), got {X.shape}")
        return X
