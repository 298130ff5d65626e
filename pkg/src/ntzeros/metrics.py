"""Classification metrics and the evaluation report record."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PROB_FLOOR = 1e-15


def accuracy(y_true, y_pred) -> float:
    """Fraction of exact label matches."""
    y_true = np.asarray(y_true)
    y_pred = np.asarray(y_pred)
    if y_true.shape != y_pred.shape:
        raise ValueError(f"length mismatch: {y_true.shape} vs {y_pred.shape}")
    if y_true.size == 0:
        raise ValueError("empty label arrays")
    return float(np.mean(y_true == y_pred))


def log_loss_from_proba(proba: np.ndarray, y_true, classes) -> float:
    """Mean negative log probability of the true labels.

    `proba` columns align with `classes` (sorted labels). Probabilities are
    clipped to [1e-15, 1] before the log; a true label outside `classes`
    contributes the clipped floor.
    """
    proba = np.asarray(proba, dtype=np.float64)
    y_true = np.asarray(y_true)
    classes = np.asarray(classes)
    if proba.shape != (y_true.size, classes.size):
        raise ValueError(f"proba shape {proba.shape} vs {(y_true.size, classes.size)}")
    index = {int(c): i for i, c in enumerate(classes)}
    picked = np.array(
        [proba[i, index[int(v)]] if int(v) in index else 0.0 for i, v in enumerate(y_true)]
    )
    return float(-np.mean(np.log(np.clip(picked, PROB_FLOOR, 1.0))))


@dataclass(frozen=True)
class EvalReport:
    """Summary metrics plus one (true, predicted, predicted-probability) row per sample."""

    accuracy: float
    log_loss: float
    rows: tuple[tuple[int, int, float], ...]

    @property
    def mislabeled(self) -> tuple[tuple[int, int, float], ...]:
        return tuple(r for r in self.rows if r[0] != r[1])


def evaluate_probs(y_true, proba: np.ndarray, classes) -> EvalReport:
    """Build an EvalReport from predicted probabilities.

    The predicted label is the argmax column (ties resolve to the smallest
    label since `classes` is sorted); the reported probability is that
    column's value.
    """
    y_true = np.asarray(y_true)
    proba = np.asarray(proba, dtype=np.float64)
    classes = np.asarray(classes)
    pred_idx = np.argmax(proba, axis=1)
    y_pred = classes[pred_idx]
    rows = tuple(
        (int(t), int(p), float(proba[i, pred_idx[i]]))
        for i, (t, p) in enumerate(zip(y_true, y_pred))
    )
    return EvalReport(
        accuracy=accuracy(y_true, y_pred),
        log_loss=log_loss_from_proba(proba, y_true, classes),
        rows=rows,
    )
