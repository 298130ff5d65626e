"""Per-class train/validation/test splitting with label-dependent test quotas."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class InsufficientClassSamples(ValueError):
    """A class cannot fill its test quota and still leave training data."""


@dataclass(frozen=True)
class SplitResult:
    """Row indices per role, each sorted ascending."""

    train: np.ndarray
    validation: np.ndarray
    test: np.ndarray


def split_by_label_quota(
    labels,
    seed: int,
    small_q_cut: int = 100,
    q_max: int = 200,
    validation_fraction: float = 0.2,
    test_quota_small: int = 1,
    test_quota_large: int = 2,
) -> SplitResult:
    """Quota-based split: per class, hold out a fixed number of test rows.

    Classes with label <= small_q_cut contribute test_quota_small test rows,
    classes up to q_max contribute test_quota_large, and labels beyond q_max
    are dropped entirely. A validation_fraction share of each class's
    remainder (rounded) goes to validation, the rest to train. Classes are
    processed in ascending label order from one seeded generator, so the
    split is a pure function of (labels, seed, quotas).

    Raises:
        InsufficientClassSamples: a class has no training rows left after
            filling its quota.
    """
    labels = np.asarray(labels)
    if labels.ndim != 1 or labels.size == 0:
        raise ValueError("labels must be a nonempty 1-d array")
    if not 0.0 <= validation_fraction < 1.0:
        raise ValueError(f"validation_fraction must be in [0, 1), got {validation_fraction}")
    if test_quota_small < 0 or test_quota_large < 0:
        raise ValueError("test quotas must be >= 0")
    rng = np.random.default_rng(seed)
    train: list[np.ndarray] = []
    val: list[np.ndarray] = []
    test: list[np.ndarray] = []
    for c in np.unique(labels):
        if c > q_max:
            continue
        idx = np.flatnonzero(labels == c)
        quota = test_quota_small if c <= small_q_cut else test_quota_large
        if idx.size <= quota:
            raise InsufficientClassSamples(
                f"class {c} has {idx.size} rows; quota {quota} leaves nothing to train on"
            )
        perm = rng.permutation(idx)
        test.append(perm[:quota])
        rest = perm[quota:]
        n_val = int(round(validation_fraction * rest.size))
        val.append(rest[:n_val])
        train.append(rest[n_val:])

    def gather(parts: list[np.ndarray]) -> np.ndarray:
        if not parts:
            return np.array([], dtype=np.intp)
        return np.sort(np.concatenate(parts)).astype(np.intp)

    return SplitResult(train=gather(train), validation=gather(val), test=gather(test))
