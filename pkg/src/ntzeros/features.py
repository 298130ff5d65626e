"""Zero-ordinate ingestion and the 40-dimensional summary-statistic features.

A record is a modulus label q together with the imaginary parts of the first
25 nontrivial zeros of a Dirichlet L-function of conductor q, in ascending
order. The feature map condenses the 25 ordinates into 10 shape statistics
plus 30 Fourier magnitudes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

N_ZEROS = 25
N_FFT = 30

FEATURE_NAMES: tuple[str, ...] = (
    "mean_zero",
    "var_zero",
    "skew_zero",
    "mean_diff",
    "var_diff",
    "skew_diff",
    "kurt_diff",
    "mean_pairwise_diff",
    "mean_moving_avg",
    "root_mean_square",
) + tuple(f"fft_mag_{k}" for k in range(1, N_FFT + 1))

NORMALIZATION_MODES = ("raw", "centered", "zscore")


class ZerosFormatError(ValueError):
    """A zeros CSV violated the expected format. `line` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class MalformedRow(ZerosFormatError):
    pass


class NonAscendingZeros(ZerosFormatError):
    pass


class EmptyFile(ZerosFormatError):
    pass


class ZeroVariance(ValueError):
    """z-scoring a constant vector divides by zero."""


@dataclass(frozen=True)
class ZeroRecord:
    """Modulus label and the 25 ascending zero ordinates."""

    label: int
    gammas: tuple[float, ...]


def _expected_header() -> list[str]:
    return ["label"] + [f"gamma_{i}" for i in range(1, N_ZEROS + 1)]


def parse_zero_csv(source: str | Path | TextIO) -> list[ZeroRecord]:
    """Read and validate a zeros CSV (header `label,gamma_1,...,gamma_25`).

    Every row must carry a positive integer label and 25 finite, strictly
    positive, strictly ascending ordinates.

    Raises:
        EmptyFile: no header or no data rows.
        MalformedRow: wrong arity, non-numeric field, or nonpositive value.
        NonAscendingZeros: ordinates out of order.
    """
    if hasattr(source, "read"):
        return _parse_zero_stream(source)
    with open(source, newline="") as handle:
        return _parse_zero_stream(handle)


def _parse_zero_stream(handle: TextIO) -> list[ZeroRecord]:
    reader = csv.reader(handle)
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyFile("no header row") from None
    if [h.strip() for h in header] != _expected_header():
        raise MalformedRow(
            f"header must be {','.join(_expected_header())}", line=reader.line_num
        )
    records: list[ZeroRecord] = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) != N_ZEROS + 1:
            raise MalformedRow(f"expected {N_ZEROS + 1} fields, got {len(row)}", line=line)
        try:
            label = int(row[0])
        except ValueError:
            raise MalformedRow(f"label {row[0]!r} is not an integer", line=line) from None
        if label < 1:
            raise MalformedRow(f"label must be positive, got {label}", line=line)
        try:
            gammas = [float(v) for v in row[1:]]
        except ValueError:
            raise MalformedRow("non-numeric ordinate", line=line) from None
        if not all(np.isfinite(gammas)):
            raise MalformedRow("ordinates must be finite", line=line)
        if gammas[0] <= 0:
            raise MalformedRow(f"ordinates must be positive, got {gammas[0]}", line=line)
        for i in range(N_ZEROS - 1):
            if gammas[i + 1] <= gammas[i]:
                raise NonAscendingZeros(
                    f"gamma_{i + 2} = {gammas[i + 1]} is not above gamma_{i + 1} = {gammas[i]}",
                    line=line,
                )
        records.append(ZeroRecord(label, tuple(gammas)))
    if not records:
        raise EmptyFile("no data rows")
    return records


def normalize_vector(gammas: Sequence[float], mode: str) -> np.ndarray:
    """Per-vector normalization: raw copy, mean-centered, or z-scored.

    z-scoring divides by the population standard deviation.

    Raises:
        ZeroVariance: z-scoring a constant vector.
    """
    if mode not in NORMALIZATION_MODES:
        raise ValueError(f"mode must be one of {NORMALIZATION_MODES}, got {mode!r}")
    g = np.asarray(gammas, dtype=np.float64).copy()
    if mode == "raw":
        return g
    g -= g.mean()
    if mode == "zscore":
        std = np.sqrt(np.mean(g * g))
        if std == 0.0:
            raise ZeroVariance("cannot z-score a constant vector")
        g /= std
    return g


def extract_features(gammas: Sequence[float]) -> np.ndarray:
    """The 40 summary features of a 25-vector, in FEATURE_NAMES order.

    Shape statistics use population (1/n) normalizers. skew_zero is defined
    as 0 for a constant vector. The gap statistics are, in order: mean gap,
    population variance of the gaps, mean second difference, and mean
    squared gap. fft_mag_k is the magnitude of the length-25 DFT at index k
    for k = 1..30, so indices 26..30 repeat 1..5.
    """
    g = np.asarray(gammas, dtype=np.float64)
    if g.shape != (N_ZEROS,):
        raise ValueError(f"expected {N_ZEROS} ordinates, got shape {g.shape}")
    if not np.all(np.isfinite(g)):
        raise ValueError("ordinates must be finite")
    n = N_ZEROS
    mean = g.mean()
    centered = g - mean
    var = np.mean(centered**2)
    skew = 0.0 if var == 0.0 else np.mean(centered**3) / var**1.5

    diffs = np.diff(g)
    mean_diff = diffs.mean()
    var_diff = np.mean((diffs - mean_diff) ** 2)
    skew_diff = np.mean(np.diff(diffs))
    kurt_diff = np.mean(diffs**2)

    pairwise = np.abs(g[:, None] - g[None, :]).sum() / (n * n)
    moving = np.convolve(g, np.ones(3) / 3.0, mode="valid").mean()
    rms = np.sqrt(np.mean(g**2))

    mags = np.abs(np.fft.fft(g))
    fft_feats = [mags[k % n] for k in range(1, N_FFT + 1)]

    out = np.array(
        [mean, var, skew, mean_diff, var_diff, skew_diff, kurt_diff, pairwise, moving, rms]
        + fft_feats,
        dtype=np.float64,
    )
    return out


def feature_names() -> list[str]:
    """Canonical column order for engineered feature files and models."""
    return list(FEATURE_NAMES)


@dataclass(frozen=True)
class Dataset:
    """Design matrix plus labels; `classes` is the sorted distinct labels."""

    X: np.ndarray
    y: np.ndarray
    classes: np.ndarray
    feature_names: tuple[str, ...]

    def class_index(self) -> dict[int, int]:
        return {int(c): i for i, c in enumerate(self.classes)}


def build_dataset(
    records: Iterable[ZeroRecord],
    engineered: bool = True,
    normalization: str = "raw",
) -> Dataset:
    """Assemble a Dataset from parsed records, in input order.

    Rows are the (normalized) 25 ordinates when engineered is false, else
    the 40 features computed on the chosen representation.
    """
    records = list(records)
    if not records:
        raise ValueError("no records")
    rows = []
    for rec in records:
        vec = normalize_vector(rec.gammas, normalization)
        rows.append(extract_features(vec) if engineered else vec)
    X = np.vstack(rows)
    y = np.array([rec.label for rec in records], dtype=np.int64)
    names = tuple(FEATURE_NAMES) if engineered else tuple(
        f"gamma_{i}" for i in range(1, N_ZEROS + 1)
    )
    return Dataset(X=X, y=y, classes=np.unique(y), feature_names=names)


class ZeroFeatureExtractor(BaseEstimator, TransformerMixin):
    """Transformer from (n, 25) ordinate arrays to engineered feature rows.

    Parameters mirror build_dataset: `engineered` selects the 40 summary
    features, `normalization` is applied per row first.
    """

    def __init__(self, engineered: bool = True, normalization: str = "raw"):
        self.engineered = engineered
        self.normalization = normalization

    def fit(self, X, y=None):
        X = self._validate(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        X = self._validate(X)
        rows = []
        for row in X:
            vec = normalize_vector(row, self.normalization)
            rows.append(extract_features(vec) if self.engineered else vec)
        return np.vstack(rows)

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        if self.engineered:
            return np.array(FEATURE_NAMES, dtype=object)
        return np.array([f"gamma_{i}" for i in range(1, N_ZEROS + 1)], dtype=object)

    def _validate(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != N_ZEROS:
            raise ValueError(f"expected shape (n, {N_ZEROS}), got {X.shape}")
        if not np.all(np.isfinite(X)):
            raise ValueError("ordinates must be finite")
        return X


def write_feature_csv(path: str | Path, X: np.ndarray, y: np.ndarray, names: Sequence[str]) -> None:
    """Write a labeled feature matrix; floats carry 17 significant digits."""
    X = np.asarray(X)
    if X.shape[1] != len(names):
        raise ValueError(f"{X.shape[1]} columns vs {len(names)} names")
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["label", *names])
        for label, row in zip(y, X):
            writer.writerow([int(label)] + [format(v, ".17g") for v in row])


def read_feature_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray, list[str]]:
    """Read a labeled feature matrix written by write_feature_csv.

    Returns (X, y, feature_names). Any numeric feature columns are accepted;
    the first column must be `label`.
    """
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyFile("no header row") from None
        if not header or header[0].strip() != "label" or len(header) < 2:
            raise MalformedRow("header must start with 'label' and name at least one feature")
        names = [h.strip() for h in header[1:]]
        labels: list[int] = []
        rows: list[list[float]] = []
        for row in reader:
            if not row:
                continue
            line = reader.line_num
            if len(row) != len(header):
                raise MalformedRow(f"expected {len(header)} fields, got {len(row)}", line=line)
            try:
                labels.append(int(row[0]))
                rows.append([float(v) for v in row[1:]])
            except ValueError:
                raise MalformedRow("non-numeric field", line=line) from None
    if not rows:
        raise EmptyFile("no data rows")
    X = np.array(rows, dtype=np.float64)
    if not np.all(np.isfinite(X)):
        raise MalformedRow("features must be finite")
    return X, np.array(labels, dtype=np.int64), names
