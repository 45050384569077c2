"""Tabular ingestion: CSV loading, [0, 1] min-max normalization, and seeded
stratified train/test splitting.

Labels are binarized at load time (the user-chosen positive label becomes
class 1); multi-class data is rejected. Constant feature columns normalize
to all-zero rather than erroring -- downstream stump fitting simply never
splits on them.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ClassTooSmall,
    EmptyDataset,
    InvalidLabel,
    MissingColumn,
    MoreThanTwoClasses,
    NonFiniteInput,
    NonNumericCell,
)
from .rng import SplitMix64


@dataclass(frozen=True)
class Dataset:
    feature_names: list[str]
    X_raw: np.ndarray          # n_samples x n_features, original units
    X: np.ndarray              # same shape, min-max mapped into [0, 1]
    y: np.ndarray              # int labels in {0, 1}
    class_names: tuple[str, str]   # (negative, positive)
    norm_params: list[tuple[float, float]]  # per-feature (min, max)

    @property
    def n_samples(self) -> int:
        return self.X.shape[0]

    @property
    def n_features(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True)
class Split:
    train_idx: np.ndarray
    test_idx: np.ndarray
    seed: int
    ratio: float


def normalize_minmax(X_raw: np.ndarray) -> tuple[np.ndarray, list[tuple[float, float]]]:
    """Per-column affine map onto [0, 1]; constant columns map to 0.0.

    Returns the normalized matrix and the per-feature (min, max) pairs
    needed to invert the map for display.
    """
    X_raw = np.asarray(X_raw, dtype=float)
    if not np.all(np.isfinite(X_raw)):
        raise NonFiniteInput()
    X = np.zeros_like(X_raw)
    params = []
    for j in range(X_raw.shape[1]):
        lo = float(X_raw[:, j].min())
        hi = float(X_raw[:, j].max())
        if hi > lo:
            X[:, j] = (X_raw[:, j] - lo) / (hi - lo)
        params.append((lo, hi))
    return X, params


def denormalize(X: np.ndarray, norm_params: list[tuple[float, float]]) -> np.ndarray:
    """Inverse of :func:`normalize_minmax` (constant columns return min)."""
    X = np.asarray(X, dtype=float)
    out = np.empty_like(X)
    for j, (lo, hi) in enumerate(norm_params):
        out[:, j] = X[:, j] * (hi - lo) + lo
    return out


def load_csv(source, label_column: str, positive_label: str) -> Dataset:
    """Parse a UTF-8, comma-separated, headered CSV into a Dataset.

    ``source`` may be a byte stream, a text stream, bytes, or str. All
    non-label cells must parse as finite reals; the label column must have
    exactly two distinct values, one of which is ``positive_label``.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyDataset("file is empty") from None
    header = [h.strip() for h in header]
    if label_column not in header:
        raise MissingColumn(label_column)
    label_pos = header.index(label_column)
    feature_names = [h for i, h in enumerate(header) if i != label_pos]

    rows: list[list[float]] = []
    labels: list[str] = []
    for r, record in enumerate(reader):
        if not record or all(cell.strip() == "" for cell in record):
            continue
        vals = []
        for i, cell in enumerate(record):
            if i == label_pos:
                labels.append(cell.strip())
                continue
            col = header[i] if i < len(header) else f"column {i}"
            try:
                v = float(cell)
            except ValueError:
                raise NonNumericCell(r, col) from None
            if not math.isfinite(v):
                raise NonNumericCell(r, col)
            vals.append(v)
        if len(vals) != len(feature_names):
            raise NonNumericCell(r, "<row length>")
        rows.append(vals)

    if not rows:
        raise EmptyDataset()
    distinct = sorted(set(labels))
    if len(distinct) != 2:
        raise MoreThanTwoClasses(distinct)
    if positive_label not in distinct:
        raise InvalidLabel(positive_label, expected=f"one of {distinct}")
    negative_label = next(v for v in distinct if v != positive_label)

    X_raw = np.array(rows, dtype=float)
    y = np.array([1 if v == positive_label else 0 for v in labels], dtype=int)
    X, params = normalize_minmax(X_raw)
    return Dataset(
        feature_names=feature_names,
        X_raw=X_raw,
        X=X,
        y=y,
        class_names=(negative_label, positive_label),
        norm_params=params,
    )


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def stratified_split(ds: Dataset, ratio: float, seed: int) -> Split:
    """Seeded stratified split: per class, round(ratio * class_size) samples
    go to train (half-up rounding), the rest to test.

    Shuffling within each class consumes the shared SplitMix64 stream, class
    0 first then class 1, so the split is reproducible from the seed alone.
    """
    if not 0.0 < ratio < 1.0:
        raise ValueError(f"ratio must be in (0, 1), got {ratio}")
    rng = SplitMix64(seed)
    train: list[int] = []
    test: list[int] = []
    for c in (0, 1):
        idx = [int(i) for i in np.flatnonzero(ds.y == c)]
        if len(idx) < 2:
            raise ClassTooSmall(c, len(idx))
        rng.shuffle(idx)
        n_train = _round_half_up(ratio * len(idx))
        train.extend(idx[:n_train])
        test.extend(idx[n_train:])
    return Split(
        train_idx=np.array(sorted(train), dtype=int),
        test_idx=np.array(sorted(test), dtype=int),
        seed=seed,
        ratio=ratio,
    )
