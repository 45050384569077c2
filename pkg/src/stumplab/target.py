"""The complex model whose behavior the surrogate approximates.

The engine is model-agnostic: fidelity is always computed against a vector
of hard target predictions, never against ground truth. Predictions can
come from the builtin bagged-tree ensemble below or from a CSV produced by
any external stack (``index,label`` rows covering every sample).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, Split
from .errors import DegenerateTraining, DimensionMismatch, InvalidLabel, MissingIndex
from .rng import SplitMix64
from .splitting import best_split


@dataclass
class _Node:
    feature: int = -1          # -1 marks a leaf
    threshold: float = 0.0
    label: int = 0
    left: "_Node | None" = None
    right: "_Node | None" = None


@dataclass
class BuiltinTarget:
    trees: list[_Node]
    n_features: int
    seed: int


@dataclass(frozen=True)
class TargetPredictions:
    train_pred: np.ndarray
    test_pred: np.ndarray
    source: str                # "builtin" | "external-file"


def _majority(y: np.ndarray) -> int:
    ones = int(np.sum(y == 1))
    zeros = y.size - ones
    return 1 if ones > zeros else 0


def _grow(X, y, w, depth: int, max_depth: int) -> _Node:
    if depth >= max_depth or np.unique(y).size < 2:
        return _Node(label=_majority(y))
    cand = best_split(X, y, w, range(X.shape[1]))
    if cand is None:
        return _Node(label=_majority(y))
    mask = X[:, cand.feature] >= cand.threshold
    return _Node(
        feature=cand.feature,
        threshold=cand.threshold,
        left=_grow(X[~mask], y[~mask], w[~mask], depth + 1, max_depth),
        right=_grow(X[mask], y[mask], w[mask], depth + 1, max_depth),
    )


def fit_builtin_target(ds: Dataset, split: Split, seed: int, n_trees: int = 100,
                       max_depth: int = 4) -> BuiltinTarget:
    """Bagged depth-limited Gini trees over the training partition.

    Bootstrap draws come from a SplitMix64 stream, so the ensemble is
    reproducible from the seed.
    """
    X = ds.X[split.train_idx]
    y = ds.y[split.train_idx]
    if np.unique(y).size < 2:
        raise DegenerateTraining()
    n = X.shape[0]
    rng = SplitMix64(seed)
    trees = []
    for _ in range(n_trees):
        boot = np.array([rng.next_below(n) for _ in range(n)], dtype=int)
        Xb, yb = X[boot], y[boot]
        trees.append(_grow(Xb, yb, np.ones(n), 0, max_depth))
    return BuiltinTarget(trees=trees, n_features=X.shape[1], seed=seed)


def _tree_predict(node: _Node, X: np.ndarray) -> np.ndarray:
    out = np.empty(X.shape[0], dtype=int)
    stack = [(node, np.arange(X.shape[0]))]
    while stack:
        nd, idx = stack.pop()
        if idx.size == 0:
            continue
        if nd.feature < 0:
            out[idx] = nd.label
            continue
        mask = X[idx, nd.feature] >= nd.threshold
        stack.append((nd.left, idx[~mask]))
        stack.append((nd.right, idx[mask]))
    return out


def predict(target: BuiltinTarget, X) -> np.ndarray:
    """Majority vote over the bagged trees (ties go to class 0)."""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(0, target.n_features) if X.size == 0 else X.reshape(1, -1)
    if X.shape[0] == 0:
        return np.empty(0, dtype=int)
    if X.shape[1] != target.n_features:
        raise DimensionMismatch(target.n_features, X.shape[1])
    votes = np.zeros(X.shape[0], dtype=int)
    for tree in target.trees:
        votes += _tree_predict(tree, X)
    return (votes * 2 > len(target.trees)).astype(int)


def builtin_predictions(target: BuiltinTarget, ds: Dataset, split: Split) -> TargetPredictions:
    return TargetPredictions(
        train_pred=predict(target, ds.X[split.train_idx]),
        test_pred=predict(target, ds.X[split.test_idx]),
        source="builtin",
    )


def load_external_predictions(source, split: Split) -> TargetPredictions:
    """Parse an ``index,label`` CSV covering every train and test index."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    labels: dict[int, int] = {}
    rows = [] if header is None else ([header] if header[0].strip().isdigit() else [])
    rows += [r for r in reader if r and any(c.strip() for c in r)]
    for r in rows:
        try:
            idx = int(r[0])
        except (ValueError, IndexError):
            raise InvalidLabel(r[0] if r else "", expected="an integer sample index") from None
        val = r[1].strip() if len(r) > 1 else ""
        if val not in ("0", "1"):
            raise InvalidLabel(val)
        labels[idx] = int(val)

    def gather(indices):
        out = np.empty(len(indices), dtype=int)
        for k, i in enumerate(indices):
            i = int(i)
            if i not in labels:
                raise MissingIndex(i)
            out[k] = labels[i]
        return out

    return TargetPredictions(
        train_pred=gather(split.train_idx),
        test_pred=gather(split.test_idx),
        source="external-file",
    )
