"""Weighted decision stumps and discrete AdaBoost ensembles over them.

A stump routes samples with ``x[feature] < threshold`` to its Left subtree
and everything else (equality included) to the Right. Each subtree carries
a class distribution; an ensemble classifies by summing ``weight * p(c)``
over the subtrees a sample lands in and taking the argmax (ties go to
class 0).

The boosting loop is the two-class discrete scheme: per round, a stump is
fit on ``ceil(sqrt(d))`` candidate features drawn without replacement from
the model's SplitMix64 stream, its weighted misclassification rate is
clamped into ``[1e-10, 1 - 1e-10]``, the stump weight is
``ln((1 - err) / err)`` floored at zero, and sample weights are scaled by
``exp(weight)`` on misclassified rows and renormalized. Rounds that do no
better than chance still emit their stump (at weight 0) so the ensemble
size always equals the requested round count.

Scalar reductions that enter the fit trace (errors, renormalization
totals) are sequential sums, matching the contract in ``splitting``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .rng import SplitMix64
from .splitting import best_split, side_distribution

ERR_CLAMP = 1e-10


@dataclass
class DecisionStump:
    feature: int
    threshold: float
    p_left: tuple[float, float]
    p_right: tuple[float, float]
    weight: float = 1.0
    counts_left: tuple[int, int] = (0, 0)
    counts_right: tuple[int, int] = (0, 0)
    degenerate: bool = False


@dataclass
class SurrogateModel:
    stumps: list[DecisionStump]
    n_estimators: int
    complexity_index: int = 0      # 1-based position in a sweep, 0 = unplaced
    precision: int | str = "full"  # decimals thresholds are rounded to


def route_right(stump: DecisionStump, X: np.ndarray) -> np.ndarray:
    """Boolean row mask, True where the sample routes Right."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    return X[:, stump.feature] >= stump.threshold


def _leaf_counts(mask_right, labels) -> tuple[tuple[int, int], tuple[int, int]]:
    labels = np.asarray(labels, dtype=int)
    left = ~mask_right
    cl = (int(np.sum(left & (labels == 0))), int(np.sum(left & (labels == 1))))
    cr = (int(np.sum(mask_right & (labels == 0))), int(np.sum(mask_right & (labels == 1))))
    return cl, cr


def _degenerate_stump(feature, labels, sample_weights, count_labels) -> DecisionStump:
    labels = np.asarray(labels, dtype=int)
    w = np.asarray(sample_weights, dtype=float)
    w0 = float(np.cumsum(w * (labels == 0))[-1]) if labels.size else 0.0
    w1 = float(np.cumsum(w * (labels == 1))[-1]) if labels.size else 0.0
    counts_basis = labels if count_labels is None else np.asarray(count_labels, dtype=int)
    _, cr = _leaf_counts(np.ones(labels.size, dtype=bool), counts_basis)
    return DecisionStump(
        feature=int(feature),
        threshold=0.0,
        p_left=(0.5, 0.5),
        p_right=side_distribution(w0, w1),
        counts_left=(0, 0),
        counts_right=cr,
        degenerate=True,
    )


def fit_stump(X, labels, sample_weights, candidate_features, *, count_labels=None) -> DecisionStump:
    """Best weighted-Gini stump over the candidate features.

    Leaf distributions are the sample-weight-weighted class frequencies of
    each side; ``counts_*`` are unweighted per-class tallies of
    ``count_labels`` (defaults to ``labels``) for display. When every
    candidate column is constant the returned stump is degenerate: it
    routes everything Right and predicts the global class frequencies.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    labels = np.asarray(labels, dtype=int)
    cand = best_split(X, labels, sample_weights, candidate_features)
    if cand is None:
        return _degenerate_stump(min(candidate_features), labels, sample_weights, count_labels)
    stump = DecisionStump(
        feature=cand.feature,
        threshold=cand.threshold,
        p_left=side_distribution(*cand.w_left),
        p_right=side_distribution(*cand.w_right),
    )
    basis = labels if count_labels is None else count_labels
    stump.counts_left, stump.counts_right = _leaf_counts(route_right(stump, X), basis)
    return stump


def stump_predictions(stump: DecisionStump, X) -> np.ndarray:
    """Hard label per row: the argmax of the landed leaf (tie -> class 0)."""
    right = route_right(stump, X)
    pred_left = 1 if stump.p_left[1] > stump.p_left[0] else 0
    pred_right = 1 if stump.p_right[1] > stump.p_right[0] else 0
    return np.where(right, pred_right, pred_left).astype(int)


def fit_adaboost(X, target_labels, n_estimators, seed, *, count_labels=None,
                 trace_sink: list | None = None) -> SurrogateModel:
    """Fit the boosted stump ensemble that mimics ``target_labels``.

    Deterministic for a fixed seed: the per-round feature subsets come from
    a SplitMix64 stream seeded here. If only one class is present the model
    degenerates to a single constant stump. ``trace_sink``, when given,
    receives one dict per round (candidate subset, clamped error, weight)
    for trace-level verification.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    y = np.asarray(target_labels, dtype=int)
    n, d = X.shape
    if np.unique(y).size < 2:
        stump = _degenerate_stump(0, y, np.full(n, 1.0 / n), count_labels)
        stump.weight = math.log((1.0 - ERR_CLAMP) / ERR_CLAMP)
        return SurrogateModel(stumps=[stump], n_estimators=1)

    k = math.ceil(math.sqrt(d))
    rng = SplitMix64(seed)
    w = np.full(n, 1.0 / n)
    stumps: list[DecisionStump] = []
    for _ in range(n_estimators):
        subset = rng.sample(d, k)
        stump = fit_stump(X, y, w, subset, count_labels=count_labels)
        mis = stump_predictions(stump, X) != y
        err = float(np.cumsum(w * mis)[-1])
        err = min(max(err, ERR_CLAMP), 1.0 - ERR_CLAMP)
        weight = math.log((1.0 - err) / err)
        stump.weight = max(weight, 0.0)
        stumps.append(stump)
        if trace_sink is not None:
            trace_sink.append({"subset": list(subset), "err": err, "weight": stump.weight})
        # exp taken once on the scalar weight so a straight-line reimplementation
        # reproduces the weight stream bit-for-bit
        w = w * np.where(mis, math.exp(stump.weight), 1.0)
        w = w / np.cumsum(w)[-1]
    return SurrogateModel(stumps=stumps, n_estimators=n_estimators)


def score_matrix(model: SurrogateModel, X) -> np.ndarray:
    """Per-row weighted-probability scores, shape (n, 2).

    ``s[i, c] = sum_t weight_t * p_leaf(c)`` over the subtree row i lands
    in for stump t, accumulated in boosting order.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    s = np.zeros((X.shape[0], 2))
    for stump in model.stumps:
        right = route_right(stump, X)
        s[:, 0] += stump.weight * np.where(right, stump.p_right[0], stump.p_left[0])
        s[:, 1] += stump.weight * np.where(right, stump.p_right[1], stump.p_left[1])
    return s


def score(model: SurrogateModel, x) -> tuple[float, float]:
    s = score_matrix(model, np.asarray(x, dtype=float).reshape(1, -1))
    return (float(s[0, 0]), float(s[0, 1]))


def classify_matrix(model: SurrogateModel, X) -> np.ndarray:
    """Hard labels; exact score ties resolve to class 0."""
    s = score_matrix(model, X)
    return (s[:, 1] > s[:, 0]).astype(int)


def classify(model: SurrogateModel, x) -> int:
    return int(classify_matrix(model, np.asarray(x, dtype=float).reshape(1, -1))[0])


def refit_leaves(stump: DecisionStump, X, labels, instance_weights=None, *, count_labels=None) -> DecisionStump:
    """Recompute leaf distributions and counts for a (possibly re-thresholded)
    stump; the boosting weight is preserved.

    Uses uniform instance weights unless given: post-hoc edits happen
    outside the boosting sequence, so leaves reflect raw sample
    distributions. An empty side gets the neutral (0.5, 0.5) distribution
    and the stump is flagged degenerate.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    labels = np.asarray(labels, dtype=int)
    n = X.shape[0]
    w = np.full(n, 1.0 / n) if instance_weights is None else np.asarray(instance_weights, dtype=float)
    right = route_right(stump, X)
    w0L = float(np.cumsum(w * ((labels == 0) & ~right))[-1]) if n else 0.0
    w1L = float(np.cumsum(w * ((labels == 1) & ~right))[-1]) if n else 0.0
    w0R = float(np.cumsum(w * ((labels == 0) & right))[-1]) if n else 0.0
    w1R = float(np.cumsum(w * ((labels == 1) & right))[-1]) if n else 0.0
    basis = labels if count_labels is None else count_labels
    counts_left, counts_right = _leaf_counts(right, basis)
    empty_side = (counts_left == (0, 0)) or (counts_right == (0, 0))
    return replace(
        stump,
        p_left=side_distribution(w0L, w1L),
        p_right=side_distribution(w0R, w1R),
        counts_left=counts_left,
        counts_right=counts_right,
        degenerate=empty_side,
    )


def stump_to_json(stump: DecisionStump) -> dict:
    return {
        "feature": stump.feature,
        "threshold": stump.threshold,
        "p_left": [stump.p_left[0], stump.p_left[1]],
        "p_right": [stump.p_right[0], stump.p_right[1]],
        "weight": stump.weight,
        "counts": {
            "left": [stump.counts_left[0], stump.counts_left[1]],
            "right": [stump.counts_right[0], stump.counts_right[1]],
        },
        "degenerate": stump.degenerate,
    }


def stump_from_json(doc: dict) -> DecisionStump:
    return DecisionStump(
        feature=int(doc["feature"]),
        threshold=float(doc["threshold"]),
        p_left=tuple(doc["p_left"]),
        p_right=tuple(doc["p_right"]),
        weight=float(doc["weight"]),
        counts_left=tuple(doc["counts"]["left"]),
        counts_right=tuple(doc["counts"]["right"]),
        degenerate=bool(doc.get("degenerate", False)),
    )


def model_to_json(model: SurrogateModel) -> dict:
    return {
        "complexity_index": model.complexity_index,
        "n_estimators": model.n_estimators,
        "precision": model.precision,
        "stumps": [stump_to_json(s) for s in model.stumps],
    }


def model_from_json(doc: dict) -> SurrogateModel:
    return SurrogateModel(
        stumps=[stump_from_json(s) for s in doc["stumps"]],
        n_estimators=int(doc["n_estimators"]),
        complexity_index=int(doc["complexity_index"]),
        precision=doc["precision"],
    )
