"""Global behavior summaries of a stump ensemble: per-feature segmented
threshold charts, importance ordering, impurity ranking, per-stump sample
grids, and class histograms.

Impurity, grids, and histograms are computed against ground-truth labels
with uniform weights -- they describe the data the user sees, not the
boosting internals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boosting import SurrogateModel, route_right
from .errors import IndexOutOfRange
from .sweep import stump_performance


@dataclass
class Segment:
    lo: float
    hi: float
    top_class: int
    top_value: float      # summed weighted probability of the majority class
    bottom_value: float   # negated sum for the other class, <= 0


@dataclass
class FeatureSummary:
    feature: int
    boundaries: list[float]
    segments: list[Segment]


@dataclass
class SampleGridRow:
    index: int
    side: str             # "Left" | "Right"
    p_gt: float
    gt: int


def summarize_feature(model: SurrogateModel, feature: int) -> FeatureSummary:
    """Segmented vote chart for one feature.

    Boundaries are the distinct thresholds of the feature's stumps inside
    (0, 1); each of the resulting intervals tiling [0, 1] gets the summed
    weighted probability of its majority class above zero and of the other
    class below. Thresholds at exactly 0 or 1 create no segment boundary
    (the interval would be empty) but their stumps still vote.
    """
    stumps = [s for s in model.stumps if s.feature == feature]
    if not stumps:
        return FeatureSummary(feature=feature, boundaries=[], segments=[])
    boundaries = sorted({s.threshold for s in stumps if 0.0 < s.threshold < 1.0})
    edges = [0.0] + boundaries + [1.0]
    segments = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = (lo + hi) / 2.0
        s0 = 0.0
        s1 = 0.0
        for s in stumps:
            p = s.p_right if mid >= s.threshold else s.p_left
            s0 += s.weight * p[0]
            s1 += s.weight * p[1]
        top = 1 if s1 > s0 else 0
        segments.append(Segment(
            lo=lo, hi=hi, top_class=top,
            top_value=max(s0, s1),
            bottom_value=-min(s0, s1),
        ))
    return FeatureSummary(feature=feature, boundaries=boundaries, segments=segments)


def feature_importance(model: SurrogateModel, X_train, gt_labels) -> list[tuple[int, float]]:
    """Features ordered by the summed performance of their stumps,
    descending; ties keep the lower feature index first."""
    X_train = np.asarray(X_train, dtype=float)
    scores = {f: 0.0 for f in range(X_train.shape[1])}
    perf = stump_performance(model, X_train, gt_labels)
    for s, p in zip(model.stumps, perf):
        scores[s.feature] += p
    return sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))


def gini_impurity(stump, X_train, gt_labels) -> float:
    """Sample-weighted mean of the two subtrees' Gini indices over
    ground-truth labels; empty subtrees contribute zero."""
    X_train = np.asarray(X_train, dtype=float)
    gt = np.asarray(gt_labels, dtype=int)
    right = route_right(stump, X_train)

    def leaf(mask):
        n = int(np.sum(mask))
        if n == 0:
            return 0.0, 0
        q1 = int(np.sum(gt[mask] == 1)) / n
        q0 = 1.0 - q1
        return 1.0 - q0 * q0 - q1 * q1, n

    g_l, n_l = leaf(~right)
    g_r, n_r = leaf(right)
    total = n_l + n_r
    return 0.0 if total == 0 else (n_l * g_l + n_r * g_r) / total


def rank_stumps(model: SurrogateModel, X_train, gt_labels) -> list[int]:
    """Stump indices from most to least impure; ties keep boosting order.
    The first entry is the default selection for rule inspection."""
    ginis = [gini_impurity(s, X_train, gt_labels) for s in model.stumps]
    return sorted(range(len(model.stumps)), key=lambda t: (-ginis[t], t))


def sample_grid(stump, X_train, gt_labels) -> tuple[list[SampleGridRow], list[SampleGridRow]]:
    """Training samples partitioned by subtree, each side ordered by the
    leaf probability of the sample's own GT class, descending -- so
    misclassified samples sink to the end of their side."""
    X_train = np.asarray(X_train, dtype=float)
    gt = np.asarray(gt_labels, dtype=int)
    right = route_right(stump, X_train)

    def rows(mask, side, p):
        got = [
            SampleGridRow(index=int(i), side=side, p_gt=float(p[gt[i]]), gt=int(gt[i]))
            for i in np.flatnonzero(mask)
        ]
        return sorted(got, key=lambda r: (-r.p_gt, r.index))

    return rows(~right, "Left", stump.p_left), rows(right, "Right", stump.p_right)


def feature_histogram(X_train, gt_labels, feature: int, precision) -> list[dict]:
    """GT class counts in 10 bins (precision 1) or 20 bins (higher
    precision) uniformly tiling [0, 1]; the last bin includes 1.0."""
    X_train = np.asarray(X_train, dtype=float)
    gt = np.asarray(gt_labels, dtype=int)
    if not 0 <= feature < X_train.shape[1]:
        raise IndexOutOfRange("feature", feature, X_train.shape[1])
    nbins = 10 if precision == 1 else 20
    vals = X_train[:, feature]
    idx = np.minimum((vals * nbins).astype(int), nbins - 1)
    bins = []
    for b in range(nbins):
        mask = idx == b
        bins.append({
            "lo": b / nbins,
            "hi": (b + 1) / nbins,
            "counts": [int(np.sum(mask & (gt == 0))), int(np.sum(mask & (gt == 1)))],
        })
    return bins
