"""Weighted one-feature split search shared by stump fitting and the
builtin target's trees.

The arithmetic here is a reproducibility contract, not an implementation
detail: an independent straight-line implementation must arrive at
bit-identical split choices. Concretely, for one feature column:

1. sort sample indices by feature value with a *stable* sort;
2. form per-class weight prefix sums over that order via cumulative sums
   (i.e. strict left-to-right sequential addition, zero terms included);
3. candidate boundaries sit between consecutive *distinct* sorted values,
   with threshold = (v_i + v_{i+1}) / 2;
4. at a boundary, left sums are the prefixes and right sums are
   ``total - prefix`` where ``total`` is the last prefix entry;
5. a side's Gini is ``1 - q0*q0 - q1*q1`` with ``q_c = w_c / ws`` (squares
   written as products); a side whose weight sum is zero contributes 0;
6. split impurity is ``(wL*G_L + wR*G_R) / (wL + wR)`` with the side terms
   replaced by 0 for zero-weight sides;
7. the best split minimizes impurity, ties broken by lower feature index,
   then lower threshold (realized by scanning features in ascending order
   and thresholds in ascending order, keeping strictly-better candidates).

numpy's elementwise ops and ``cumsum`` follow IEEE-754 in exactly this
order, so the vectorized code below and a pure-Python loop agree to the
last bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class SplitCandidate:
    feature: int
    threshold: float
    impurity: float
    w_left: tuple[float, float]    # per-class weight sums, left side
    w_right: tuple[float, float]


def feature_split_table(xcol, y, w):
    """All candidate splits on one feature column.

    Returns (thresholds, impurities, w0L, w1L, w0R, w1R) as aligned arrays,
    empty when the column is constant.
    """
    xcol = np.asarray(xcol, dtype=float)
    y = np.asarray(y, dtype=int)
    w = np.asarray(w, dtype=float)
    order = np.argsort(xcol, kind="stable")
    xs = xcol[order]
    ys = y[order]
    ws = w[order]

    boundary = np.flatnonzero(xs[:-1] != xs[1:])
    if boundary.size == 0:
        z = np.empty(0)
        return z, z, z, z, z, z

    prefix0 = np.cumsum(ws * (ys == 0))
    prefix1 = np.cumsum(ws * (ys == 1))
    total0 = prefix0[-1]
    total1 = prefix1[-1]

    thresholds = (xs[boundary] + xs[boundary + 1]) / 2.0
    w0L = prefix0[boundary]
    w1L = prefix1[boundary]
    w0R = total0 - w0L
    w1R = total1 - w1L
    wL = w0L + w1L
    wR = w0R + w1R

    with np.errstate(divide="ignore", invalid="ignore"):
        q0L, q1L = w0L / wL, w1L / wL
        q0R, q1R = w0R / wR, w1R / wR
        giniL = 1.0 - q0L * q0L - q1L * q1L
        giniR = 1.0 - q0R * q0R - q1R * q1R
    contribL = np.where(wL > 0, wL * giniL, 0.0)
    contribR = np.where(wR > 0, wR * giniR, 0.0)
    impurities = (contribL + contribR) / (wL + wR)
    return thresholds, impurities, w0L, w1L, w0R, w1R


def best_split(X, y, w, features) -> SplitCandidate | None:
    """Minimum-impurity split over the given feature indices.

    ``features`` is scanned in ascending index order; returns None when all
    candidate columns are constant.
    """
    best: SplitCandidate | None = None
    for f in sorted(int(f) for f in features):
        thresholds, impurities, w0L, w1L, w0R, w1R = feature_split_table(X[:, f], y, w)
        if thresholds.size == 0:
            continue
        k = int(np.argmin(impurities))
        if best is None or impurities[k] < best.impurity:
            best = SplitCandidate(
                feature=f,
                threshold=float(thresholds[k]),
                impurity=float(impurities[k]),
                w_left=(float(w0L[k]), float(w1L[k])),
                w_right=(float(w0R[k]), float(w1R[k])),
            )
    return best


def side_distribution(w0: float, w1: float) -> tuple[float, float]:
    """Weighted class frequencies of one side; (0.5, 0.5) when empty."""
    tot = w0 + w1
    if tot <= 0.0:
        return (0.5, 0.5)
    return (w0 / tot, w1 / tot)
