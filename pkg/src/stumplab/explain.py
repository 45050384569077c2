"""Test-set explanations: weighted-probability margins, signed per-feature
contributions, table ordering, and single-stump what-if flips.

A stump's signed contribution for a sample is ``weight * (p(1) - p(0))``
at the leaf the sample lands in; summed per feature these decompose the
score difference exactly, so the displayed percentages account for the
whole prediction.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .boosting import SurrogateModel, classify, score
from .dataset import Dataset, Split
from .errors import StumpIndexOutOfRange


@dataclass
class Contribution:
    feature: int
    value: float      # signed; positive pushes toward class 1
    percent: float    # share of sum of absolute values, 0..100
    toward: int


@dataclass
class TestExplanation:
    index: int
    gt: int
    surrogate_pred: int
    target_pred: int | None
    scores: tuple[float, float]
    margin: float
    contributions: list[Contribution]


def explain_case(model: SurrogateModel, x, gt: int, target_pred: int | None = None,
                 index: int = -1) -> TestExplanation:
    x = np.asarray(x, dtype=float)
    s0, s1 = score(model, x)
    values: dict[int, float] = {}
    for stump in model.stumps:
        leaf = stump.p_right if x[stump.feature] >= stump.threshold else stump.p_left
        values[stump.feature] = values.get(stump.feature, 0.0) + stump.weight * (leaf[1] - leaf[0])

    total_abs = sum(abs(v) for v in values.values())
    contributions = []
    if total_abs > 0.0:
        for f in sorted(values):
            v = values[f]
            contributions.append(Contribution(
                feature=f,
                value=v,
                percent=abs(v) / total_abs * 100.0,
                toward=1 if v > 0 else 0,
            ))
    return TestExplanation(
        index=index,
        gt=int(gt),
        surrogate_pred=classify(model, x),
        target_pred=None if target_pred is None else int(target_pred),
        scores=(s0, s1),
        margin=abs(s0 - s1),
        contributions=contributions,
    )


def test_table(model: SurrogateModel, ds: Dataset, split: Split,
               target_preds=None) -> list[TestExplanation]:
    """One explanation per test sample: correct rows first by descending
    margin, then misclassified rows by descending margin, leaving the
    easiest-to-swap mistake last."""
    rows = []
    for k, i in enumerate(split.test_idx):
        tp = None if target_preds is None else int(target_preds.test_pred[k])
        rows.append(explain_case(model, ds.X[i], ds.y[i], target_pred=tp, index=int(i)))
    return sorted(rows, key=lambda r: (0 if r.surrogate_pred == r.gt else 1, -r.margin, r.index))


def flip_threshold(model: SurrogateModel, stump_index: int, x,
                   train_values=None) -> float | None:
    """Smallest single-stump threshold change that flips the prediction for
    ``x``, holding every leaf distribution fixed.

    The only effect such a change can have is moving ``x`` to the stump's
    other subtree, so two placements just beyond the sample's feature value
    are tried (offset = half the gap to the nearest distinct training
    value, at least 1e-6, clamped into [0, 1]). Returns None when neither
    routing yields a different class.
    """
    if not 0 <= stump_index < len(model.stumps):
        raise StumpIndexOutOfRange(stump_index, len(model.stumps))
    x = np.asarray(x, dtype=float)
    stump = model.stumps[stump_index]
    xf = float(x[stump.feature])

    eps = 1e-6
    if train_values is not None:
        vals = np.asarray(train_values, dtype=float).ravel()
        gaps = np.abs(vals - xf)
        gaps = gaps[gaps > 0]
        if gaps.size:
            eps = max(float(gaps.min()) / 2.0, 1e-6)

    candidates = []
    if xf < 1.0:
        candidates.append(min(xf + eps, 1.0))   # routes x Left
    candidates.append(max(xf - eps, 0.0))       # routes x Right

    current = classify(model, x)
    viable = []
    for t in candidates:
        trial = replace(stump, threshold=t)
        patched = SurrogateModel(
            stumps=model.stumps[:stump_index] + [trial] + model.stumps[stump_index + 1:],
            n_estimators=model.n_estimators,
            complexity_index=model.complexity_index,
            precision=model.precision,
        )
        if classify(patched, x) != current:
            viable.append(t)
    if not viable:
        return None
    return min(viable, key=lambda t: abs(t - stump.threshold))
