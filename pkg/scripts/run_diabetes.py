#!/usr/bin/env python3
"""Behavioral-summary scenario on the diabetes-shaped table: start from the
default (highest-fidelity) surrogate, read the per-feature stump summary,
and hunt for self-cancelling rules (stumps whose subtree sits at 50/50)."""

from __future__ import annotations

import argparse

import numpy as np

from stumplab.analysis import feature_importance, summarize_feature
from stumplab.datagen import make_diabetes_csv
from stumplab.dataset import load_csv, stratified_split
from stumplab.editing import open_session
from stumplab.sweep import build_sweep
from stumplab.target import builtin_predictions, fit_builtin_target


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ds = load_csv(make_diabetes_csv(args.seed), "outcome", "positive")
    split = stratified_split(ds, 0.8, 7)
    target = fit_builtin_target(ds, split, 42)
    preds = builtin_predictions(target, ds, split)
    gt_train = ds.y[split.train_idx]
    sweep = build_sweep(ds.X[split.train_idx], preds.train_pred, gt_train,
                        iterations=50, max_n=50, seed=11)
    k = sweep.default_index
    print(f"default surrogate: #{k} ({sweep.models[k - 1].n_estimators} stumps, "
          f"fidelity {max(sweep.fidelity[k - 1].values()):.4f})")

    session = open_session(sweep, k, sweep.default_precision,
                           ds.X[split.train_idx], preds.train_pred, gt_train)
    model = session.working
    names = ds.feature_names
    order = feature_importance(model, session.X_train, gt_train)
    active = [(f, v) for f, v in order if v > 0]
    print("most important features:", ", ".join(names[f] for f, _ in active[:3]))

    for f, _score in active:
        stumps = [(t, s) for t, s in enumerate(model.stumps) if s.feature == f]
        pos = sum(1 for _, s in stumps
                  if max(s.p_left[1], s.p_right[1]) >= 0.5 and s.p_right[1] >= s.p_left[1])
        summary = summarize_feature(model, f)
        print(f"{names[f]}: {len(stumps)} stumps, {len(summary.segments)} segments")
        for t, s in stumps:
            for side, p in (("left", s.p_left), ("right", s.p_right)):
                if abs(p[1] - 0.5) < 0.02:
                    print(f"  stump #{t} (weight {s.weight:.2f}) is nearly 50/50 on the "
                          f"{side} subtree: it cancels itself out of the vote")


if __name__ == "__main__":
    main()
