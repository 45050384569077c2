#!/usr/bin/env python3
"""End-to-end walkthrough on the breast-cancer-shaped table: sweep the
surrogate family, inspect a low-complexity model, override its most
impactful rule, and check the test set.

Mirrors the interactive loop headlessly; useful as a smoke test and as a
worked example of the library API.
"""

from __future__ import annotations

import argparse

import numpy as np

from stumplab.analysis import feature_importance, gini_impurity, rank_stumps
from stumplab.datagen import make_breast_cancer_csv
from stumplab.dataset import load_csv, stratified_split
from stumplab.editing import open_session, override_threshold, undo
from stumplab.explain import flip_threshold, test_table
from stumplab.projection import refresh_session_layout
from stumplab.sweep import build_sweep
from stumplab.target import builtin_predictions, fit_builtin_target


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0, help="data generator seed")
    ap.add_argument("--complexity", type=int, default=3)
    ap.add_argument("--precision", type=int, default=2)
    args = ap.parse_args()

    ds = load_csv(make_breast_cancer_csv(args.seed), "class", "malignant")
    split = stratified_split(ds, 0.8, 7)
    target = fit_builtin_target(ds, split, 42)
    preds = builtin_predictions(target, ds, split)
    gt_train = ds.y[split.train_idx]
    print(f"target: train acc {np.mean(preds.train_pred == gt_train):.3f}, "
          f"test acc {np.mean(preds.test_pred == ds.y[split.test_idx]):.3f}")

    sweep = build_sweep(ds.X[split.train_idx], preds.train_pred, gt_train,
                        iterations=50, max_n=50, seed=11)
    print(f"sweep: default model #{sweep.default_index} "
          f"(fidelity {max(sweep.fidelity[sweep.default_index - 1].values()):.4f}, "
          f"precision {sweep.default_precision})")

    k = args.complexity
    fid_k = max(sweep.fidelity[k - 1].values())
    print(f"low-complexity pick: #{k} with {sweep.models[k - 1].n_estimators} stumps, "
          f"fidelity {fid_k:.4f}")

    session = open_session(sweep, k, args.precision,
                           ds.X[split.train_idx], preds.train_pred, gt_train)
    refresh_session_layout(session)
    order = feature_importance(session.working, session.X_train, gt_train)
    names = ds.feature_names
    print("feature importance:", ", ".join(f"{names[f]}={v:.2f}" for f, v in order if v > 0))

    most_impure = rank_stumps(session.working, session.X_train, gt_train)[0]
    stump = session.working.stumps[most_impure]
    print(f"most impure stump: #{most_impure} on {names[stump.feature]} "
          f"at {stump.threshold:.2f} (gini {gini_impurity(stump, session.X_train, gt_train):.3f})")

    new_t = min(stump.threshold + 0.10, 1.0)
    impact = override_threshold(session, most_impure, new_t)
    _layout, trails = refresh_session_layout(session)
    print(f"override {stump.threshold:.2f} -> {new_t:.2f}: "
          f"{len(impact.moved_samples)} samples moved, "
          f"fidelity {impact.fidelity_before:.4f} -> {impact.fidelity_after:.4f}, "
          f"{sum(1 for t in trails if t['changed'])} trajectories flagged")
    undo(session)

    rows = test_table(session.working, ds, split, preds)
    wrong = [r for r in rows if r.surrogate_pred != r.gt]
    print(f"test set: {len(rows)} cases, {len(wrong)} misclassified")
    if wrong:
        hardest = wrong[-1]
        top = max(hardest.contributions, key=lambda c: c.percent)
        print(f"easiest-to-swap case #{hardest.index}: margin {hardest.margin:.3f}, "
              f"top contributor {names[top.feature]} ({top.percent:.1f}% toward class {top.toward})")
        for t, s in enumerate(session.working.stumps):
            flip = flip_threshold(session.working, t, ds.X[hardest.index],
                                  train_values=session.X_train[:, s.feature])
            if flip is not None:
                print(f"  what-if: moving stump #{t} ({names[s.feature]}) "
                      f"{s.threshold:.2f} -> {flip:.2f} would flip it")
                break


if __name__ == "__main__":
    main()
