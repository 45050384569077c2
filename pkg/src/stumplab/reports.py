"""JSON document composers shared by the CLI and the HTTP service.

Both front doors emit these documents verbatim, which is what makes
CLI-vs-API parity a byte comparison instead of a semantic one.
"""

from __future__ import annotations

import numpy as np

from .analysis import (
    feature_histogram,
    feature_importance,
    gini_impurity,
    rank_stumps,
    sample_grid,
    summarize_feature,
)
from .boosting import stump_to_json
from .editing import EditImpact, EditSession
from .explain import TestExplanation
from .projection import Layout, local_side_labels
from .sweep import PRECISIONS, stump_performance


def layout_doc(layout: Layout, side_labels: list[str], changed=None) -> dict:
    """Rows of [x, y, side, changed]."""
    changed = [False] * len(side_labels) if changed is None else changed
    return {
        "method": layout.method,
        "alignment_ref": layout.alignment_ref,
        "points": [
            [float(layout.coords[i, 0]), float(layout.coords[i, 1]), side_labels[i], bool(changed[i])]
            for i in range(len(side_labels))
        ],
    }


def session_summary_doc(session: EditSession, feature_names: list[str]) -> dict:
    """Everything the behavior/override views need, computed on the
    session's working model."""
    model = session.working
    X, gt = session.X_train, session.gt_labels
    importance = feature_importance(model, X, gt)
    perf = stump_performance(model, X, gt)
    ranking = rank_stumps(model, X, gt)
    default_stump = ranking[0] if ranking else None

    summaries = []
    for f, score_f in importance:
        if not any(s.feature == f for s in model.stumps):
            continue
        summary = summarize_feature(model, f)
        summaries.append({
            "feature": f,
            "feature_name": feature_names[f],
            "importance": score_f,
            "boundaries": summary.boundaries,
            "segments": [
                {"lo": seg.lo, "hi": seg.hi, "top_class": seg.top_class,
                 "top_value": seg.top_value, "bottom_value": seg.bottom_value}
                for seg in summary.segments
            ],
            "histogram": feature_histogram(X, gt, f, session.precision),
        })

    grids = []
    for t, stump in enumerate(model.stumps):
        left, right = sample_grid(stump, X, gt)
        grids.append({
            "stump_index": t,
            "left": [[r.index, r.p_gt, r.gt] for r in left],
            "right": [[r.index, r.p_gt, r.gt] for r in right],
        })

    side_labels = (
        local_side_labels(model, default_stump, X)
        if default_stump is not None else ["Right"] * X.shape[0]
    )
    layout, _ = _current_layout(session)

    return {
        "session_id": session.session_id,
        "complexity_index": model.complexity_index,
        "n_estimators": model.n_estimators,
        "precision": session.precision,
        "edit_count": len(session.edit_log),
        "fidelity": {str(p): session.fidelity_cache[p] for p in PRECISIONS},
        "stumps": [
            dict(stump_to_json(s), feature_name=feature_names[s.feature],
                 gini=gini_impurity(s, X, gt), performance=perf[t])
            for t, s in enumerate(model.stumps)
        ],
        "feature_importance": [
            {"feature": f, "feature_name": feature_names[f], "score": v}
            for f, v in importance
        ],
        "stump_ranking": ranking,
        "default_stump": default_stump,
        "feature_summaries": summaries,
        "sample_grids": grids,
        "layout": layout_doc(layout, side_labels),
    }


def _current_layout(session: EditSession):
    from .projection import refresh_session_layout
    if session.layout_state is None:
        return refresh_session_layout(session)
    return session.layout_state[0], None


def impact_doc(impact: EditImpact, session: EditSession, layout: Layout,
               trails, feature_names: list[str]) -> dict:
    side_labels = local_side_labels(session.working, impact.stump_index, session.X_train)
    changed = [t["changed"] for t in trails] if trails else None
    return {
        "impact": {
            "stump_index": impact.stump_index,
            "old_threshold": impact.old_threshold,
            "new_threshold": impact.new_threshold,
            "moved_samples": impact.moved_samples,
            "fidelity_before": impact.fidelity_before,
            "fidelity_after": impact.fidelity_after,
            "gini_before": impact.gini_before,
            "gini_after": impact.gini_after,
            "stump": dict(stump_to_json(impact.stump),
                          feature_name=feature_names[impact.stump.feature]),
        },
        "fidelity": {str(p): session.fidelity_cache[p] for p in PRECISIONS},
        "edit_count": len(session.edit_log),
        "layout": layout_doc(layout, side_labels, changed),
        "trajectories": trails or [],
    }


def explanation_doc(row: TestExplanation, feature_names: list[str]) -> dict:
    return {
        "index": row.index,
        "gt": row.gt,
        "pred": row.surrogate_pred,
        "target_pred": row.target_pred,
        "scores": [row.scores[0], row.scores[1]],
        "margin": row.margin,
        "contributions": [
            {"feature": c.feature, "feature_name": feature_names[c.feature],
             "value": c.value, "percent": c.percent, "toward": c.toward}
            for c in row.contributions
        ],
    }


def tests_doc(rows: list[TestExplanation], feature_names: list[str],
              class_names: tuple[str, str]) -> dict:
    return {
        "class_names": list(class_names),
        "rows": [explanation_doc(r, feature_names) for r in rows],
    }


def frontier_text(sweep_doc: dict) -> str:
    """Plain-text complexity/fidelity table mirroring the selection view."""
    lines = [
        f"{'idx':>4} {'stumps':>6} {'fid@1':>8} {'fid@2':>8} {'fid@3':>8} "
        f"{'fid@4':>8} {'fid@full':>9} {'best':>5}  flag"
    ]
    for m in sweep_doc["models"]:
        fid = m["fidelity"]
        flag = "DEFAULT" if m["complexity_index"] == sweep_doc["default_index"] else ""
        lines.append(
            f"{m['complexity_index']:>4} {m['n_estimators']:>6} "
            f"{fid['1']:>8.4f} {fid['2']:>8.4f} {fid['3']:>8.4f} {fid['4']:>8.4f} "
            f"{fid['full']:>9.4f} {str(m['best_precision']):>5}  {flag}"
        )
    return "\n".join(lines) + "\n"
