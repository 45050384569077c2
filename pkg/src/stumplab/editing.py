"""Session-scoped rule overriding.

A session owns a mutable working copy of one surrogate (rounded to the
precision chosen at open time) plus the edit log that reproduces it from
the base model. Edits replace a single stump's threshold and refit that
stump's leaves with uniform weights; boosting is never re-run, and stump
weights never change. Log timestamps are logical sequence numbers, so a
session's export is byte-stable across runs.
"""

from __future__ import annotations

import copy
import uuid
from dataclasses import dataclass, field, replace

import numpy as np

from .analysis import gini_impurity
from .boosting import (
    DecisionStump,
    SurrogateModel,
    model_from_json,
    model_to_json,
    refit_leaves,
    route_right,
)
from .errors import (
    IndexOutOfRange,
    NothingToUndo,
    StumpIndexOutOfRange,
    ThresholdOutOfDomain,
)
from .sweep import PRECISIONS, SweepResult, at_precision, fidelity, model_by_index

SESSION_SCHEMA = "stumplab.session/1"


@dataclass
class EditRecord:
    stump_index: int
    old_threshold: float
    new_threshold: float
    timestamp: int


@dataclass
class EditImpact:
    stump_index: int
    old_threshold: float
    new_threshold: float
    moved_samples: list[dict]      # {"index", "old_side", "new_side"}
    fidelity_before: float
    fidelity_after: float
    gini_before: float
    gini_after: float
    stump: DecisionStump           # post-edit state


@dataclass
class EditSession:
    session_id: str
    precision: int | str
    base: SurrogateModel           # immutable reference copy
    working: SurrogateModel
    X_train: np.ndarray
    target_labels: np.ndarray
    gt_labels: np.ndarray
    edit_log: list[EditRecord] = field(default_factory=list)
    memberships: np.ndarray | None = None    # n_samples x n_stumps, 1 = Right
    fidelity_cache: dict = field(default_factory=dict)
    layout_state: object = None    # maintained by the projection layer
    _clock: int = 0

    def _rebuild_caches(self):
        cols = [route_right(s, self.X_train).astype(np.uint8) for s in self.working.stumps]
        self.memberships = np.column_stack(cols) if cols else np.zeros((len(self.X_train), 0), np.uint8)
        self.fidelity_cache = {
            p: fidelity(self.working, self.X_train, self.target_labels, p)
            for p in PRECISIONS
        }

    def _tick(self) -> int:
        self._clock += 1
        return self._clock


def open_session(sweep: SweepResult, complexity_index: int, precision,
                 X_train, target_labels, gt_labels,
                 session_id: str | None = None) -> EditSession:
    """Start an edit session on one model of the sweep; the working copy's
    thresholds are rounded to ``precision`` once, at open time."""
    if precision not in PRECISIONS:
        raise IndexOutOfRange("precision", precision, list(PRECISIONS))
    model = model_by_index(sweep, complexity_index)
    base = copy.deepcopy(at_precision(model, precision))
    base.precision = precision
    session = EditSession(
        session_id=session_id or uuid.uuid4().hex[:12],
        precision=precision,
        base=base,
        working=copy.deepcopy(base),
        X_train=np.asarray(X_train, dtype=float),
        target_labels=np.asarray(target_labels, dtype=int),
        gt_labels=np.asarray(gt_labels, dtype=int),
    )
    session._rebuild_caches()
    return session


def _sides(mask: np.ndarray) -> list[str]:
    return ["Right" if v else "Left" for v in mask]


def _apply(session: EditSession, stump_index: int, new_threshold: float) -> DecisionStump:
    stump = replace(session.working.stumps[stump_index], threshold=new_threshold)
    return refit_leaves(stump, session.X_train, session.target_labels,
                        count_labels=session.gt_labels)


def override_threshold(session: EditSession, stump_index: int, new_threshold: float) -> EditImpact:
    """Replace one stump's threshold, refit its leaves, and report the
    local/global impact."""
    n_stumps = len(session.working.stumps)
    if not 0 <= stump_index < n_stumps:
        raise StumpIndexOutOfRange(stump_index, n_stumps)
    if not 0.0 <= new_threshold <= 1.0:
        raise ThresholdOutOfDomain(new_threshold)

    old = session.working.stumps[stump_index]
    fidelity_before = session.fidelity_cache[session.precision]
    gini_before = gini_impurity(old, session.X_train, session.gt_labels)
    old_right = session.memberships[:, stump_index].astype(bool)

    new_stump = _apply(session, stump_index, new_threshold)
    session.working.stumps[stump_index] = new_stump
    session.edit_log.append(EditRecord(
        stump_index=stump_index,
        old_threshold=old.threshold,
        new_threshold=new_threshold,
        timestamp=session._tick(),
    ))
    session._rebuild_caches()

    new_right = session.memberships[:, stump_index].astype(bool)
    moved = [
        {"index": int(i), "old_side": "Right" if old_right[i] else "Left",
         "new_side": "Right" if new_right[i] else "Left"}
        for i in np.flatnonzero(old_right != new_right)
    ]
    return EditImpact(
        stump_index=stump_index,
        old_threshold=old.threshold,
        new_threshold=new_threshold,
        moved_samples=moved,
        fidelity_before=fidelity_before,
        fidelity_after=session.fidelity_cache[session.precision],
        gini_before=gini_before,
        gini_after=gini_impurity(new_stump, session.X_train, session.gt_labels),
        stump=new_stump,
    )


def _replay(session: EditSession):
    session.working = copy.deepcopy(session.base)
    for rec in session.edit_log:
        session.working.stumps[rec.stump_index] = _apply(
            session, rec.stump_index, rec.new_threshold)
    session._rebuild_caches()


def undo(session: EditSession) -> EditImpact:
    """Revert the last edit by replaying the shortened log over the base."""
    if not session.edit_log:
        raise NothingToUndo()
    last = session.edit_log.pop()
    i = last.stump_index
    fidelity_before = session.fidelity_cache[session.precision]
    gini_before = gini_impurity(session.working.stumps[i], session.X_train, session.gt_labels)
    old_right = session.memberships[:, i].astype(bool)

    _replay(session)

    new_right = session.memberships[:, i].astype(bool)
    moved = [
        {"index": int(k), "old_side": "Right" if old_right[k] else "Left",
         "new_side": "Right" if new_right[k] else "Left"}
        for k in np.flatnonzero(old_right != new_right)
    ]
    restored = session.working.stumps[i]
    return EditImpact(
        stump_index=i,
        old_threshold=last.new_threshold,
        new_threshold=restored.threshold,
        moved_samples=moved,
        fidelity_before=fidelity_before,
        fidelity_after=session.fidelity_cache[session.precision],
        gini_before=gini_before,
        gini_after=gini_impurity(restored, session.X_train, session.gt_labels),
        stump=restored,
    )


def reset(session: EditSession) -> EditSession:
    session.edit_log.clear()
    session.working = copy.deepcopy(session.base)
    session._rebuild_caches()
    return session


def export_session(session: EditSession) -> dict:
    """Self-contained JSON document; re-importable to an identical session."""
    return {
        "schema": SESSION_SCHEMA,
        "session_id": session.session_id,
        "precision": session.precision,
        "complexity_index": session.base.complexity_index,
        "base_model": model_to_json(session.base),
        "working_model": model_to_json(session.working),
        "edit_log": [
            {"stump_index": r.stump_index, "old_threshold": r.old_threshold,
             "new_threshold": r.new_threshold, "timestamp": r.timestamp}
            for r in session.edit_log
        ],
        "fidelity": {str(p): session.fidelity_cache[p] for p in PRECISIONS},
    }


def import_session(doc: dict, X_train, target_labels, gt_labels) -> EditSession:
    session = EditSession(
        session_id=doc["session_id"],
        precision=doc["precision"],
        base=model_from_json(doc["base_model"]),
        working=model_from_json(doc["base_model"]),
        X_train=np.asarray(X_train, dtype=float),
        target_labels=np.asarray(target_labels, dtype=int),
        gt_labels=np.asarray(gt_labels, dtype=int),
        edit_log=[
            EditRecord(r["stump_index"], r["old_threshold"], r["new_threshold"], r["timestamp"])
            for r in doc["edit_log"]
        ],
    )
    session._clock = max((r.timestamp for r in session.edit_log), default=0)
    _replay(session)
    return session
