"""The surrogate family: models over sampled complexities, per-precision
fidelity, stump uniqueness tags, and default-model selection.

Complexity = number of stumps. The sweep samples distinct stump counts,
fits one surrogate per count against the target's training predictions,
and records how well each model tracks the target when its thresholds are
rounded to 1..4 decimals or kept at full precision.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace

import numpy as np

from .boosting import (
    SurrogateModel,
    classify_matrix,
    fit_adaboost,
    model_to_json,
    route_right,
)
from .errors import IndexOutOfRange, RangeTooSmall
from .rng import SplitMix64

PRECISIONS: tuple = (1, 2, 3, 4, "full")

SWEEP_SCHEMA = "stumplab.sweep/1"


@dataclass
class SweepResult:
    models: list[SurrogateModel]
    complexities: list[int]
    fidelity: list[dict]            # per model: precision -> fraction in [0, 1]
    best_precision: list            # per model: smallest precision hitting max fidelity
    uniqueness: list[list[str]]     # per (model, stump): unique | original | duplicated
    performance: list[list[float]]  # per (model, stump): weight x mean P(GT)
    seed: int
    iterations: int
    max_n: int
    default_index: int = 0          # 1-based complexity index of the default model
    default_precision: int | str = "full"


def sample_complexities(iterations: int, max_n: int, seed: int) -> list[int]:
    """``iterations`` distinct stump counts from [1, max_n], ascending."""
    if iterations > max_n or iterations < 1:
        raise RangeTooSmall(iterations, max_n)
    rng = SplitMix64(seed)
    return sorted(v + 1 for v in rng.sample(max_n, iterations))


def round_half_away(x: float, decimals: int) -> float:
    scale = 10.0 ** decimals
    return math.floor(abs(x) * scale + 0.5) / scale * (1 if x >= 0 else -1)


def round_thresholds(model: SurrogateModel, decimals: int) -> SurrogateModel:
    """Copy of the model with thresholds rounded half-away-from-zero to
    ``decimals`` places; leaf distributions are intentionally not refit."""
    stumps = [replace(s, threshold=round_half_away(s.threshold, decimals)) for s in model.stumps]
    return SurrogateModel(
        stumps=stumps,
        n_estimators=model.n_estimators,
        complexity_index=model.complexity_index,
        precision=decimals,
    )


def at_precision(model: SurrogateModel, precision) -> SurrogateModel:
    return model if precision == "full" else round_thresholds(model, precision)


def fidelity(model: SurrogateModel, X_train, target_labels, precision="full") -> float:
    """Fraction of training rows where the (rounded) surrogate reproduces
    the target's prediction; an exact integer ratio."""
    target_labels = np.asarray(target_labels, dtype=int)
    pred = classify_matrix(at_precision(model, precision), X_train)
    return int(np.sum(pred == target_labels)) / target_labels.size


def stump_performance(model: SurrogateModel, X_train, gt_labels) -> list[float]:
    """Per stump: weight times the mean leaf probability assigned to each
    training sample's ground-truth class."""
    X_train = np.asarray(X_train, dtype=float)
    gt = np.asarray(gt_labels, dtype=int)
    out = []
    for stump in model.stumps:
        right = route_right(stump, X_train)
        p_r = np.asarray(stump.p_right)[gt]
        p_l = np.asarray(stump.p_left)[gt]
        out.append(stump.weight * float(np.mean(np.where(right, p_r, p_l))))
    return out


def stump_identity(stump, precision) -> tuple:
    t = stump.threshold if precision == "full" else round_half_away(stump.threshold, precision)
    return (stump.feature, t)


def classify_uniqueness(sweep: SweepResult) -> list[list[str]]:
    """Tag every stump by scanning models small to large.

    Identity is (feature, threshold at the model's best precision). Within
    one model, identities occurring twice or more are ``duplicated``; a
    first-ever identity is ``unique``; an identity already present in some
    smaller model is ``original``.
    """
    seen: set = set()
    tags_per_model = []
    for m, model in enumerate(sweep.models):
        prec = sweep.best_precision[m]
        ids = [stump_identity(s, prec) for s in model.stumps]
        within = Counter(ids)
        tags = []
        for ident in ids:
            if within[ident] >= 2:
                tags.append("duplicated")
            elif ident not in seen:
                tags.append("unique")
            else:
                tags.append("original")
        seen.update(ids)
        tags_per_model.append(tags)
    return tags_per_model


def _best_precision(fid: dict):
    best = max(fid.values())
    for p in PRECISIONS:  # "full" ranks last
        if fid[p] == best:
            return p
    return "full"


def default_model(sweep: SweepResult) -> tuple[int, int | str]:
    """(complexity_index, precision) of the highest-fidelity model, ties
    resolved toward fewer stumps."""
    best_m = 0
    best_val = -1.0
    for m in range(len(sweep.models)):
        val = max(sweep.fidelity[m].values())
        if val > best_val:
            best_val = val
            best_m = m
    return sweep.models[best_m].complexity_index, sweep.best_precision[best_m]


def build_sweep(X_train, target_labels, gt_labels, iterations: int = 50,
                max_n: int = 50, seed: int = 0) -> SweepResult:
    """Fit the whole family and annotate it.

    Per-model seeds derive as ``seed XOR n_estimators`` so individual models
    are reproducible in isolation.
    """
    X_train = np.asarray(X_train, dtype=float)
    target_labels = np.asarray(target_labels, dtype=int)
    gt_labels = np.asarray(gt_labels, dtype=int)
    complexities = sample_complexities(iterations, max_n, seed)

    models = []
    fid_rows = []
    best_prec = []
    performance = []
    for pos, n_est in enumerate(complexities):
        model = fit_adaboost(X_train, target_labels, n_est, seed ^ n_est,
                             count_labels=gt_labels)
        model.complexity_index = pos + 1
        fid = {p: fidelity(model, X_train, target_labels, p) for p in PRECISIONS}
        models.append(model)
        fid_rows.append(fid)
        best_prec.append(_best_precision(fid))
        performance.append(stump_performance(model, X_train, gt_labels))

    sweep = SweepResult(
        models=models,
        complexities=complexities,
        fidelity=fid_rows,
        best_precision=best_prec,
        uniqueness=[],
        performance=performance,
        seed=seed,
        iterations=iterations,
        max_n=max_n,
    )
    sweep.uniqueness = classify_uniqueness(sweep)
    sweep.default_index, sweep.default_precision = default_model(sweep)
    return sweep


def model_by_index(sweep: SweepResult, complexity_index: int) -> SurrogateModel:
    if not 1 <= complexity_index <= len(sweep.models):
        raise IndexOutOfRange("complexity_index", complexity_index, len(sweep.models))
    return sweep.models[complexity_index - 1]


def serialize_sweep(sweep: SweepResult, feature_names: list[str]) -> dict:
    """Canonical JSON document shared verbatim by the CLI and the HTTP API."""
    models = []
    for m, model in enumerate(sweep.models):
        doc = model_to_json(model)
        doc["fidelity"] = {str(p): sweep.fidelity[m][p] for p in PRECISIONS}
        doc["best_precision"] = sweep.best_precision[m]
        for t, stump_doc in enumerate(doc["stumps"]):
            stump_doc["feature_name"] = feature_names[stump_doc["feature"]]
            stump_doc["uniqueness"] = sweep.uniqueness[m][t]
            stump_doc["performance"] = sweep.performance[m][t]
        models.append(doc)
    return {
        "schema": SWEEP_SCHEMA,
        "seed": sweep.seed,
        "iterations": sweep.iterations,
        "max_estimators": sweep.max_n,
        "feature_names": list(feature_names),
        "default_index": sweep.default_index,
        "default_precision": sweep.default_precision,
        "models": models,
    }
