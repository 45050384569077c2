"""stumplab: distill any binary classifier into a family of editable
decision-stump ensembles, pick a point on the complexity/fidelity/precision
frontier, override individual thresholds, and explain test predictions via
weighted-probability margins."""

from .boosting import (
    DecisionStump,
    SurrogateModel,
    classify,
    fit_adaboost,
    fit_stump,
    refit_leaves,
    score,
)
from .dataset import Dataset, Split, load_csv, normalize_minmax, stratified_split
from .editing import EditSession, open_session, override_threshold, undo, reset
from .explain import explain_case, flip_threshold, test_table
from .projection import align, membership_vectors, project, trajectories
from .sweep import SweepResult, build_sweep, fidelity, round_thresholds
from .target import BuiltinTarget, fit_builtin_target, load_external_predictions, predict

__version__ = "0.1.0"

__all__ = [
    "DecisionStump", "SurrogateModel", "classify", "fit_adaboost", "fit_stump",
    "refit_leaves", "score", "Dataset", "Split", "load_csv", "normalize_minmax",
    "stratified_split", "EditSession", "open_session", "override_threshold",
    "undo", "reset", "explain_case", "flip_threshold", "test_table", "align",
    "membership_vectors", "project", "trajectories", "SweepResult", "build_sweep",
    "fidelity", "round_thresholds", "BuiltinTarget", "fit_builtin_target",
    "load_external_predictions", "predict", "__version__",
]
