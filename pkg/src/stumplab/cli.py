"""Batch front door: run the pipeline headlessly and emit the same JSON
documents the HTTP service serves.

Exit codes: 0 success, 1 invalid configuration (bad flags/values), 2 data
errors (unreadable files, malformed CSV, engine preconditions).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import editing, explain, reports, sweep as sweep_mod, target as target_mod
from .dataset import load_csv, stratified_split
from .errors import StumplabError


@dataclass
class RunConfig:
    input_path: str
    label_column: str
    positive_label: str
    split_ratio: float = 0.8
    split_seed: int = 7
    target: str = "builtin"
    target_file: str | None = None
    target_seed: int = 42
    target_trees: int = 100
    iterations: int = 50
    max_estimators: int = 50
    seed: int = 0
    complexity: int | None = None
    precision: int | str | None = None
    out_dir: str = "out"

    def validate(self):
        if not 0.0 < self.split_ratio < 1.0:
            raise ValueError(f"--split-ratio must be in (0, 1), got {self.split_ratio}")
        if self.target not in ("builtin", "file"):
            raise ValueError(f"--target must be builtin or file, got {self.target!r}")
        if self.target == "file" and not self.target_file:
            raise ValueError("--target file requires --target-file")
        if self.iterations < 1 or self.iterations > self.max_estimators:
            raise ValueError("--iterations must be in [1, --max-estimators]")
        if self.precision is not None and self.precision not in sweep_mod.PRECISIONS:
            raise ValueError(f"--precision must be one of {list(sweep_mod.PRECISIONS)}")


class _Parser(argparse.ArgumentParser):
    # spec'd exit codes: flag/validation problems are 1, not argparse's 2
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _precision_arg(value: str):
    return value if value == "full" else int(value)


def _add_pipeline_args(p: argparse.ArgumentParser):
    p.add_argument("--input", required=True, help="CSV file with a header row")
    p.add_argument("--label-column", required=True)
    p.add_argument("--positive-label", required=True)
    p.add_argument("--split-ratio", type=float, default=0.8)
    p.add_argument("--split-seed", type=int, default=7)
    p.add_argument("--target", choices=["builtin", "file"], default="builtin")
    p.add_argument("--target-file", help="index,label CSV of external predictions")
    p.add_argument("--target-seed", type=int, default=42)
    p.add_argument("--target-trees", type=int, default=100)
    p.add_argument("--iterations", type=int, default=50)
    p.add_argument("--max-estimators", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="out", help="output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stumplab")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="fit the surrogate family; write sweep.json + frontier.txt")
    _add_pipeline_args(p_sweep)

    p_explain = sub.add_parser("explain", help="summarize one surrogate; write summary.json + tests.json")
    _add_pipeline_args(p_explain)
    p_explain.add_argument("--complexity", type=int, help="complexity index (default: sweep default)")
    p_explain.add_argument("--precision", type=_precision_arg,
                           help="threshold decimals 1-4 or 'full' (default: sweep default)")

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--state-dir", help="snapshot mutations as JSON under this directory")
    p_serve.add_argument("--ui-dir", help="serve a built web UI from this directory under /ui")
    p_serve.add_argument("--sweep-async-budget", type=int,
                         help="run sweeps as background jobs above n_samples*iterations")
    return parser


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        input_path=args.input,
        label_column=args.label_column,
        positive_label=args.positive_label,
        split_ratio=args.split_ratio,
        split_seed=args.split_seed,
        target=args.target,
        target_file=args.target_file,
        target_seed=args.target_seed,
        target_trees=args.target_trees,
        iterations=args.iterations,
        max_estimators=args.max_estimators,
        seed=args.seed,
        complexity=getattr(args, "complexity", None),
        precision=getattr(args, "precision", None),
        out_dir=args.out,
    )
    cfg.validate()
    return cfg


def run_pipeline(cfg: RunConfig):
    """Load data, obtain target predictions, and fit the sweep."""
    with open(cfg.input_path, "rb") as fh:
        ds = load_csv(fh, cfg.label_column, cfg.positive_label)
    split = stratified_split(ds, cfg.split_ratio, cfg.split_seed)
    if cfg.target == "builtin":
        model = target_mod.fit_builtin_target(ds, split, cfg.target_seed, n_trees=cfg.target_trees)
        preds = target_mod.builtin_predictions(model, ds, split)
    else:
        with open(cfg.target_file, "rb") as fh:
            preds = target_mod.load_external_predictions(fh, split)
    result = sweep_mod.build_sweep(
        ds.X[split.train_idx], preds.train_pred, ds.y[split.train_idx],
        iterations=cfg.iterations, max_n=cfg.max_estimators, seed=cfg.seed,
    )
    return ds, split, preds, result


def _write_json(path: Path, doc) -> None:
    path.write_text(json.dumps(doc, indent=1) + "\n")


def run_sweep_cmd(cfg: RunConfig) -> int:
    ds, _split, _preds, result = run_pipeline(cfg)
    doc = sweep_mod.serialize_sweep(result, ds.feature_names)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "sweep.json", doc)
    (out / "frontier.txt").write_text(reports.frontier_text(doc))
    print(f"wrote {out / 'sweep.json'} and {out / 'frontier.txt'} "
          f"(default index {doc['default_index']})")
    return 0


def run_explain_cmd(cfg: RunConfig) -> int:
    ds, split, preds, result = run_pipeline(cfg)
    complexity = cfg.complexity if cfg.complexity is not None else result.default_index
    precision = cfg.precision if cfg.precision is not None else result.default_precision
    session = editing.open_session(
        result, complexity, precision,
        ds.X[split.train_idx], preds.train_pred, ds.y[split.train_idx],
    )
    rows = explain.test_table(session.working, ds, split, preds)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "summary.json", reports.session_summary_doc(session, ds.feature_names))
    _write_json(out / "tests.json", reports.tests_doc(rows, ds.feature_names, ds.class_names))
    print(f"wrote {out / 'summary.json'} and {out / 'tests.json'} "
          f"(complexity {complexity}, precision {precision})")
    return 0


def run_serve_cmd(args) -> int:
    import uvicorn

    from .serve import create_app

    host = os.environ.get("STUMPLAB_HOST", "127.0.0.1")
    app = create_app(state_dir=args.state_dir, async_budget=args.sweep_async_budget,
                     ui_dir=args.ui_dir)
    uvicorn.run(app, host=host, port=args.port)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "serve":
            return run_serve_cmd(args)
        cfg = _config_from_args(args)
    except SystemExit:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "sweep":
            return run_sweep_cmd(cfg)
        return run_explain_cmd(cfg)
    except (OSError, StumplabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
