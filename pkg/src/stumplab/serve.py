"""JSON-over-HTTP service exposing the full workflow under ``/v1``.

Every endpoint is a thin adapter over the engine: responses are the same
documents the library (and the CLI) produce. State lives in memory;
``state_dir`` optionally snapshots mutations to JSON files. Mutating
session endpoints are serialized per session id.
"""

from __future__ import annotations

import json
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np
from fastapi import FastAPI, File, Form, HTTPException, Request, UploadFile
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import editing, explain, reports, sweep as sweep_mod, target as target_mod
from .dataset import load_csv, stratified_split
from .errors import StumplabError
from .projection import refresh_session_layout

API_PREFIX = "/v1"


class TargetRequest(BaseModel):
    source: str = "builtin"          # "builtin" | "file"
    seed: int = 42
    n_trees: int = 100
    content: str | None = None       # index,label CSV when source == "file"


class SweepRequest(BaseModel):
    iterations: int = 50
    max_n: int = 50
    seed: int = 0


class SessionRequest(BaseModel):
    sweep_id: str
    complexity_index: int
    precision: int | str = "full"


class OverrideRequest(BaseModel):
    stump: int
    threshold: float


class _State:
    def __init__(self, state_dir=None, async_budget=None):
        self.datasets: dict[str, dict] = {}
        self.sweeps: dict[str, dict] = {}
        self.sessions: dict[str, dict] = {}
        self.jobs: dict[str, dict] = {}
        self.state_dir = Path(state_dir) if state_dir else None
        self.async_budget = async_budget
        self.executor = ThreadPoolExecutor(max_workers=2)

    def snapshot(self, kind: str, key: str, doc: dict):
        if self.state_dir is None:
            return
        folder = self.state_dir / kind
        folder.mkdir(parents=True, exist_ok=True)
        (folder / f"{key}.json").write_text(json.dumps(doc, indent=1))


def _new_id(prefix: str) -> str:
    return f"{prefix}-{uuid.uuid4().hex[:10]}"


def create_app(state_dir=None, async_budget: int | None = None,
               ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="stumplab", version="0.1.0")
    state = _State(state_dir=state_dir, async_budget=async_budget)
    app.state.store = state

    @app.exception_handler(StumplabError)
    async def _engine_error(_req: Request, exc: StumplabError):
        return JSONResponse(status_code=422, content={"code": exc.code, "detail": str(exc)})

    def get_dataset(dataset_id: str) -> dict:
        if dataset_id not in state.datasets:
            raise HTTPException(404, detail=f"unknown dataset {dataset_id!r}")
        return state.datasets[dataset_id]

    def get_sweep(sweep_id: str) -> dict:
        if sweep_id not in state.sweeps:
            raise HTTPException(404, detail=f"unknown sweep {sweep_id!r}")
        return state.sweeps[sweep_id]

    def get_session(session_id: str) -> dict:
        if session_id not in state.sessions:
            raise HTTPException(404, detail=f"unknown session {session_id!r}")
        return state.sessions[session_id]

    @app.post(f"{API_PREFIX}/datasets")
    async def upload_dataset(
        file: UploadFile = File(...),
        label_column: str = Form(...),
        positive_label: str = Form(...),
        split_ratio: float = Form(0.8),
        split_seed: int = Form(7),
    ):
        ds = load_csv(await file.read(), label_column, positive_label)
        split = stratified_split(ds, split_ratio, split_seed)
        dataset_id = _new_id("ds")
        state.datasets[dataset_id] = {"ds": ds, "split": split, "preds": None}
        doc = {
            "dataset_id": dataset_id,
            "n_samples": ds.n_samples,
            "n_features": ds.n_features,
            "feature_names": ds.feature_names,
            "class_names": list(ds.class_names),
            "train_size": len(split.train_idx),
            "test_size": len(split.test_idx),
            "split_seed": split.seed,
            "split_ratio": split.ratio,
        }
        state.snapshot("datasets", dataset_id, doc)
        return doc

    @app.post(f"{API_PREFIX}/datasets/{{dataset_id}}/target")
    def configure_target(dataset_id: str, req: TargetRequest):
        rec = get_dataset(dataset_id)
        ds, split = rec["ds"], rec["split"]
        if req.source == "builtin":
            model = target_mod.fit_builtin_target(ds, split, req.seed, n_trees=req.n_trees)
            preds = target_mod.builtin_predictions(model, ds, split)
        elif req.source == "file":
            if not req.content:
                raise HTTPException(422, detail={"code": "MissingPredictions",
                                                 "detail": "source=file requires content"})
            preds = target_mod.load_external_predictions(req.content, split)
        else:
            raise HTTPException(422, detail={"code": "UnknownSource",
                                             "detail": f"unknown target source {req.source!r}"})
        rec["preds"] = preds
        gt_train = ds.y[split.train_idx]
        gt_test = ds.y[split.test_idx]
        doc = {
            "dataset_id": dataset_id,
            "source": preds.source,
            "train_accuracy": float(np.mean(preds.train_pred == gt_train)),
            "test_accuracy": float(np.mean(preds.test_pred == gt_test)),
        }
        state.snapshot("targets", dataset_id, doc)
        return doc

    def _run_sweep(dataset_id: str, req: SweepRequest) -> tuple[str, dict]:
        rec = get_dataset(dataset_id)
        ds, split, preds = rec["ds"], rec["split"], rec["preds"]
        result = sweep_mod.build_sweep(
            ds.X[split.train_idx], preds.train_pred, ds.y[split.train_idx],
            iterations=req.iterations, max_n=req.max_n, seed=req.seed,
        )
        sweep_id = _new_id("sw")
        doc = sweep_mod.serialize_sweep(result, ds.feature_names)
        state.sweeps[sweep_id] = {"sweep": result, "dataset_id": dataset_id, "doc": doc}
        state.snapshot("sweeps", sweep_id, doc)
        return sweep_id, doc

    @app.post(f"{API_PREFIX}/datasets/{{dataset_id}}/sweep")
    def run_sweep(dataset_id: str, req: SweepRequest):
        rec = get_dataset(dataset_id)
        if rec["preds"] is None:
            raise HTTPException(422, detail={"code": "NoTargetPredictions",
                                             "detail": "configure a target first"})
        workload = rec["ds"].n_samples * req.iterations
        if state.async_budget is not None and workload > state.async_budget:
            job_id = _new_id("job")
            state.jobs[job_id] = {"status": "running"}

            def work():
                try:
                    sweep_id, _doc = _run_sweep(dataset_id, req)
                    state.jobs[job_id] = {"status": "done", "sweep_id": sweep_id}
                except Exception as exc:  # surfaced via the job endpoint
                    state.jobs[job_id] = {"status": "error", "detail": str(exc)}

            state.executor.submit(work)
            return JSONResponse(status_code=202, content={"job_id": job_id})

        sweep_id, doc = _run_sweep(dataset_id, req)
        return JSONResponse(
            content=doc,
            headers={"X-Sweep-Id": sweep_id, "Location": f"{API_PREFIX}/sweep/{sweep_id}"},
        )

    @app.get(f"{API_PREFIX}/jobs/{{job_id}}")
    def job_status(job_id: str):
        if job_id not in state.jobs:
            raise HTTPException(404, detail=f"unknown job {job_id!r}")
        return state.jobs[job_id]

    @app.get(f"{API_PREFIX}/sweep/{{sweep_id}}")
    def sweep_document(sweep_id: str):
        return get_sweep(sweep_id)["doc"]

    @app.get(f"{API_PREFIX}/sweep/{{sweep_id}}/models/{{k}}")
    def sweep_model(sweep_id: str, k: int):
        rec = get_sweep(sweep_id)
        models = rec["doc"]["models"]
        if not 1 <= k <= len(models):
            raise HTTPException(404, detail=f"no model with complexity index {k}")
        return models[k - 1]

    @app.post(f"{API_PREFIX}/sessions")
    def open_session(req: SessionRequest):
        rec = get_sweep(req.sweep_id)
        ds_rec = state.datasets[rec["dataset_id"]]
        ds, split, preds = ds_rec["ds"], ds_rec["split"], ds_rec["preds"]
        session = editing.open_session(
            rec["sweep"], req.complexity_index, req.precision,
            ds.X[split.train_idx], preds.train_pred, ds.y[split.train_idx],
        )
        refresh_session_layout(session)
        state.sessions[session.session_id] = {
            "session": session,
            "sweep_id": req.sweep_id,
            "dataset_id": rec["dataset_id"],
            "lock": threading.Lock(),
        }
        return {
            "session_id": session.session_id,
            "sweep_id": req.sweep_id,
            "complexity_index": session.working.complexity_index,
            "precision": session.precision,
            "n_estimators": session.working.n_estimators,
        }

    def _session_ctx(session_id: str):
        rec = get_session(session_id)
        ds_rec = state.datasets[rec["dataset_id"]]
        return rec, ds_rec["ds"], ds_rec["split"], ds_rec["preds"]

    @app.get(f"{API_PREFIX}/sessions/{{session_id}}/summary")
    def session_summary(session_id: str):
        rec, ds, _split, _preds = _session_ctx(session_id)
        return reports.session_summary_doc(rec["session"], ds.feature_names)

    @app.post(f"{API_PREFIX}/sessions/{{session_id}}/override")
    def session_override(session_id: str, req: OverrideRequest):
        rec, ds, _split, _preds = _session_ctx(session_id)
        with rec["lock"]:
            session = rec["session"]
            impact = editing.override_threshold(session, req.stump, req.threshold)
            layout, trails = refresh_session_layout(session)
            doc = reports.impact_doc(impact, session, layout, trails, ds.feature_names)
            state.snapshot("sessions", session_id, editing.export_session(session))
        return doc

    @app.post(f"{API_PREFIX}/sessions/{{session_id}}/undo")
    def session_undo(session_id: str):
        rec, ds, _split, _preds = _session_ctx(session_id)
        with rec["lock"]:
            session = rec["session"]
            impact = editing.undo(session)
            layout, trails = refresh_session_layout(session)
            doc = reports.impact_doc(impact, session, layout, trails, ds.feature_names)
            state.snapshot("sessions", session_id, editing.export_session(session))
        return doc

    @app.post(f"{API_PREFIX}/sessions/{{session_id}}/reset")
    def session_reset(session_id: str):
        rec, ds, _split, _preds = _session_ctx(session_id)
        with rec["lock"]:
            session = editing.reset(rec["session"])
            refresh_session_layout(session)
            doc = {
                "session_id": session_id,
                "edit_count": 0,
                "fidelity": {str(p): session.fidelity_cache[p] for p in sweep_mod.PRECISIONS},
            }
            state.snapshot("sessions", session_id, editing.export_session(session))
        return doc

    @app.get(f"{API_PREFIX}/sessions/{{session_id}}/export")
    def session_export(session_id: str):
        rec, _ds, _split, _preds = _session_ctx(session_id)
        return editing.export_session(rec["session"])

    @app.get(f"{API_PREFIX}/sessions/{{session_id}}/tests")
    def session_tests(session_id: str):
        rec, ds, split, preds = _session_ctx(session_id)
        rows = explain.test_table(rec["session"].working, ds, split, preds)
        return reports.tests_doc(rows, ds.feature_names, ds.class_names)

    @app.get(f"{API_PREFIX}/sessions/{{session_id}}/tests/{{i}}/flip")
    def session_flip(session_id: str, i: int, stump: int):
        rec, ds, split, _preds = _session_ctx(session_id)
        if i not in set(int(v) for v in split.test_idx):
            raise HTTPException(404, detail=f"sample {i} is not a test case")
        session = rec["session"]
        model = session.working
        if not 0 <= stump < len(model.stumps):
            raise HTTPException(404, detail=f"no stump {stump}")
        feature = model.stumps[stump].feature
        value = explain.flip_threshold(
            model, stump, ds.X[i], train_values=session.X_train[:, feature])
        return {
            "test_index": i,
            "stump": stump,
            "feature": feature,
            "feature_name": ds.feature_names[feature],
            "feature_value": float(ds.X[i, feature]),
            "current_threshold": model.stumps[stump].threshold,
            "flip_threshold": value,
        }

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
