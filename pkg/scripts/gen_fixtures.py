#!/usr/bin/env python3
"""Regenerate the frontend's golden test fixtures from the live engine.

Writes frontend/tests/fixtures.ts. Run from the repo root.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from stumplab.serve import create_app

CSV_TEXT = "size,grade,label\n" + "".join(
    f"{v1},{v2},{lab}\n" for v1, v2, lab in [
        (1, 2, "neg"), (2, 1, "neg"), (2, 3, "neg"), (3, 2, "neg"), (1, 1, "neg"),
        (3, 3, "neg"), (2, 2, "neg"),
        (7, 8, "pos"), (8, 7, "pos"), (8, 9, "pos"), (9, 8, "pos"), (7, 7, "pos"),
        (6, 8, "pos"), (9, 9, "pos"),
        (4, 5, "neg"), (5, 4, "pos"), (6, 5, "pos"), (5, 6, "neg"), (4, 4, "neg"),
        (6, 6, "pos"), (5, 5, "pos"), (4, 6, "neg"), (6, 4, "pos"), (5, 3, "neg"),
        (3, 5, "neg"), (7, 5, "pos"),
    ])


def main():
    client = TestClient(create_app())
    r = client.post(
        "/v1/datasets",
        files={"file": ("toy.csv", CSV_TEXT.encode(), "text/csv")},
        data={"label_column": "label", "positive_label": "pos",
              "split_ratio": "0.75", "split_seed": "3"},
    )
    dataset = r.json()
    ds_id = dataset["dataset_id"]
    target = client.post(f"/v1/datasets/{ds_id}/target",
                         json={"source": "builtin", "seed": 5, "n_trees": 25}).json()
    r = client.post(f"/v1/datasets/{ds_id}/sweep",
                    json={"iterations": 3, "max_n": 3, "seed": 2})
    sweep = r.json()
    sweep_id = r.headers["x-sweep-id"]
    r = client.post("/v1/sessions", json={"sweep_id": sweep_id,
                                          "complexity_index": 3, "precision": 2})
    session = r.json()
    sid = session["session_id"]
    summary = client.get(f"/v1/sessions/{sid}/summary").json()
    tests = client.get(f"/v1/sessions/{sid}/tests").json()
    stump0_t = summary["stumps"][0]["threshold"]
    override = client.post(
        f"/v1/sessions/{sid}/override",
        json={"stump": 0, "threshold": round(min(stump0_t + 0.2, 1.0), 2)}).json()
    summary_after = client.get(f"/v1/sessions/{sid}/summary").json()
    tests_after = client.get(f"/v1/sessions/{sid}/tests").json()
    undo = client.post(f"/v1/sessions/{sid}/undo").json()

    flip = None
    for row in tests["rows"]:
        for t in range(len(summary["stumps"])):
            got = client.get(f"/v1/sessions/{sid}/tests/{row['index']}/flip",
                             params={"stump": t}).json()
            if flip is None:
                flip = got
            if got["flip_threshold"] is not None:
                flip = got
                break
        if flip and flip["flip_threshold"] is not None:
            break
    export = client.get(f"/v1/sessions/{sid}/export").json()

    def scrub(obj):
        s = json.dumps(obj)
        s = s.replace(sid, "sess-fixture").replace(ds_id, "ds-fixture")
        s = s.replace(sweep_id, "sw-fixture")
        return json.loads(s)

    fixtures = {
        "dataset": scrub(dataset), "target": scrub(target), "sweep": scrub(sweep),
        "session": scrub(session), "summary": scrub(summary), "tests": scrub(tests),
        "override": scrub(override), "summaryAfter": scrub(summary_after),
        "testsAfter": scrub(tests_after), "undo": scrub(undo), "flip": scrub(flip),
        "exportDoc": scrub(export),
    }
    out = "// Golden payloads captured from the engine (toy 20x2 table, sweep of 3).\n"
    out += "// Regenerate with scripts/gen_fixtures.py at the repo root.\n"
    for key, value in fixtures.items():
        out += f"export const {key} = {json.dumps(value, indent=1)} as const;\n\n"
    path = Path("frontend/tests/fixtures.ts")
    path.write_text(out)
    print(f"wrote {path} (flip_threshold = {fixtures['flip']['flip_threshold']})")


if __name__ == "__main__":
    main()
