// Thin typed client for the /v1 API. All numbers the UI shows originate in
// these responses.

import type {
  DatasetDoc, FlipDoc, ImpactDoc, Precision, SessionDoc, SummaryDoc,
  SweepDoc, TargetDoc, TestsDoc,
} from "./types.js";

async function expectOk(r: Response): Promise<any> {
  if (!r.ok) {
    let detail = r.statusText;
    try {
      const body = await r.json();
      detail = body.detail ?? body.code ?? detail;
    } catch { /* non-JSON error body */ }
    throw new Error(`${r.status}: ${JSON.stringify(detail)}`);
  }
  return r.json();
}

export class ApiClient {
  constructor(private base: string = "") {}

  async uploadDataset(file: File | Blob, labelColumn: string, positiveLabel: string,
                      splitRatio: number, splitSeed: number): Promise<DatasetDoc> {
    const form = new FormData();
    form.append("file", file, "data.csv");
    form.append("label_column", labelColumn);
    form.append("positive_label", positiveLabel);
    form.append("split_ratio", String(splitRatio));
    form.append("split_seed", String(splitSeed));
    return expectOk(await fetch(`${this.base}/v1/datasets`, { method: "POST", body: form }));
  }

  async configureTarget(datasetId: string, body: object): Promise<TargetDoc> {
    return expectOk(await fetch(`${this.base}/v1/datasets/${datasetId}/target`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }));
  }

  async runSweep(datasetId: string, iterations: number, maxN: number, seed: number,
  ): Promise<{ doc: SweepDoc; sweepId: string }> {
    const r = await fetch(`${this.base}/v1/datasets/${datasetId}/sweep`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ iterations, max_n: maxN, seed }),
    });
    const doc = await expectOk(r);
    return { doc, sweepId: r.headers.get("x-sweep-id") ?? "" };
  }

  async openSession(sweepId: string, complexityIndex: number, precision: Precision,
  ): Promise<SessionDoc> {
    return expectOk(await fetch(`${this.base}/v1/sessions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ sweep_id: sweepId, complexity_index: complexityIndex, precision }),
    }));
  }

  async summary(sessionId: string): Promise<SummaryDoc> {
    return expectOk(await fetch(`${this.base}/v1/sessions/${sessionId}/summary`));
  }

  async override(sessionId: string, stump: number, threshold: number): Promise<ImpactDoc> {
    return expectOk(await fetch(`${this.base}/v1/sessions/${sessionId}/override`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ stump, threshold }),
    }));
  }

  async undo(sessionId: string): Promise<ImpactDoc> {
    return expectOk(await fetch(`${this.base}/v1/sessions/${sessionId}/undo`, { method: "POST" }));
  }

  async reset(sessionId: string): Promise<unknown> {
    return expectOk(await fetch(`${this.base}/v1/sessions/${sessionId}/reset`, { method: "POST" }));
  }

  async tests(sessionId: string): Promise<TestsDoc> {
    return expectOk(await fetch(`${this.base}/v1/sessions/${sessionId}/tests`));
  }

  async flip(sessionId: string, testIndex: number, stump: number): Promise<FlipDoc> {
    return expectOk(await fetch(
      `${this.base}/v1/sessions/${sessionId}/tests/${testIndex}/flip?stump=${stump}`));
  }
}
