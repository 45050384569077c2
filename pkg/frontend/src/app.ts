// Wires the five views to the /v1 API through a single store: the workflow
// bar drives dataset -> target -> sweep, clicking into the sweep opens an
// edit session, and every session mutation re-fetches summary + tests so
// all views stay consistent.

import { ApiClient } from "./api.js";
import { fmt, fmtInt } from "./format.js";
import { Store } from "./store.js";
import { clear, htmlEl } from "./svg.js";
import type { FlipDoc, Precision } from "./types.js";
import { renderBehaviorSummary } from "./views/behaviorSummary.js";
import { renderDecisionComparison } from "./views/decisionComparison.js";
import { renderModelSelection } from "./views/modelSelection.js";
import { renderRuleOverride } from "./views/ruleOverride.js";
import { renderTestResults, TestSortKey } from "./views/testResults.js";

export interface App {
  store: Store;
  render(): void;
  openSession(k: number, precision: Precision): Promise<void>;
  override(stump: number, threshold: number): Promise<void>;
  undo(): Promise<void>;
  reset(): Promise<void>;
  hoverCase(index: number | null): Promise<void>;
}

export function createApp(root: HTMLElement, api: ApiClient): App {
  const store = new Store();
  let sortKey: TestSortKey | null = null;
  let hoverInfo: { featureValue: number; flip: FlipDoc | null } | null = null;

  root.innerHTML = "";
  const bar = htmlEl("div", "workflow-bar");
  const status = htmlEl("div", "status-line");
  const viewSelection = htmlEl("section", "view view-selection");
  const viewBehavior = htmlEl("section", "view view-behavior");
  const viewOverride = htmlEl("section", "view view-override");
  const viewComparison = htmlEl("section", "view view-comparison");
  const viewTests = htmlEl("section", "view view-tests");
  const grid = htmlEl("div", "view-grid");
  for (const v of [viewSelection, viewBehavior, viewOverride, viewComparison, viewTests]) {
    grid.appendChild(v);
  }
  root.appendChild(bar);
  root.appendChild(status);
  root.appendChild(grid);

  function buildBar(): void {
    clear(bar);
    const upload = htmlEl("form", "upload-form");
    upload.innerHTML = `
      <input type="file" name="file" accept=".csv" required>
      <input name="label_column" placeholder="label column" required>
      <input name="positive_label" placeholder="positive label" required>
      <input name="split_seed" value="7" size="3" title="split seed">
      <button type="submit">1. upload</button>`;
    upload.addEventListener("submit", async (ev) => {
      ev.preventDefault();
      const fd = new FormData(upload as HTMLFormElement);
      try {
        const doc = await api.uploadDataset(
          fd.get("file") as File, String(fd.get("label_column")),
          String(fd.get("positive_label")), 0.8, Number(fd.get("split_seed")));
        store.setDataset(doc);
      } catch (err) {
        store.update({ error: String(err) });
      }
    });
    bar.appendChild(upload);

    const targetForm = htmlEl("form", "target-form");
    targetForm.innerHTML = `
      <input name="seed" value="42" size="3" title="target seed">
      <button type="submit">2. builtin target</button>`;
    targetForm.addEventListener("submit", async (ev) => {
      ev.preventDefault();
      if (!store.state.dataset) return;
      const fd = new FormData(targetForm as HTMLFormElement);
      try {
        store.setTarget(await api.configureTarget(
          store.state.dataset.dataset_id,
          { source: "builtin", seed: Number(fd.get("seed")) }));
      } catch (err) {
        store.update({ error: String(err) });
      }
    });
    bar.appendChild(targetForm);

    const sweepForm = htmlEl("form", "sweep-form");
    sweepForm.innerHTML = `
      <input name="iterations" value="50" size="3" title="iterations">
      <input name="max_n" value="50" size="3" title="max stumps">
      <input name="seed" value="0" size="3" title="sweep seed">
      <button type="submit">3. sweep</button>`;
    sweepForm.addEventListener("submit", async (ev) => {
      ev.preventDefault();
      if (!store.state.dataset) return;
      const fd = new FormData(sweepForm as HTMLFormElement);
      try {
        const { doc, sweepId } = await api.runSweep(
          store.state.dataset.dataset_id, Number(fd.get("iterations")),
          Number(fd.get("max_n")), Number(fd.get("seed")));
        store.setSweep(doc, sweepId);
        await openSession(doc.default_index, doc.default_precision);
      } catch (err) {
        store.update({ error: String(err) });
      }
    });
    bar.appendChild(sweepForm);
  }

  async function openSession(k: number, precision: Precision): Promise<void> {
    if (!store.state.sweepId) return;
    try {
      const session = await api.openSession(store.state.sweepId, k, precision);
      const summary = await api.summary(session.session_id);
      const tests = await api.tests(session.session_id);
      store.update({ selectedComplexity: k, selectedPrecision: precision });
      store.setSession(session.session_id, summary, tests);
    } catch (err) {
      store.update({ error: String(err) });
    }
  }

  async function refresh(): Promise<void> {
    const sid = store.state.sessionId;
    if (!sid) return;
    const summary = await api.summary(sid);
    const tests = await api.tests(sid);
    const stump = store.state.selectedStump;
    store.update({
      summary, tests,
      selectedStump: stump !== null && stump < summary.stumps.length
        ? stump : summary.default_stump,
    });
  }

  async function mutate(run: () => Promise<unknown>, keepImpact: boolean): Promise<void> {
    const sid = store.state.sessionId;
    if (!sid || store.state.pendingMutation) return;
    store.update({ pendingMutation: true, error: null });
    try {
      const result = await run();
      const impact = (keepImpact && result && typeof result === "object"
        && "layout" in (result as object))
        ? (result as import("./types.js").ImpactDoc) : null;
      store.update({ lastImpact: impact });
      await refresh();
    } catch (err) {
      store.update({ error: String(err) });
    } finally {
      store.update({ pendingMutation: false });
    }
  }

  const override = (stump: number, threshold: number) =>
    mutate(() => api.override(store.state.sessionId!, stump, threshold), true);
  // reverting clears the edit's trajectory overlay rather than animating back
  const doUndo = () => mutate(() => api.undo(store.state.sessionId!), false);
  const doReset = () => mutate(() => api.reset(store.state.sessionId!), false);

  async function hoverCase(index: number | null): Promise<void> {
    if (index === null) {
      hoverInfo = null;
      store.update({ hoveredTest: null });
      return;
    }
    store.update({ hoveredTest: index });
    const sid = store.state.sessionId;
    const stump = store.state.selectedStump ?? store.state.summary?.default_stump;
    if (sid && stump !== null && stump !== undefined) {
      try {
        const flip = await api.flip(sid, index, stump);
        hoverInfo = { featureValue: flip.feature_value, flip };
        store.update({});
      } catch {
        hoverInfo = null;
      }
    }
  }

  function render(): void {
    const s = store.state;
    status.textContent = [
      s.dataset
        ? `dataset: ${fmtInt(s.dataset.n_samples)} samples x ${fmtInt(s.dataset.n_features)} features ` +
          `(${s.dataset.class_names.join(" / ")})`
        : "no dataset",
      s.target ? `target: ${s.target.source}, test acc ${fmt(s.target.test_accuracy, 3)}` : "",
      s.sweep ? `sweep: ${fmtInt(s.sweep.models.length)} models, default #${fmtInt(s.sweep.default_index)}` : "",
      s.error ? `error: ${s.error}` : "",
    ].filter(Boolean).join(" · ");

    const classNames = s.dataset?.class_names ?? s.tests?.class_names ?? ["0", "1"];
    renderModelSelection(viewSelection, s.sweep, s.selectedComplexity, s.encoding,
      s.markedStump, classNames, {
        openSession: (k, p) => { void openSession(k, p); },
        toggleEncoding: () => store.update({
          encoding: s.encoding === "uniqueness" ? "performance" : "uniqueness",
        }),
        markStump: (feature, threshold) => store.update({
          markedStump: s.markedStump && s.markedStump.feature === feature
            && s.markedStump.threshold === threshold ? null : { feature, threshold },
        }),
      });
    renderBehaviorSummary(viewBehavior, s.summary, s.selectedStump, classNames, {
      selectStump: (i) => store.update({ selectedStump: i }),
      hoverFeature: () => { /* highlight handled via CSS on marked cards */ },
    });
    renderRuleOverride(viewOverride, s.summary, s.selectedStump, hoverInfo,
      s.pendingMutation, {
        selectStump: (i) => store.update({ selectedStump: i }),
        override: (stump, threshold) => { void override(stump, threshold); },
        undo: () => { void doUndo(); },
        reset: () => { void doReset(); },
      });
    renderDecisionComparison(viewComparison, s.summary,
      s.lastImpact?.trajectories ?? null, s.selectedStump, classNames);
    renderTestResults(viewTests, s.tests, sortKey, s.hoveredTest, {
      hoverCase: (i) => { void hoverCase(i); },
      sortBy: (key) => { sortKey = key; render(); },
    });
  }

  buildBar();
  store.subscribe(render);
  render();

  return { store, render, openSession, override, undo: doUndo, reset: doReset, hoverCase };
}

export function mount(): void {
  const root = document.getElementById("app");
  if (root) createApp(root, new ApiClient(""));
}
