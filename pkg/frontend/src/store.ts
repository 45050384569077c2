// Single store for the five linked views. Upstream changes clear stale
// downstream selections (dataset -> sweep -> session -> stump/test), and at
// most one mutation per session is in flight at a time.

import type {
  DatasetDoc, ImpactDoc, Precision, SummaryDoc, SweepDoc, TargetDoc, TestsDoc,
} from "./types.js";

export type Encoding = "performance" | "uniqueness";

export interface ViewState {
  dataset: DatasetDoc | null;
  target: TargetDoc | null;
  sweep: SweepDoc | null;
  sweepId: string | null;
  sessionId: string | null;
  summary: SummaryDoc | null;
  tests: TestsDoc | null;
  lastImpact: ImpactDoc | null;
  selectedComplexity: number | null;
  selectedPrecision: Precision;
  selectedStump: number | null;      // boosting index within the open session
  markedStump: { feature: number; threshold: number } | null; // dot-plot click
  encoding: Encoding;
  hoveredTest: number | null;
  pendingMutation: boolean;
  error: string | null;
}

export type Listener = (state: ViewState) => void;

export class Store {
  state: ViewState = {
    dataset: null, target: null, sweep: null, sweepId: null,
    sessionId: null, summary: null, tests: null, lastImpact: null,
    selectedComplexity: null, selectedPrecision: "full", selectedStump: null,
    markedStump: null, encoding: "uniqueness", hoveredTest: null,
    pendingMutation: false, error: null,
  };

  private listeners: Listener[] = [];

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  update(patch: Partial<ViewState>): void {
    Object.assign(this.state, patch);
    for (const fn of this.listeners) fn(this.state);
  }

  setDataset(dataset: DatasetDoc): void {
    this.update({
      dataset, target: null, sweep: null, sweepId: null, sessionId: null,
      summary: null, tests: null, lastImpact: null, selectedComplexity: null,
      selectedStump: null, markedStump: null, hoveredTest: null, error: null,
    });
  }

  setTarget(target: TargetDoc): void {
    this.update({
      target, sweep: null, sweepId: null, sessionId: null, summary: null,
      tests: null, lastImpact: null, selectedComplexity: null,
      selectedStump: null, markedStump: null, hoveredTest: null,
    });
  }

  setSweep(sweep: SweepDoc, sweepId: string): void {
    this.update({
      sweep, sweepId, sessionId: null, summary: null, tests: null,
      lastImpact: null, selectedComplexity: sweep.default_index,
      selectedPrecision: sweep.default_precision, selectedStump: null,
      markedStump: null, hoveredTest: null,
    });
  }

  setSession(sessionId: string, summary: SummaryDoc, tests: TestsDoc): void {
    this.update({
      sessionId, summary, tests, lastImpact: null,
      selectedStump: summary.default_stump, hoveredTest: null,
    });
  }
}
