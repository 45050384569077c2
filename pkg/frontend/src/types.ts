// Payload types mirroring the /v1 JSON documents.

export interface DatasetDoc {
  dataset_id: string;
  n_samples: number;
  n_features: number;
  feature_names: string[];
  class_names: string[];
  train_size: number;
  test_size: number;
  split_seed: number;
  split_ratio: number;
}

export interface TargetDoc {
  dataset_id: string;
  source: string;
  train_accuracy: number;
  test_accuracy: number;
}

export type Precision = number | "full";

export interface StumpDoc {
  feature: number;
  feature_name?: string;
  threshold: number;
  p_left: readonly number[];
  p_right: readonly number[];
  weight: number;
  counts: { left: readonly number[]; right: readonly number[] };
  degenerate: boolean;
  uniqueness?: string;
  performance?: number;
  gini?: number;
}

export interface SweepModelDoc {
  complexity_index: number;
  n_estimators: number;
  precision: Precision;
  fidelity: Record<string, number>;
  best_precision: Precision;
  stumps: StumpDoc[];
}

export interface SweepDoc {
  schema: string;
  seed: number;
  iterations: number;
  max_estimators: number;
  feature_names: string[];
  default_index: number;
  default_precision: Precision;
  models: SweepModelDoc[];
}

export interface SessionDoc {
  session_id: string;
  sweep_id: string;
  complexity_index: number;
  precision: Precision;
  n_estimators: number;
}

export interface SegmentDoc {
  lo: number;
  hi: number;
  top_class: number;
  top_value: number;
  bottom_value: number;
}

export interface HistogramBin {
  lo: number;
  hi: number;
  counts: readonly number[];
}

export interface FeatureSummaryDoc {
  feature: number;
  feature_name: string;
  importance: number;
  boundaries: readonly number[];
  segments: SegmentDoc[];
  histogram: HistogramBin[];
}

export type GridRow = readonly [number, number, number]; // index, p_gt, gt

export interface LayoutDoc {
  method: string;
  alignment_ref: string | null;
  points: (readonly [number, number, string, boolean])[];
}

export interface SummaryDoc {
  session_id: string;
  complexity_index: number;
  n_estimators: number;
  precision: Precision;
  edit_count: number;
  fidelity: Record<string, number>;
  stumps: StumpDoc[];
  feature_importance: { feature: number; feature_name: string; score: number }[];
  stump_ranking: number[];
  default_stump: number | null;
  feature_summaries: FeatureSummaryDoc[];
  sample_grids: { stump_index: number; left: GridRow[]; right: GridRow[] }[];
  layout: LayoutDoc;
}

export interface MovedSample {
  index: number;
  old_side: string;
  new_side: string;
}

export interface TrajectoryDoc {
  index: number;
  start: readonly number[];
  end: readonly number[];
  changed: boolean;
}

export interface ImpactDoc {
  impact: {
    stump_index: number;
    old_threshold: number;
    new_threshold: number;
    moved_samples: MovedSample[];
    fidelity_before: number;
    fidelity_after: number;
    gini_before: number;
    gini_after: number;
    stump: StumpDoc;
  };
  fidelity: Record<string, number>;
  edit_count: number;
  layout: LayoutDoc;
  trajectories: TrajectoryDoc[];
}

export interface ContributionDoc {
  feature: number;
  feature_name: string;
  value: number;
  percent: number;
  toward: number;
}

export interface TestRowDoc {
  index: number;
  gt: number;
  pred: number;
  target_pred: number | null;
  scores: readonly number[];
  margin: number;
  contributions: ContributionDoc[];
}

export interface TestsDoc {
  class_names: string[];
  rows: TestRowDoc[];
}

export interface FlipDoc {
  test_index: number;
  stump: number;
  feature: number;
  feature_name: string;
  feature_value: number;
  current_threshold: number;
  flip_threshold: number | null;
}
