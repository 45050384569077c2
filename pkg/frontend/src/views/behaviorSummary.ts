// View (b): behavioral summarization. Per-feature segmented vote charts
// ordered by importance, plus the session's stump cards with per-sample
// grids. The most impure stump starts selected (red).

import { fmt } from "../format.js";
import { CLASS_COLORS, clear, htmlEl, svgEl } from "../svg.js";
import type { SummaryDoc } from "../types.js";
import { stumpCard } from "./cards.js";

const GRID_SAMPLE_CAP = 5000;

export interface BehaviorHandlers {
  selectStump(index: number): void;
  hoverFeature(feature: number | null): void;
}

export function renderBehaviorSummary(
  container: HTMLElement,
  summary: SummaryDoc | null,
  selectedStump: number | null,
  classNames: string[],
  handlers: BehaviorHandlers,
): void {
  clear(container);
  container.appendChild(htmlEl("h3", "", "Behavioral model summarization"));
  if (!summary) {
    container.appendChild(htmlEl("p", "placeholder", "Open a surrogate model to summarize it."));
    return;
  }

  const charts = htmlEl("div", "segment-row");
  for (const fs of summary.feature_summaries) {
    const block = htmlEl("div", "segment-block");
    block.appendChild(htmlEl("div", "segment-name",
      `${fs.feature_name}`));
    const W = 170;
    const H = 120;
    const mid = H / 2;
    const maxVal = Math.max(
      ...summary.feature_summaries.flatMap((f) => f.segments.map((s) => s.top_value)), 1e-12);
    const svg = svgEl("svg", { width: W, height: H, viewBox: `0 0 ${W} ${H}` });
    svg.appendChild(svgEl("line", { x1: 0, x2: W, y1: mid, y2: mid, stroke: "#999" }));
    for (const seg of fs.segments) {
      const x0 = seg.lo * W;
      const wpx = Math.max((seg.hi - seg.lo) * W - 1, 1);
      const hTop = (seg.top_value / maxVal) * (mid - 4);
      const hBot = (Math.abs(seg.bottom_value) / maxVal) * (mid - 4);
      const other = 1 - seg.top_class;
      const top = svgEl("rect", {
        x: x0, y: mid - hTop, width: wpx, height: Math.max(hTop, 0.5),
        fill: CLASS_COLORS[seg.top_class], class: "segment-top", "data-feature": fs.feature,
      });
      const tt = svgEl("title");
      tt.textContent =
        `[${fmt(seg.lo, 2)}, ${fmt(seg.hi, 2)}): W x P ${fmt(seg.top_value, 3)} toward ` +
        `${classNames[seg.top_class]}, ${fmt(seg.bottom_value, 3)} toward ${classNames[other]}`;
      top.appendChild(tt);
      top.addEventListener("mouseenter", () => handlers.hoverFeature(fs.feature));
      top.addEventListener("mouseleave", () => handlers.hoverFeature(null));
      svg.appendChild(top);
      svg.appendChild(svgEl("rect", {
        x: x0, y: mid, width: wpx, height: Math.max(hBot, 0.5),
        fill: CLASS_COLORS[other], opacity: 0.8,
      }));
    }
    block.appendChild(svg);
    charts.appendChild(block);
  }
  container.appendChild(charts);

  const nTrain = summary.layout.points.length;
  const row = htmlEl("div", "stump-row");
  const maxWeight = Math.max(...summary.stumps.map((s) => s.weight), 1e-12);
  summary.stumps.forEach((stump, t) => {
    const grid = nTrain <= GRID_SAMPLE_CAP
      ? summary.sample_grids.find((g) => g.stump_index === t) ?? null
      : null;  // beyond the cap the segmented charts carry the view
    const card = stumpCard({
      stump, maxWeight, classNames,
      selected: t === selectedStump,
      grid: grid ? { left: [...grid.left], right: [...grid.right] } : null,
      title: `stump #${t}`,
      onClick: () => handlers.selectStump(t),
    });
    card.dataset.stump = String(t);
    row.appendChild(card);
  });
  container.appendChild(row);
}
