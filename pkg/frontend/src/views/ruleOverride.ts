// View (c): rule overriding. Impurity-ranked stump bars (colored by the
// weighted-probability score), the GT histogram of the selected stump's
// feature with dashed before/after threshold lines, and a draggable
// threshold handle that issues exactly one override per drag.

import { fmt, fmtInt } from "../format.js";
import {
  CLASS_COLORS, SELECT_RED, clear, htmlEl, linearScale, sequentialColor, svgEl,
} from "../svg.js";
import type { FlipDoc, SummaryDoc } from "../types.js";

export interface RuleOverrideHandlers {
  selectStump(index: number): void;
  override(stump: number, threshold: number): void;
  undo(): void;
  reset(): void;
}

export function renderRuleOverride(
  container: HTMLElement,
  summary: SummaryDoc | null,
  selectedStump: number | null,
  hoveredCase: { featureValue: number; flip: FlipDoc | null } | null,
  pending: boolean,
  handlers: RuleOverrideHandlers,
): void {
  clear(container);
  container.appendChild(htmlEl("h3", "", "Rule overriding"));
  if (!summary) {
    container.appendChild(htmlEl("p", "placeholder", "Open a surrogate model to edit it."));
    return;
  }

  const controls = htmlEl("div", "session-controls");
  const undoBtn = htmlEl("button", "", "undo");
  undoBtn.disabled = pending || summary.edit_count === 0;
  undoBtn.addEventListener("click", handlers.undo);
  const resetBtn = htmlEl("button", "", "reset");
  resetBtn.disabled = pending || summary.edit_count === 0;
  resetBtn.addEventListener("click", handlers.reset);
  controls.appendChild(undoBtn);
  controls.appendChild(resetBtn);
  const fidelity = summary.fidelity[String(summary.precision)];
  controls.appendChild(htmlEl("span", "fidelity-chip",
    `fidelity ${fmt(fidelity, 4)} · edits ${fmtInt(summary.edit_count)}`));
  container.appendChild(controls);

  const body = htmlEl("div", "override-body");

  // impurity bar chart, highest impurity on top
  const maxGini = Math.max(...summary.stumps.map((s) => s.gini ?? 0), 1e-12);
  const maxPerf = Math.max(...summary.stumps.map((s) => s.performance ?? 0), 1e-12);
  const barH = 16;
  const chartW = 190;
  const chart = svgEl("svg", {
    width: chartW, height: summary.stump_ranking.length * barH + 8,
    class: "impurity-chart",
  });
  summary.stump_ranking.forEach((t, row) => {
    const stump = summary.stumps[t];
    const w = ((stump.gini ?? 0) / maxGini) * (chartW - 60);
    const bar = svgEl("rect", {
      x: 34, y: 4 + row * barH, width: Math.max(w, 1.5), height: barH - 4,
      fill: sequentialColor((stump.performance ?? 0) / maxPerf),
      stroke: t === selectedStump ? SELECT_RED : "none", "stroke-width": 2,
      class: "impurity-bar", "data-stump": t,
    });
    const title = svgEl("title");
    title.textContent =
      `stump #${t} (${stump.feature_name}): gini ${fmt(stump.gini ?? 0, 3)}, ` +
      `W x P ${fmt(stump.performance ?? 0, 3)}`;
    bar.appendChild(title);
    bar.addEventListener("click", () => handlers.selectStump(t));
    chart.appendChild(bar);
    chart.appendChild(svgEl("text", {
      x: 4, y: 4 + row * barH + 10, "font-size": 10,
      fill: t === selectedStump ? SELECT_RED : "#333",
    }, `#${fmtInt(t)}`));
  });
  body.appendChild(chart);

  // histogram of the selected stump's feature + draggable threshold
  const t = selectedStump ?? summary.default_stump;
  if (t !== null) {
    const stump = summary.stumps[t];
    const fs = summary.feature_summaries.find((f) => f.feature === stump.feature);
    const histW = 320;
    const histH = 150;
    const x = linearScale(0, 1, 24, histW - 10);
    const wrap = htmlEl("div", "hist-wrap");
    wrap.appendChild(htmlEl("div", "hist-title",
      `${stump.feature_name ?? ""} — threshold ${fmt(stump.threshold, 4)}`));
    const svg = svgEl("svg", {
      width: histW, height: histH, viewBox: `0 0 ${histW} ${histH}`, class: "hist",
    });
    if (fs) {
      const maxBin = Math.max(...fs.histogram.map((b) => b.counts[0] + b.counts[1]), 1);
      const y = linearScale(0, maxBin, histH - 24, 10);
      for (const bin of fs.histogram) {
        const bx = x(bin.lo);
        const bw = Math.max(x(bin.hi) - x(bin.lo) - 1, 1);
        let base = histH - 24;
        bin.counts.forEach((c, cls) => {
          const h = base - y(c);
          const rect = svgEl("rect", {
            x: bx, y: base - h, width: bw, height: Math.max(h, 0), fill: CLASS_COLORS[cls],
            opacity: cls === 0 ? 0.9 : 0.75,
          });
          const title = svgEl("title");
          title.textContent = `[${fmt(bin.lo, 2)}, ${fmt(bin.hi, 2)}]: ${fmtInt(c)} samples`;
          rect.appendChild(title);
          svg.appendChild(rect);
          base -= h;
        });
      }
    }
    // dashed before line at the current threshold
    svg.appendChild(svgEl("line", {
      x1: x(stump.threshold), x2: x(stump.threshold), y1: 6, y2: histH - 18,
      stroke: "#111", "stroke-dasharray": "5,4", class: "line-before",
    }));
    // hovered test case: its feature value and what-if flip threshold
    if (hoveredCase) {
      svg.appendChild(svgEl("line", {
        x1: x(hoveredCase.featureValue), x2: x(hoveredCase.featureValue),
        y1: 6, y2: histH - 18, stroke: "#CC79A7", "stroke-width": 2, class: "line-case",
      }));
      if (hoveredCase.flip && hoveredCase.flip.flip_threshold !== null) {
        const fx = x(hoveredCase.flip.flip_threshold);
        const flipLine = svgEl("line", {
          x1: fx, x2: fx, y1: 6, y2: histH - 18,
          stroke: SELECT_RED, "stroke-dasharray": "2,2", class: "line-flip",
        });
        const title = svgEl("title");
        title.textContent = `swap at ${fmt(hoveredCase.flip.flip_threshold, 4)}`;
        flipLine.appendChild(title);
        svg.appendChild(flipLine);
      }
    }
    // draggable after line + handle
    const afterLine = svgEl("line", {
      x1: x(stump.threshold), x2: x(stump.threshold), y1: 6, y2: histH - 18,
      stroke: "#111", "stroke-dasharray": "2,3", class: "line-after", opacity: 0,
    });
    svg.appendChild(afterLine);
    const handle = svgEl("circle", {
      cx: x(stump.threshold), cy: histH - 14, r: 7,
      fill: pending ? "#aaa" : SELECT_RED, class: "threshold-handle", cursor: "ew-resize",
    });
    svg.appendChild(handle);

    let dragging = false;
    let lastValue = stump.threshold;
    const clampX = (px: number) => Math.max(0, Math.min(1, x.invert(px)));
    const localX = (ev: MouseEvent): number => {
      const rect = (svg as unknown as { getBoundingClientRect(): DOMRect })
        .getBoundingClientRect();
      return ev.clientX - rect.left;
    };
    handle.addEventListener("mousedown", (ev) => {
      if (pending) return;
      dragging = true;
      ev.preventDefault();
    });
    svg.addEventListener("mousemove", (ev) => {
      if (!dragging) return;
      lastValue = clampX(localX(ev as MouseEvent));
      const px = x(lastValue);
      afterLine.setAttribute("x1", String(px));
      afterLine.setAttribute("x2", String(px));
      afterLine.setAttribute("opacity", "1");
      handle.setAttribute("cx", String(px));
    });
    const finish = () => {
      if (!dragging) return;
      dragging = false;
      if (lastValue !== stump.threshold) handlers.override(t, lastValue);
    };
    svg.addEventListener("mouseup", finish);
    svg.addEventListener("mouseleave", finish);
    wrap.appendChild(svg);
    body.appendChild(wrap);
  }
  container.appendChild(body);
}
