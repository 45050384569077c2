// View (a): surrogate model selection. Lollipop plot of fidelity vs
// complexity with four precision dots per model, and the dot-plot-with-
// lines showing each model's stumps, colored by uniqueness or performance.

import { fmt } from "../format.js";
import {
  DUPLICATED_ORANGE, ORIGINAL_GRAY, SELECT_RED, UNIQUE_BLUE,
  clear, grayscale, htmlEl, linearScale, sequentialColor, svgEl,
} from "../svg.js";
import type { Precision, SweepDoc } from "../types.js";
import type { Encoding } from "../store.js";
import { stumpCard } from "./cards.js";

export interface ModelSelectionHandlers {
  openSession(complexityIndex: number, precision: Precision): void;
  toggleEncoding(): void;
  markStump(feature: number, threshold: number): void;
}

const PRECISIONS: Precision[] = [1, 2, 3, 4];

function stumpKey(feature: number, threshold: number): string {
  return `${feature}@${threshold.toFixed(4)}`;
}

export function renderModelSelection(
  container: HTMLElement,
  sweep: SweepDoc | null,
  selectedComplexity: number | null,
  encoding: Encoding,
  marked: { feature: number; threshold: number } | null,
  classNames: string[],
  handlers: ModelSelectionHandlers,
): void {
  clear(container);
  container.appendChild(htmlEl("h3", "", "Surrogate model selection"));
  if (!sweep) {
    container.appendChild(htmlEl("p", "placeholder",
      "Upload a dataset, configure a target, and run a sweep."));
    return;
  }

  const header = htmlEl("div", "view-header");
  const toggle = htmlEl("button", "encoding-toggle",
    encoding === "uniqueness" ? "encoding: uniqueness" : "encoding: performance");
  toggle.addEventListener("click", handlers.toggleEncoding);
  header.appendChild(toggle);
  container.appendChild(header);

  const n = sweep.models.length;
  const width = Math.max(560, n * 16 + 80);
  const lolliH = 150;
  const x = linearScale(1, Math.max(n, 2), 46, width - 16);

  const svg = svgEl("svg", {
    width, height: lolliH, viewBox: `0 0 ${width} ${lolliH}`, class: "lollipop",
  });
  const y = linearScale(0, 1, lolliH - 26, 12);
  svg.appendChild(svgEl("line", {
    x1: 40, x2: width - 10, y1: y(1), y2: y(1), stroke: "#ddd", "stroke-dasharray": "2,3",
  }));

  for (const model of sweep.models) {
    const cx = x(model.complexity_index);
    const full = model.fidelity["full"];
    const best = Math.max(...Object.values(model.fidelity));
    const isSelected = model.complexity_index === selectedComplexity;
    const stem = svgEl("line", {
      x1: cx, x2: cx, y1: y(0), y2: y(best), stroke: isSelected ? SELECT_RED : "#bbb",
      "stroke-width": isSelected ? 2 : 1,
    });
    svg.appendChild(stem);
    const head = svgEl("circle", {
      cx, cy: y(full), r: 4, fill: isSelected ? SELECT_RED : "#444", class: "lolli-head",
      "data-k": model.complexity_index,
    });
    const headTitle = svgEl("title");
    headTitle.textContent =
      `model #${model.complexity_index}: ${model.n_estimators} stumps, ` +
      `fidelity ${fmt(full, 4)} (open at best precision ${model.best_precision})`;
    head.appendChild(headTitle);
    head.addEventListener("click", () =>
      handlers.openSession(model.complexity_index, model.best_precision));
    svg.appendChild(head);

    // four precision dots, light (1 decimal) to dark (4 decimals)
    PRECISIONS.forEach((p, i) => {
      const fid = model.fidelity[String(p)];
      const dot = svgEl("circle", {
        cx, cy: y(fid) - 6 - i * 7, r: 2.6, fill: grayscale((i + 1) / 4),
        class: "precision-dot", "data-k": model.complexity_index, "data-p": String(p),
      });
      const t = svgEl("title");
      t.textContent = `fidelity at ${p} decimals = ${fmt(fid, 4)} (click to open)`;
      dot.appendChild(t);
      dot.addEventListener("click", () => handlers.openSession(model.complexity_index, p));
      svg.appendChild(dot);
    });

    const label = svgEl("text", {
      x: cx, y: lolliH - 8, "font-size": 9, "text-anchor": "middle",
      fill: isSelected ? SELECT_RED : "#555", class: "complexity-label",
    }, String(model.complexity_index));
    svg.appendChild(label);
  }
  container.appendChild(svg);

  // dot plot with lines: one column per model, one line per stump
  const maxStumps = Math.max(...sweep.models.map((m) => m.n_estimators));
  const maxPerf = Math.max(
    1e-12, ...sweep.models.flatMap((m) => m.stumps.map((s) => s.performance ?? 0)));
  const rowH = 8;
  const dotH = maxStumps * rowH + 24;
  const dots = svgEl("svg", {
    width, height: dotH, viewBox: `0 0 ${width} ${dotH}`, class: "dot-plot",
  });

  for (const model of sweep.models) {
    const cx = x(model.complexity_index);
    model.stumps.forEach((stump, t) => {
      const key = stumpKey(stump.feature, stump.threshold);
      const isMarked = marked !== null &&
        key === stumpKey(marked.feature, marked.threshold);
      let stroke = ORIGINAL_GRAY;
      let len = 8;
      let widthPx = 2.5;
      if (encoding === "uniqueness") {
        if (stump.uniqueness === "unique") { stroke = UNIQUE_BLUE; len = 12; widthPx = 4; }
        else if (stump.uniqueness === "duplicated") { stroke = DUPLICATED_ORANGE; len = 5; widthPx = 1.5; }
      } else {
        stroke = sequentialColor((stump.performance ?? 0) / maxPerf);
        len = 10;
        widthPx = 3;
      }
      const line = svgEl("line", {
        x1: cx - len / 2, x2: cx + len / 2,
        y1: 12 + t * rowH, y2: 12 + t * rowH,
        stroke, "stroke-width": widthPx,
        class: `stump-line${isMarked ? " marked" : ""}`,
        "data-k": model.complexity_index, "data-t": t,
      });
      if (isMarked) line.setAttribute("stroke-dasharray", "4,3");
      const title = svgEl("title");
      title.textContent =
        `${stump.feature_name} < ${fmt(stump.threshold, 4)} ` +
        `(weight ${fmt(stump.weight, 3)}, W x P ${fmt(stump.performance ?? 0, 3)}, ` +
        `${stump.uniqueness})`;
      line.appendChild(title);
      line.addEventListener("click", () =>
        handlers.markStump(stump.feature, stump.threshold));
      dots.appendChild(line);
    });
  }
  container.appendChild(dots);

  // popup for the marked stump: first occurrence across models
  if (marked) {
    for (const model of sweep.models) {
      const hit = model.stumps.find(
        (s) => stumpKey(s.feature, s.threshold) === stumpKey(marked.feature, marked.threshold));
      if (hit) {
        const maxWeight = Math.max(...model.stumps.map((s) => s.weight), 1e-12);
        container.appendChild(stumpCard({
          stump: hit, maxWeight, classNames,
          title: `stump from model #${model.complexity_index}`,
        }));
        break;
      }
    }
  }
}
