// The four-zone stump card shared by the selection popup and the behavior
// view: weight bar on top, leaf probability stacks at the sides, GT count
// bars (or sample grid) in the middle, threshold bar at the bottom.

import { fmt, fmtInt } from "../format.js";
import { CLASS_COLORS, SELECT_RED, WEIGHT_ORANGE, htmlEl, svgEl } from "../svg.js";
import type { GridRow, StumpDoc } from "../types.js";

const W = 220;
const GRID_COLS = 8;
const CELL = 7;

export interface StumpCardOptions {
  stump: StumpDoc;
  maxWeight: number;
  classNames: string[];
  selected?: boolean;
  grid?: { left: GridRow[]; right: GridRow[] } | null;
  title?: string;
  onClick?: () => void;
}

function probStack(x: number, y: number, h: number, probs: readonly number[],
                   classNames: string[], side: string): SVGGElement {
  const g = svgEl("g");
  let offset = 0;
  probs.forEach((p, cls) => {
    const seg = svgEl("rect", {
      x, y: y + offset, width: 16, height: Math.max(p * h, 0),
      fill: CLASS_COLORS[cls],
    });
    const t = svgEl("title");
    t.textContent = `${side} P(${classNames[cls]}) = ${fmt(p, 3)}`;
    seg.appendChild(t);
    g.appendChild(seg);
    offset += p * h;
  });
  return g;
}

function countBars(x: number, y: number, counts: readonly number[],
                   maxCount: number, classNames: string[], side: string): SVGGElement {
  const g = svgEl("g");
  counts.forEach((c, cls) => {
    const w = maxCount > 0 ? (c / maxCount) * 55 : 0;
    const bar = svgEl("rect", {
      x, y: y + cls * 14, width: Math.max(w, c > 0 ? 2 : 0), height: 11,
      fill: CLASS_COLORS[cls],
    });
    const t = svgEl("title");
    t.textContent = `${side}: ${fmtInt(c)} ${classNames[cls]} samples`;
    bar.appendChild(t);
    g.appendChild(bar);
    g.appendChild(svgEl("text", {
      x: x + 58, y: y + cls * 14 + 9, "font-size": 9, fill: "#333",
    }, fmtInt(c)));
  });
  return g;
}

function sampleGrid(x: number, y: number, rows: GridRow[], mirror: boolean): SVGGElement {
  const g = svgEl("g");
  rows.forEach((row, i) => {
    const col = i % GRID_COLS;
    const r = Math.floor(i / GRID_COLS);
    const cx = mirror ? x - (col + 1) * CELL : x + col * CELL;
    const cell = svgEl("rect", {
      x: cx, y: y + r * CELL, width: CELL - 1, height: CELL - 1,
      fill: CLASS_COLORS[row[2]], "data-sample": row[0],
      class: "grid-cell",
    });
    const t = svgEl("title");
    t.textContent = `sample ${fmtInt(row[0])}: P(gt) = ${fmt(row[1], 3)}`;
    cell.appendChild(t);
    g.appendChild(cell);
  });
  return g;
}

export function stumpCard(opts: StumpCardOptions): HTMLElement {
  const { stump, classNames } = opts;
  const gridRows = opts.grid
    ? Math.max(Math.ceil(opts.grid.left.length / GRID_COLS),
               Math.ceil(opts.grid.right.length / GRID_COLS))
    : 0;
  const midH = opts.grid ? Math.max(gridRows * CELL, 36) : 36;
  const H = 30 + Math.max(70, midH + 8) + 34;
  const card = htmlEl("div", `stump-card${opts.selected ? " selected" : ""}`);
  if (opts.onClick) card.addEventListener("click", opts.onClick);

  if (opts.title) card.appendChild(htmlEl("div", "card-title", opts.title));
  const svg = svgEl("svg", { width: W, height: H, viewBox: `0 0 ${W} ${H}` });
  card.appendChild(svg);

  // zone 1: weight bar expanding from the middle
  const wFrac = opts.maxWeight > 0 ? stump.weight / opts.maxWeight : 0;
  svg.appendChild(svgEl("rect", { x: 20, y: 6, width: W - 40, height: 10, fill: "#eee" }));
  const wBar = svgEl("rect", {
    x: W / 2 - (wFrac * (W - 40)) / 2, y: 6,
    width: Math.max(wFrac * (W - 40), stump.weight > 0 ? 2 : 0), height: 10,
    fill: WEIGHT_ORANGE,
  });
  const wTitle = svgEl("title");
  wTitle.textContent = `weight = ${fmt(stump.weight, 3)}`;
  wBar.appendChild(wTitle);
  svg.appendChild(wBar);

  // zone 2: leaf probability stacks at both flanks
  const midTop = 26;
  const stackH = Math.max(44, midH);
  svg.appendChild(probStack(2, midTop, stackH, stump.p_left, classNames, "left"));
  svg.appendChild(probStack(W - 18, midTop, stackH, stump.p_right, classNames, "right"));

  // zone 3: GT distribution per subtree (count bars or per-sample grid)
  if (opts.grid) {
    svg.appendChild(sampleGrid(W / 2 - 8, midTop, opts.grid.left, true));
    svg.appendChild(sampleGrid(W / 2 + 8, midTop, opts.grid.right, false));
  } else {
    const maxCount = Math.max(...stump.counts.left, ...stump.counts.right, 1);
    svg.appendChild(countBars(26, midTop + 6, stump.counts.left, maxCount, classNames, "left"));
    svg.appendChild(countBars(W / 2 + 14, midTop + 6, stump.counts.right, maxCount, classNames, "right"));
  }

  // zone 4: threshold bar over [0, 1]
  const ty = H - 22;
  const tx = 20;
  const tw = W - 40;
  svg.appendChild(svgEl("rect", { x: tx, y: ty, width: tw, height: 8, fill: "#ddd" }));
  const leftClass = stump.p_left[1] > stump.p_left[0] ? 1 : 0;
  const rightClass = stump.p_right[1] > stump.p_right[0] ? 1 : 0;
  svg.appendChild(svgEl("rect", {
    x: tx, y: ty, width: stump.threshold * tw, height: 8, fill: CLASS_COLORS[leftClass],
    opacity: 0.55,
  }));
  svg.appendChild(svgEl("rect", {
    x: tx + stump.threshold * tw, y: ty, width: (1 - stump.threshold) * tw, height: 8,
    fill: CLASS_COLORS[rightClass], opacity: 0.55,
  }));
  svg.appendChild(svgEl("line", {
    x1: tx + stump.threshold * tw, x2: tx + stump.threshold * tw,
    y1: ty - 3, y2: ty + 11, stroke: SELECT_RED, "stroke-width": 2,
  }));
  svg.appendChild(svgEl("text", {
    x: tx + stump.threshold * tw, y: ty + 22, "font-size": 10,
    "text-anchor": "middle", fill: "#333", class: "threshold-label",
  }, fmt(stump.threshold, 2)));

  const name = stump.feature_name ?? "";
  card.appendChild(htmlEl("div", "card-caption", name));
  return card;
}
