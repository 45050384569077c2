// View (d): comparing decisions. 2-D layout of membership vectors;
// color = GT class, brightness = the selected stump's subtree side, gray
// trajectory lines after each edit. Wheel zoom + drag pan.

import { fmt, fmtInt } from "../format.js";
import {
  CLASS_COLORS, CLASS_COLORS_DIM, clear, htmlEl, linearScale, svgEl,
} from "../svg.js";
import type { SummaryDoc, TrajectoryDoc } from "../types.js";

const W = 420;
const H = 320;

export function renderDecisionComparison(
  container: HTMLElement,
  summary: SummaryDoc | null,
  trajectories: TrajectoryDoc[] | null,
  selectedStump: number | null,
  classNames: string[],
): void {
  clear(container);
  container.appendChild(htmlEl("h3", "", "Comparing decisions"));
  if (!summary) {
    container.appendChild(htmlEl("p", "placeholder", "Open a surrogate model to project it."));
    return;
  }

  // gt per sample: every sample appears in each stump's grid exactly once
  const gtOf = new Map<number, number>();
  const grid0 = summary.sample_grids[0];
  if (grid0) {
    for (const row of [...grid0.left, ...grid0.right]) gtOf.set(row[0], row[2]);
  }
  // the selected stump's Left set drives brightness (local investigation)
  const leftSet = new Set<number>();
  const t = selectedStump ?? summary.default_stump;
  const grid = summary.sample_grids.find((g) => g.stump_index === t);
  if (grid) for (const row of grid.left) leftSet.add(row[0]);

  const pts = summary.layout.points;
  const xs = pts.map((p) => p[0]);
  const ys = pts.map((p) => p[1]);
  const pad = 0.08;
  const xSpan = Math.max(Math.max(...xs) - Math.min(...xs), 1e-9);
  const ySpan = Math.max(Math.max(...ys) - Math.min(...ys), 1e-9);
  const x = linearScale(Math.min(...xs) - pad * xSpan, Math.max(...xs) + pad * xSpan, 8, W - 8);
  const y = linearScale(Math.min(...ys) - pad * ySpan, Math.max(...ys) + pad * ySpan, H - 8, 8);

  const svg = svgEl("svg", {
    width: W, height: H, viewBox: `0 0 ${W} ${H}`, class: "projection",
  });

  if (trajectories) {
    for (const tr of trajectories) {
      if (tr.start[0] === tr.end[0] && tr.start[1] === tr.end[1]) continue;
      svg.appendChild(svgEl("line", {
        x1: x(tr.start[0]), y1: y(tr.start[1]), x2: x(tr.end[0]), y2: y(tr.end[1]),
        stroke: tr.changed ? "#666" : "#ccc", "stroke-width": tr.changed ? 1.4 : 0.7,
        class: `trajectory${tr.changed ? " changed" : ""}`,
      }));
    }
  }

  pts.forEach((p, i) => {
    const gt = gtOf.get(i) ?? 0;
    const bright = leftSet.has(i);
    const dot = svgEl("circle", {
      cx: x(p[0]), cy: y(p[1]), r: 4,
      fill: bright ? CLASS_COLORS[gt] : CLASS_COLORS_DIM[gt],
      stroke: "#fff", "stroke-width": 0.6,
      class: "layout-point", "data-sample": i,
    });
    const title = svgEl("title");
    title.textContent =
      `sample ${fmtInt(i)} (${classNames[gt]}): ${bright ? "Left" : "Right"} subtree of ` +
      `stump #${fmtInt(t ?? 0)}, position ${fmt(p[0], 3)}, ${fmt(p[1], 3)}`;
    dot.appendChild(title);
    svg.appendChild(dot);
  });

  // wheel zoom + drag pan over the viewBox
  let vb = { x: 0, y: 0, w: W, h: H };
  const applyVb = () =>
    svg.setAttribute("viewBox", `${vb.x} ${vb.y} ${vb.w} ${vb.h}`);
  svg.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    const factor = (ev as WheelEvent).deltaY > 0 ? 1.15 : 1 / 1.15;
    const nw = Math.min(Math.max(vb.w * factor, W / 8), W * 4);
    const nh = (nw / vb.w) * vb.h;
    vb = { x: vb.x + (vb.w - nw) / 2, y: vb.y + (vb.h - nh) / 2, w: nw, h: nh };
    applyVb();
  });
  let panning: { sx: number; sy: number } | null = null;
  svg.addEventListener("mousedown", (ev) => {
    panning = { sx: (ev as MouseEvent).clientX, sy: (ev as MouseEvent).clientY };
  });
  svg.addEventListener("mousemove", (ev) => {
    if (!panning) return;
    const me = ev as MouseEvent;
    vb = {
      ...vb,
      x: vb.x - ((me.clientX - panning.sx) * vb.w) / W,
      y: vb.y - ((me.clientY - panning.sy) * vb.h) / H,
    };
    panning = { sx: me.clientX, sy: me.clientY };
    applyVb();
  });
  svg.addEventListener("mouseup", () => { panning = null; });
  svg.addEventListener("mouseleave", () => { panning = null; });

  container.appendChild(svg);
}
