// Hand-rolled SVG/DOM helpers; no chart library so the bundle stays
// dependency-free and every rendered number provably comes from a payload.

const SVG_NS = "http://www.w3.org/2000/svg";

export type Attrs = Record<string, string | number>;

export function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K, attrs: Attrs = {}, text?: string,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  if (text !== undefined) node.textContent = text;
  return node;
}

export function htmlEl<K extends keyof HTMLElementTagNameMap>(
  tag: K, className = "", text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function clear(node: Element): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

export interface Scale {
  (v: number): number;
  invert(px: number): number;
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  const f = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  f.invert = (px: number) => d0 + ((px - r0) / (r1 - r0 || 1)) * span;
  return f;
}

// colorblind-safe palettes: class hues from Okabe-Ito, sequential ramp
// viridis-like (dark blue -> yellow)
export const CLASS_COLORS = ["#009E73", "#9467bd"]; // class 0 green, class 1 purple
export const CLASS_COLORS_DIM = ["#88cbb8", "#c6b3dd"];
export const UNIQUE_BLUE = "#0072B2";
export const ORIGINAL_GRAY = "#8a8a8a";
export const DUPLICATED_ORANGE = "#E69F00";
export const WEIGHT_ORANGE = "#E69F00";
export const SELECT_RED = "#D55E00";

const RAMP = ["#440154", "#414487", "#2a788e", "#22a884", "#7ad151", "#fde725"];

export function sequentialColor(t: number): string {
  const x = Math.max(0, Math.min(1, t)) * (RAMP.length - 1);
  const i = Math.min(Math.floor(x), RAMP.length - 2);
  const frac = x - i;
  const a = hex(RAMP[i]);
  const b = hex(RAMP[i + 1]);
  const mix = a.map((c, k) => Math.round(c + (b[k] - c) * frac));
  return `rgb(${mix[0]},${mix[1]},${mix[2]})`;
}

function hex(color: string): number[] {
  return [1, 3, 5].map((i) => parseInt(color.slice(i, i + 2), 16));
}

export function grayscale(t: number): string {
  const g = Math.round(200 - Math.max(0, Math.min(1, t)) * 180);
  return `rgb(${g},${g},${g})`;
}
