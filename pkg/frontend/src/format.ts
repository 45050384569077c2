// The single gateway for numbers shown in the DOM. Every rendered numeric
// string is one of these formats applied to a payload value, which is what
// the contract test enforces.

export function fmt(value: number, decimals = 3): string {
  if (Number.isInteger(value) && decimals >= 0) return String(value);
  return value.toFixed(decimals);
}

export function fmtInt(value: number): string {
  return String(Math.trunc(value));
}

export function fmtPercent(value: number): string {
  return `${value.toFixed(1)}%`;
}

export const FORMAT_VARIANTS: ((v: number) => string)[] = [
  (v) => String(v),
  (v) => v.toFixed(1),
  (v) => v.toFixed(2),
  (v) => v.toFixed(3),
  (v) => v.toFixed(4),
  (v) => `${v.toFixed(1)}%`,
  (v) => String(Math.trunc(v)),
];
