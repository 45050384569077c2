// View (e): test set results. Sortable table of GT / Pred / target-Pred /
// margin with per-feature contribution bars (length = percent of the row,
// color = pushed class, opacity = influence level). Hovering a row feeds
// the rule-override histogram with the case's value and flip marker.

import { fmt, fmtPercent } from "../format.js";
import { CLASS_COLORS, clear, htmlEl } from "../svg.js";
import type { TestsDoc } from "../types.js";

export type TestSortKey = "margin" | "gt" | "pred" | "index";

export interface TestResultsHandlers {
  hoverCase(index: number | null): void;
  sortBy(key: TestSortKey): void;
}

export function renderTestResults(
  container: HTMLElement,
  tests: TestsDoc | null,
  sortKey: TestSortKey | null,
  hovered: number | null,
  handlers: TestResultsHandlers,
): void {
  clear(container);
  container.appendChild(htmlEl("h3", "", "Test set results"));
  if (!tests) {
    container.appendChild(htmlEl("p", "placeholder", "Open a surrogate model to test it."));
    return;
  }

  const rows = [...tests.rows];
  if (sortKey === "margin") rows.sort((a, b) => a.margin - b.margin);
  else if (sortKey === "gt") rows.sort((a, b) => a.gt - b.gt);
  else if (sortKey === "pred") rows.sort((a, b) => a.pred - b.pred);
  else if (sortKey === "index") rows.sort((a, b) => a.index - b.index);

  const table = htmlEl("table", "tests-table");
  const thead = htmlEl("thead");
  const hr = htmlEl("tr");
  const headers: [string, TestSortKey | null][] = [
    ["case", "index"], ["GT", "gt"], ["Pred", "pred"], ["target", null],
    ["margin", "margin"], ["feature contributions", null],
  ];
  for (const [label, key] of headers) {
    const th = htmlEl("th", key ? "sortable" : "", label);
    if (key) th.addEventListener("click", () => handlers.sortBy(key));
    hr.appendChild(th);
  }
  thead.appendChild(hr);
  table.appendChild(thead);

  const tbody = htmlEl("tbody");
  for (const row of rows) {
    const tr = htmlEl("tr", row.pred === row.gt ? "correct" : "misclassified");
    if (row.index === hovered) tr.classList.add("hovered");
    tr.dataset.index = String(row.index);
    tr.addEventListener("mouseenter", () => handlers.hoverCase(row.index));
    tr.addEventListener("mouseleave", () => handlers.hoverCase(null));

    tr.appendChild(htmlEl("td", "", String(row.index)));
    const gtCell = htmlEl("td", "", tests.class_names[row.gt]);
    gtCell.style.color = CLASS_COLORS[row.gt];
    tr.appendChild(gtCell);
    const predCell = htmlEl("td", "", tests.class_names[row.pred]);
    predCell.style.color = CLASS_COLORS[row.pred];
    tr.appendChild(predCell);
    tr.appendChild(htmlEl(
      "td", "", row.target_pred === null ? "-" : tests.class_names[row.target_pred]));
    tr.appendChild(htmlEl("td", "margin-cell", fmt(row.margin, 3)));

    const barsCell = htmlEl("td", "contrib-cell");
    const wrap = htmlEl("div", "contrib-bars");
    const maxPercent = Math.max(...row.contributions.map((c) => c.percent), 1e-9);
    for (const c of row.contributions) {
      const bar = htmlEl("span", "contrib-bar");
      bar.style.width = `${Math.max(c.percent, 0.5)}%`;
      bar.style.background = CLASS_COLORS[c.toward];
      // linear influence map: the row's top contributor is fully opaque
      bar.style.opacity = String(0.35 + 0.65 * (c.percent / maxPercent));
      bar.title = `${c.feature_name}: ${fmtPercent(c.percent)} toward ` +
        `${tests.class_names[c.toward]} (value ${fmt(c.value, 3)})`;
      wrap.appendChild(bar);
    }
    barsCell.appendChild(wrap);
    tr.appendChild(barsCell);
    tbody.appendChild(tr);
  }
  table.appendChild(tbody);
  container.appendChild(table);
}
