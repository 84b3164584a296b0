/**
 * String renderers for the UI: the editor canvas as inline SVG, status
 * badges, invariant tables, and the search result table. Pure functions
 * from data to markup so they can be checked without a browser.
 */

import type { InvariantRecord, ResultPage } from "./api.js";
import type { EditorState } from "./editor.js";

export function escapeHtml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const round = (x: number) => Math.round(x * 100) / 100;

/** current editor graph as an SVG document sized to the canvas */
export function editorSvg(state: EditorState, width = 600, height = 600): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  );
  const screen = new Map<number, { x: number; y: number }>();
  for (const v of state.vertices) screen.set(v.id, state.toScreen(v));
  for (const [a, b] of state.edges) {
    const p = screen.get(a)!;
    const q = screen.get(b)!;
    parts.push(
      `<line x1="${round(p.x)}" y1="${round(p.y)}" x2="${round(q.x)}" y2="${round(q.y)}" class="edge"/>`,
    );
  }
  state.vertices.forEach((v, i) => {
    const p = screen.get(v.id)!;
    const cls = state.selected === v.id ? "vertex selected" : "vertex";
    parts.push(`<circle cx="${round(p.x)}" cy="${round(p.y)}" r="9" class="${cls}"/>`);
    if (state.showLabels) {
      parts.push(`<text x="${round(p.x)}" y="${round(p.y - 13)}" class="label">${i}</text>`);
    }
  });
  parts.push("</svg>");
  return parts.join("\n");
}

/**
 * Badge for one invariant record. The server's display field already says
 * what to show (the value when done, the status word or the timeout
 * phrase otherwise); the status becomes a CSS class so pending badges can
 * be restyled in place when they resolve.
 */
export function badgeHtml(record: InvariantRecord): string {
  return `<span class="badge ${record.status}" data-invariant="${escapeHtml(record.invariant)}">${escapeHtml(record.display)}</span>`;
}

export function invariantTableHtml(records: InvariantRecord[]): string {
  const rows = records.map(
    (r) => `<tr><td>${escapeHtml(r.invariant)}</td><td>${badgeHtml(r)}</td></tr>`,
  );
  return `<table class="invariants"><tbody>${rows.join("")}</tbody></table>`;
}

export interface ResultTableOptions {
  columns: string[];
  thumbnailUrl: (id: number, seq: number) => string;
}

export function resultsTableHtml(page: ResultPage, opts: ResultTableOptions): string {
  const head = ["<tr><th></th><th>graph</th>"]
    .concat(opts.columns.map((c) => `<th>${escapeHtml(c)}</th>`))
    .join("");
  const rows = page.rows.map((row) => {
    const thumb =
      row.thumbnail === null
        ? `<span class="no-thumb"></span>`
        : `<img class="thumb" src="${escapeHtml(opts.thumbnailUrl(row.id, row.thumbnail))}" alt=""/>`;
    const name = row.name === null || row.name === "" ? `graph ${row.id}` : row.name;
    const cells = row.cells
      .map((c) => `<td>${c.status === "done" ? escapeHtml(c.display) : badgeHtml(c)}</td>`)
      .join("");
    return `<tr data-id="${row.id}"><td>${thumb}</td><td><a href="#/graphs/${row.id}">${escapeHtml(name)}</a></td>${cells}</tr>`;
  });
  return `<table class="results"><thead>${head}</thead><tbody>${rows.join("")}</tbody></table>`;
}
