/**
 * Browser entry point: wires the editor, composer, and detail views onto
 * the static page. Routing is hash-based (#/ for the workbench,
 * #/graphs/{id} for a graph's page) so the bundle can be served by any
 * file server next to the API.
 */

import { GraphVaultClient, ApiError, graphPageHash } from "./api.js";
import type { GraphDetail, InvariantInfo, ResultPage, StatusResponse } from "./api.js";
import { EditorState } from "./editor.js";
import { Graph6Error } from "./graph6.js";
import { StatusPoller } from "./poll.js";
import { badgeHtml, editorSvg, escapeHtml, invariantTableHtml, resultsTableHtml } from "./render.js";
import { downloadBlob, pdfFromSvg, pngFromSvg } from "./svgexport.js";
import { QueryComposer, describeCriterion } from "./wire.js";
import type { ComparisonOp, Criterion } from "./wire.js";

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function input(id: string): HTMLInputElement {
  return $(id) as HTMLInputElement;
}

function select(id: string): HTMLSelectElement {
  return $(id) as HTMLSelectElement;
}

function showError(err: unknown): void {
  const box = $("error-box");
  if (err instanceof ApiError) {
    const offset =
      err.detail && typeof err.detail === "object" && "offset" in err.detail
        ? ` (offset ${(err.detail as { offset: number }).offset})`
        : "";
    box.textContent = `${err.code}: ${err.message}${offset}`;
  } else if (err instanceof Graph6Error) {
    box.textContent = `graph6 error at offset ${err.offset}: ${err.message}`;
  } else {
    box.textContent = String(err);
  }
  box.classList.add("visible");
  setTimeout(() => box.classList.remove("visible"), 6000);
}

function makeClient(): GraphVaultClient {
  const base = localStorage.getItem("gv.base") ?? "";
  const key = localStorage.getItem("gv.key");
  return new GraphVaultClient(base, { apiKey: key });
}

let client = makeClient();
let registry: InvariantInfo[] = [];

// ------------------------------------------------------------ editor view

const editor = new EditorState();
const CANVAS_W = 640;
const CANVAS_H = 520;

let dragId: number | null = null;
let panning = false;
let moved = false;
let lastX = 0;
let lastY = 0;

function canvasPoint(ev: MouseEvent): { x: number; y: number } {
  const rect = ($("canvas-box") as HTMLDivElement).getBoundingClientRect();
  return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
}

function redrawEditor(): void {
  $("canvas-box").innerHTML = editorSvg(editor, CANVAS_W, CANVAS_H);
  const out = $("g6-readout");
  if (editor.vertices.length === 0) {
    out.textContent = "(empty graph)";
  } else {
    try {
      out.textContent = editor.toGraph6();
    } catch (err) {
      out.textContent = String(err);
    }
  }
  $("force-toggle").classList.toggle("on", editor.forcesOn);
  $("label-toggle").classList.toggle("on", editor.showLabels);
}

function bindEditor(): void {
  const box = $("canvas-box");
  box.addEventListener("mousedown", (ev) => {
    const p = canvasPoint(ev);
    moved = false;
    lastX = p.x;
    lastY = p.y;
    const hit = editor.hitTest(p.x, p.y);
    if (hit) dragId = hit.id;
    else panning = true;
  });
  box.addEventListener("mousemove", (ev) => {
    if (dragId === null && !panning) return;
    const p = canvasPoint(ev);
    if (Math.abs(p.x - lastX) + Math.abs(p.y - lastY) > 3) moved = true;
    if (!moved) return;
    if (dragId !== null) {
      editor.dragVertexTo(dragId, p.x, p.y);
    } else {
      editor.panBy(p.x - lastX, p.y - lastY);
      lastX = p.x;
      lastY = p.y;
    }
    redrawEditor();
  });
  const finish = (ev: MouseEvent) => {
    if (dragId === null && !panning) return;
    if (!moved) {
      const p = canvasPoint(ev);
      editor.clickAt(p.x, p.y);
    }
    dragId = null;
    panning = false;
    redrawEditor();
  };
  box.addEventListener("mouseup", finish);
  box.addEventListener("mouseleave", () => {
    dragId = null;
    panning = false;
  });
  box.addEventListener("wheel", (ev) => {
    ev.preventDefault();
    const p = canvasPoint(ev);
    editor.zoomAt(p.x, p.y, ev.deltaY < 0 ? 1.15 : 1 / 1.15);
    redrawEditor();
  });
  document.addEventListener("keydown", (ev) => {
    if (ev.key === "Delete" || ev.key === "Backspace") {
      if (document.activeElement && document.activeElement.tagName === "INPUT") return;
      if (editor.deleteSelected()) redrawEditor();
    }
  });

  $("force-toggle").addEventListener("click", () => {
    editor.forcesOn = !editor.forcesOn;
    redrawEditor();
  });
  $("label-toggle").addEventListener("click", () => {
    editor.showLabels = !editor.showLabels;
    redrawEditor();
  });
  $("clear-btn").addEventListener("click", () => {
    editor.clear();
    redrawEditor();
  });

  const frame = () => {
    if (editor.forcesOn && editor.vertices.length > 1) {
      editor.stepForces();
      redrawEditor();
    }
    requestAnimationFrame(frame);
  };
  requestAnimationFrame(frame);

  $("load-g6-btn").addEventListener("click", () => {
    try {
      editor.loadGraph6(input("g6-input").value.trim(), CANVAS_W / 2, CANVAS_H / 2, 200);
      redrawEditor();
    } catch (err) {
      showError(err);
    }
  });
  input("file-input").addEventListener("change", async (ev) => {
    const file = (ev.target as HTMLInputElement).files?.[0];
    if (!file) return;
    try {
      const text = await file.text();
      const line = text.split(/\r?\n/).find((l) => l.trim().length > 0) ?? "";
      editor.loadGraph6(line, CANVAS_W / 2, CANVAS_H / 2, 200);
      redrawEditor();
    } catch (err) {
      showError(err);
    }
  });

  $("upload-btn").addEventListener("click", async () => {
    try {
      const name = input("upload-name").value.trim();
      const outcome = await client.upload({
        format: "graph6",
        data: editor.toGraph6(),
        ...(name ? { name } : {}),
      });
      // duplicates land on the existing graph's page, new uploads on theirs
      location.hash = graphPageHash(outcome);
    } catch (err) {
      showError(err);
    }
  });

  $("export-g6-btn").addEventListener("click", () => {
    try {
      downloadBlob(new Blob([editor.toGraph6() + "\n"], { type: "text/plain" }), "graph.g6");
    } catch (err) {
      showError(err);
    }
  });
  $("export-png-btn").addEventListener("click", async () => {
    try {
      const blob = await pngFromSvg(editorSvg(editor, CANVAS_W, CANVAS_H), CANVAS_W, CANVAS_H);
      downloadBlob(blob, "graph.png");
    } catch (err) {
      showError(err);
    }
  });
  $("export-pdf-btn").addEventListener("click", () => {
    pdfFromSvg(editorSvg(editor, CANVAS_W, CANVAS_H), "graph");
  });
}

// ---------------------------------------------------------- composer view

const composer = new QueryComposer();

function redrawCriteria(): void {
  const list = $("criteria-list");
  list.innerHTML = composer
    .list()
    .map(
      (c, i) =>
        `<li>${escapeHtml(describeCriterion(c))} <button class="remove-criterion" data-i="${i}">x</button></li>`,
    )
    .join("");
  for (const btn of Array.from(list.querySelectorAll("button.remove-criterion"))) {
    btn.addEventListener("click", () => {
      composer.removeAt(Number((btn as HTMLElement).dataset.i));
      redrawCriteria();
    });
  }
}

function currentCriterion(): Criterion {
  const kind = select("crit-type").value;
  const invariant = select("crit-invariant").value;
  const raw = input("crit-value").value.trim();
  switch (kind) {
    case "numeric":
      return {
        type: "numeric",
        invariant,
        op: select("crit-op").value as ComparisonOp,
        value: Number(raw),
      };
    case "range": {
      const [lo, hi] = raw.split(/\s*\.\.\s*/).map(Number);
      return { type: "range", invariant, lo, hi };
    }
    case "bool":
      return { type: "bool", invariant, value: raw === "true" };
    case "marked":
      return { type: "marked", invariant };
    case "text":
      return { type: "text", text: raw };
    case "id":
      return { type: "id", id: Number(raw) };
    default:
      return { type: "isomorphic", graph6: raw || editor.toGraph6() };
  }
}

async function runSearch(): Promise<void> {
  const columns = input("columns-input")
    .value.split(",")
    .map((s) => s.trim())
    .filter(Boolean);
  composer.setColumns(columns);
  const sortKey = select("sort-key").value;
  if (sortKey) composer.setSort(sortKey, select("sort-dir").value as "asc" | "desc");
  else composer.clearSort();
  try {
    const page = await client.search(composer.body());
    $("results-total").textContent = `${page.total} matching graph${page.total === 1 ? "" : "s"}`;
    $("results-box").innerHTML = resultsTableHtml(page, {
      columns,
      thumbnailUrl: (id, seq) => client.drawingUrl(id, seq),
    });
  } catch (err) {
    showError(err);
  }
}

function bindComposer(): void {
  $("add-criterion-btn").addEventListener("click", () => {
    try {
      composer.add(currentCriterion());
      redrawCriteria();
    } catch (err) {
      showError(err);
    }
  });
  $("run-search-btn").addEventListener("click", () => void runSearch());
  $("export-results-btn").addEventListener("click", async () => {
    try {
      const blob = await client.searchExport(composer.body(), "graph6");
      downloadBlob(blob, "results.g6");
    } catch (err) {
      showError(err);
    }
  });
  select("crit-type").addEventListener("change", () => {
    const kind = select("crit-type").value;
    $("crit-op").style.display = kind === "numeric" ? "" : "none";
    $("crit-invariant").style.display =
      kind === "text" || kind === "id" || kind === "isomorphic" ? "none" : "";
  });
}

function fillRegistrySelects(): void {
  const options = registry
    .map((inv) => `<option value="${escapeHtml(inv.id)}">${escapeHtml(inv.display_name)}</option>`)
    .join("");
  select("crit-invariant").innerHTML = options;
  select("sort-key").innerHTML = `<option value="">id</option>${options}`;
}

// ------------------------------------------------------------ detail view

let poller: StatusPoller | null = null;

function applyStatus(status: StatusResponse): void {
  for (const record of Object.values(status.invariants)) {
    const badge = document.querySelector(
      `#detail-view .badge[data-invariant="${record.invariant}"]`,
    );
    if (badge) badge.outerHTML = badgeHtml(record);
  }
  $("quiescent-note").textContent = status.quiescent
    ? "all invariants computed"
    : "computations in progress…";
}

function detailHtml(d: GraphDetail): string {
  const name = d.name ?? `graph ${d.id}`;
  const comments = d.comments
    .map((c) => `<li><b>${escapeHtml(c.author)}</b>: ${escapeHtml(c.text)}</li>`)
    .join("");
  const embeddings = d.embeddings
    .map((e) => `<button class="embedding-btn" data-seq="${e.seq}">drawing ${e.seq}</button>`)
    .join(" ");
  return `
    <h2>${escapeHtml(name)} <small>#${d.id}</small></h2>
    <p class="codes">graph6 <code>${escapeHtml(d.graph6)}</code>
       canonical <code>${escapeHtml(d.canonical_graph6)}</code>
       n=${d.n} m=${d.m}, uploaded by ${escapeHtml(d.uploader)}</p>
    <p id="quiescent-note"></p>
    <div class="detail-columns">
      <div>
        <h3>Invariants</h3>
        ${invariantTableHtml(d.invariants)}
      </div>
      <div>
        <h3>Drawing</h3>
        <div id="drawing-box">${embeddings || "<i>no stored embeddings</i>"}</div>
        <div id="drawing-svg"></div>
        <div id="drawing-exports" style="display:none">
          <button id="dl-svg-btn">svg</button>
          <button id="dl-tikz-btn">tikz</button>
          <button id="dl-png-btn">png</button>
          <button id="dl-pdf-btn">pdf</button>
        </div>
        <h3>Export</h3>
        <button class="export-btn" data-fmt="graph6">graph6</button>
        <button class="export-btn" data-fmt="multicode">multicode</button>
        <button class="export-btn" data-fmt="adj-matrix">adjacency matrix</button>
        <button class="export-btn" data-fmt="adj-list">adjacency list</button>
        <h3>Adjacency</h3>
        <pre>${escapeHtml(d.adjacency_list)}</pre>
        <h3>Comments</h3>
        <ul>${comments || "<i>none yet</i>"}</ul>
        <input id="comment-text" placeholder="add a comment"/>
        <button id="comment-btn">post</button>
      </div>
    </div>`;
}

async function showDetail(id: number): Promise<void> {
  poller?.stop();
  try {
    const d = await client.detail(id);
    $("detail-view").innerHTML = detailHtml(d);
    bindDetail(d);
    poller = new StatusPoller(() => client.status(id), applyStatus, { onError: showError });
    poller.start();
  } catch (err) {
    showError(err);
    $("detail-view").innerHTML = `<p>graph ${id} could not be loaded.</p>`;
  }
}

function bindDetail(d: GraphDetail): void {
  for (const btn of Array.from(document.querySelectorAll("#detail-view .export-btn"))) {
    btn.addEventListener("click", async () => {
      const fmt = (btn as HTMLElement).dataset.fmt!;
      try {
        const blob = await client.exportGraph(d.id, fmt);
        const ext = fmt === "multicode" ? "mc" : fmt === "graph6" ? "g6" : "txt";
        downloadBlob(blob, `graph-${d.id}.${ext}`);
      } catch (err) {
        showError(err);
      }
    });
  }
  for (const btn of Array.from(document.querySelectorAll("#detail-view .embedding-btn"))) {
    btn.addEventListener("click", async () => {
      const seq = Number((btn as HTMLElement).dataset.seq);
      try {
        const svg = await client.drawing(d.id, seq, "svg", true);
        $("drawing-svg").innerHTML = svg;
        $("drawing-exports").style.display = "";
        $("dl-svg-btn").onclick = () =>
          downloadBlob(new Blob([svg], { type: "image/svg+xml" }), `graph-${d.id}.svg`);
        $("dl-tikz-btn").onclick = async () => {
          const tikz = await client.drawing(d.id, seq, "tikz", true);
          downloadBlob(new Blob([tikz], { type: "text/plain" }), `graph-${d.id}.tikz`);
        };
        $("dl-png-btn").onclick = async () => {
          const png = await pngFromSvg(svg, 600, 600);
          downloadBlob(png, `graph-${d.id}.png`);
        };
        $("dl-pdf-btn").onclick = () => pdfFromSvg(svg, `graph ${d.id}`);
      } catch (err) {
        showError(err);
      }
    });
  }
  $("comment-btn").addEventListener("click", async () => {
    const text = input("comment-text").value.trim();
    if (!text) return;
    try {
      await client.addComment(d.id, text);
      await showDetail(d.id);
    } catch (err) {
      showError(err);
    }
  });
}

// --------------------------------------------------------------- routing

function route(): void {
  const hash = location.hash || "#/";
  const match = hash.match(/^#\/graphs\/(\d+)$/);
  if (match) {
    $("workbench-view").style.display = "none";
    $("detail-view").style.display = "";
    void showDetail(Number(match[1]));
  } else {
    poller?.stop();
    $("detail-view").style.display = "none";
    $("workbench-view").style.display = "";
  }
}

function bindSettings(): void {
  input("base-url").value = localStorage.getItem("gv.base") ?? "";
  input("api-key").value = localStorage.getItem("gv.key") ?? "";
  $("settings-save").addEventListener("click", () => {
    localStorage.setItem("gv.base", input("base-url").value.trim());
    localStorage.setItem("gv.key", input("api-key").value.trim());
    client = makeClient();
    void loadRegistry();
  });
}

async function loadRegistry(): Promise<void> {
  try {
    registry = await client.invariants();
    fillRegistrySelects();
  } catch (err) {
    showError(err);
  }
}

export function main(): void {
  bindSettings();
  bindEditor();
  bindComposer();
  redrawEditor();
  redrawCriteria();
  window.addEventListener("hashchange", route);
  route();
  void loadRegistry();
}

main();
