/**
 * Editor model for the interactive graph canvas.
 *
 * All mutation goes through gestures: a click on empty canvas adds a
 * vertex, two consecutive clicks on distinct vertices add an edge, a drag
 * moves a vertex, wheel zooms, background drag pans. The model mirrors a
 * simple graph at all times; no gesture sequence can create a self loop
 * or a parallel edge. Vertex positions live in graph space and the view
 * transform (invertible by construction) maps them to the screen.
 */

import { decodeGraph6, encodeGraph6 } from "./graph6.js";

export interface Point {
  x: number;
  y: number;
}

export interface Vertex extends Point {
  id: number;
}

export interface ViewTransform {
  scale: number;
  tx: number;
  ty: number;
}

const MIN_SCALE = 0.05;
const MAX_SCALE = 40;
const FORCE_IDEAL = 120;
const FORCE_MAX_STEP = 18;

function edgeKey(a: number, b: number): string {
  return a < b ? `${a}:${b}` : `${b}:${a}`;
}

export class EditorState {
  vertices: Vertex[] = [];
  /** edges as id pairs, lower id first */
  edges: Array<[number, number]> = [];
  selected: number | null = null;
  view: ViewTransform = { scale: 1, tx: 0, ty: 0 };
  forcesOn = false;
  showLabels = false;

  private nextId = 0;
  private edgeSet = new Set<string>();

  toScreen(p: Point): Point {
    return { x: p.x * this.view.scale + this.view.tx, y: p.y * this.view.scale + this.view.ty };
  }

  toGraph(p: Point): Point {
    return { x: (p.x - this.view.tx) / this.view.scale, y: (p.y - this.view.ty) / this.view.scale };
  }

  vertexById(id: number): Vertex | undefined {
    return this.vertices.find((v) => v.id === id);
  }

  /** vertex under a screen point, hit radius in screen pixels */
  hitTest(sx: number, sy: number, radius = 12): Vertex | null {
    for (let i = this.vertices.length - 1; i >= 0; i--) {
      const v = this.vertices[i];
      const s = this.toScreen(v);
      const dx = s.x - sx;
      const dy = s.y - sy;
      if (dx * dx + dy * dy <= radius * radius) return v;
    }
    return null;
  }

  addVertex(x: number, y: number): number {
    const id = this.nextId++;
    this.vertices.push({ id, x, y });
    return id;
  }

  /** true when the edge was new; same pair or a self pair changes nothing */
  addEdge(a: number, b: number): boolean {
    if (a === b) return false;
    if (!this.vertexById(a) || !this.vertexById(b)) return false;
    const key = edgeKey(a, b);
    if (this.edgeSet.has(key)) return false;
    this.edgeSet.add(key);
    this.edges.push(a < b ? [a, b] : [b, a]);
    return true;
  }

  removeEdge(a: number, b: number): boolean {
    const key = edgeKey(a, b);
    if (!this.edgeSet.delete(key)) return false;
    this.edges = this.edges.filter(([p, q]) => edgeKey(p, q) !== key);
    return true;
  }

  removeVertex(id: number): boolean {
    const idx = this.vertices.findIndex((v) => v.id === id);
    if (idx < 0) return false;
    this.vertices.splice(idx, 1);
    this.edges = this.edges.filter(([a, b]) => {
      if (a !== id && b !== id) return true;
      this.edgeSet.delete(edgeKey(a, b));
      return false;
    });
    if (this.selected === id) this.selected = null;
    return true;
  }

  /**
   * Primary click gesture in screen coordinates. On empty canvas this adds
   * a vertex at the cursor (stored in graph space, so zoom level does not
   * change where it lands) and drops any pending selection. On a vertex it
   * either starts an edge, cancels when the same vertex is clicked twice,
   * or completes the edge on the second distinct vertex.
   */
  clickAt(sx: number, sy: number): void {
    const hit = this.hitTest(sx, sy);
    if (hit === null) {
      this.selected = null;
      const p = this.toGraph({ x: sx, y: sy });
      this.addVertex(p.x, p.y);
      return;
    }
    if (this.selected === null) {
      this.selected = hit.id;
    } else if (this.selected === hit.id) {
      this.selected = null;
    } else {
      this.addEdge(this.selected, hit.id);
      this.selected = null;
    }
  }

  dragVertexTo(id: number, sx: number, sy: number): void {
    const v = this.vertexById(id);
    if (!v) return;
    const p = this.toGraph({ x: sx, y: sy });
    v.x = p.x;
    v.y = p.y;
  }

  panBy(dx: number, dy: number): void {
    this.view.tx += dx;
    this.view.ty += dy;
  }

  /** zoom by a factor keeping the screen point (sx, sy) fixed */
  zoomAt(sx: number, sy: number, factor: number): void {
    const next = Math.min(MAX_SCALE, Math.max(MIN_SCALE, this.view.scale * factor));
    const applied = next / this.view.scale;
    this.view.tx = sx - (sx - this.view.tx) * applied;
    this.view.ty = sy - (sy - this.view.ty) * applied;
    this.view.scale = next;
  }

  deleteSelected(): boolean {
    if (this.selected === null) return false;
    return this.removeVertex(this.selected);
  }

  clear(): void {
    this.vertices = [];
    this.edges = [];
    this.edgeSet.clear();
    this.selected = null;
    this.nextId = 0;
  }

  /** edge list over dense 0..n-1 indices in vertex insertion order */
  indexEdges(): Array<[number, number]> {
    const index = new Map<number, number>();
    this.vertices.forEach((v, i) => index.set(v.id, i));
    const out = this.edges.map(([a, b]) => {
      const i = index.get(a)!;
      const j = index.get(b)!;
      return (i < j ? [i, j] : [j, i]) as [number, number];
    });
    out.sort((p, q) => (p[0] - q[0]) || (p[1] - q[1]));
    return out;
  }

  toGraph6(): string {
    return encodeGraph6(this.vertices.length, this.indexEdges());
  }

  /** replace the whole graph, laying new vertices on a circle */
  loadGraph6(text: string, cx = 300, cy = 300, radius = 220): void {
    const g = decodeGraph6(text);
    this.clear();
    for (let i = 0; i < g.n; i++) {
      const angle = (2 * Math.PI * i) / g.n - Math.PI / 2;
      this.addVertex(cx + radius * Math.cos(angle), cy + radius * Math.sin(angle));
    }
    for (const [a, b] of g.edges) {
      this.addEdge(this.vertices[a].id, this.vertices[b].id);
    }
  }

  /**
   * One frame of the interactive spring simulation: pairwise repulsion,
   * attraction along edges, displacement capped per frame. Coincident
   * vertices are nudged apart along a direction derived from their ids so
   * the step stays deterministic.
   */
  stepForces(strength = 1): void {
    if (!this.forcesOn || this.vertices.length < 2) return;
    const k = FORCE_IDEAL;
    const disp = new Map<number, Point>();
    for (const v of this.vertices) disp.set(v.id, { x: 0, y: 0 });

    for (let i = 0; i < this.vertices.length; i++) {
      for (let j = i + 1; j < this.vertices.length; j++) {
        const a = this.vertices[i];
        const b = this.vertices[j];
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let d = Math.hypot(dx, dy);
        if (d < 1e-9) {
          const angle = ((a.id * 31 + b.id * 17) % 360) * (Math.PI / 180);
          dx = Math.cos(angle) * 1e-6;
          dy = Math.sin(angle) * 1e-6;
          d = 1e-6;
        }
        const push = (k * k) / d / d;
        const da = disp.get(a.id)!;
        const db = disp.get(b.id)!;
        da.x += dx * push;
        da.y += dy * push;
        db.x -= dx * push;
        db.y -= dy * push;
      }
    }
    for (const [ia, ib] of this.edges) {
      const a = this.vertexById(ia)!;
      const b = this.vertexById(ib)!;
      let dx = a.x - b.x;
      let dy = a.y - b.y;
      const d = Math.max(Math.hypot(dx, dy), 1e-6);
      const pull = d / k;
      dx = (dx / d) * pull * d * 0.5;
      dy = (dy / d) * pull * d * 0.5;
      const da = disp.get(ia)!;
      const db = disp.get(ib)!;
      da.x -= dx;
      da.y -= dy;
      db.x += dx;
      db.y += dy;
    }
    for (const v of this.vertices) {
      const d = disp.get(v.id)!;
      const len = Math.hypot(d.x, d.y);
      if (len < 1e-12) continue;
      const step = Math.min(len * strength * 0.05, FORCE_MAX_STEP);
      v.x += (d.x / len) * step;
      v.y += (d.y / len) * step;
    }
  }
}
