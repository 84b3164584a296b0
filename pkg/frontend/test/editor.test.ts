import { describe, expect, it } from "vitest";

import { EditorState } from "../src/editor.js";

function clickVertex(ed: EditorState, id: number): void {
  const v = ed.vertexById(id)!;
  const s = ed.toScreen(v);
  ed.clickAt(s.x, s.y);
}

/** three vertex clicks plus three edge gestures, all through clickAt */
function buildTriangle(ed: EditorState): void {
  ed.clickAt(100, 100);
  ed.clickAt(300, 100);
  ed.clickAt(200, 260);
  clickVertex(ed, 0);
  clickVertex(ed, 1);
  clickVertex(ed, 1);
  clickVertex(ed, 2);
  clickVertex(ed, 2);
  clickVertex(ed, 0);
}

describe("editor gestures", () => {
  it("builds K3 by clicking and exports graph6 Bw", () => {
    const ed = new EditorState();
    buildTriangle(ed);
    expect(ed.vertices).toHaveLength(3);
    expect(ed.edges).toHaveLength(3);
    expect(ed.toGraph6()).toBe("Bw");
  });

  it("leaves the graph unchanged when the pair is already adjacent", () => {
    const ed = new EditorState();
    buildTriangle(ed);
    clickVertex(ed, 0);
    clickVertex(ed, 1);
    expect(ed.edges).toHaveLength(3);
    expect(ed.toGraph6()).toBe("Bw");
  });

  it("cannot create a self loop by double-clicking a vertex", () => {
    const ed = new EditorState();
    ed.clickAt(100, 100);
    clickVertex(ed, 0);
    expect(ed.selected).toBe(0);
    clickVertex(ed, 0);
    expect(ed.selected).toBeNull();
    expect(ed.edges).toHaveLength(0);
  });

  it("clicking empty canvas clears the pending selection", () => {
    const ed = new EditorState();
    ed.clickAt(100, 100);
    clickVertex(ed, 0);
    ed.clickAt(400, 400);
    expect(ed.selected).toBeNull();
    expect(ed.vertices).toHaveLength(2);
    expect(ed.edges).toHaveLength(0);
  });

  it("stores new vertices in graph space, not screen space", () => {
    const ed = new EditorState();
    ed.zoomAt(100, 100, 2);
    ed.panBy(30, -12);
    ed.clickAt(250, 180);
    const v = ed.vertices[0];
    const expected = ed.toGraph({ x: 250, y: 180 });
    expect(v.x).toBeCloseTo(expected.x, 9);
    expect(v.y).toBeCloseTo(expected.y, 9);
    const back = ed.toScreen(v);
    expect(back.x).toBeCloseTo(250, 9);
    expect(back.y).toBeCloseTo(180, 9);
  });

  it("keeps the view transform invertible through zoom and pan", () => {
    const ed = new EditorState();
    ed.zoomAt(320, 260, 1.4);
    ed.panBy(-80, 25);
    ed.zoomAt(10, 500, 0.3);
    ed.zoomAt(600, 20, 5);
    for (const p of [{ x: 0, y: 0 }, { x: 320, y: 260 }, { x: -50, y: 700 }]) {
      const q = ed.toGraph(ed.toScreen(p));
      expect(q.x).toBeCloseTo(p.x, 6);
      expect(q.y).toBeCloseTo(p.y, 6);
    }
  });

  it("keeps the zoom anchor point fixed on screen", () => {
    const ed = new EditorState();
    ed.clickAt(200, 150);
    const before = ed.toScreen(ed.vertices[0]);
    ed.zoomAt(before.x, before.y, 2.5);
    const after = ed.toScreen(ed.vertices[0]);
    expect(after.x).toBeCloseTo(before.x, 9);
    expect(after.y).toBeCloseTo(before.y, 9);
  });

  it("drags a vertex to the graph point under the cursor", () => {
    const ed = new EditorState();
    ed.clickAt(100, 100);
    ed.zoomAt(0, 0, 2);
    ed.dragVertexTo(0, 400, 300);
    const s = ed.toScreen(ed.vertices[0]);
    expect(s.x).toBeCloseTo(400, 9);
    expect(s.y).toBeCloseTo(300, 9);
  });

  it("deletes the selected vertex together with its edges", () => {
    const ed = new EditorState();
    buildTriangle(ed);
    clickVertex(ed, 1);
    expect(ed.deleteSelected()).toBe(true);
    expect(ed.vertices.map((v) => v.id)).toEqual([0, 2]);
    expect(ed.edges).toEqual([[0, 2]]);
    expect(ed.toGraph6()).toBe("A_");
  });

  it("removes a single edge on request", () => {
    const ed = new EditorState();
    buildTriangle(ed);
    expect(ed.removeEdge(0, 1)).toBe(true);
    expect(ed.removeEdge(0, 1)).toBe(false);
    expect(ed.edges).toHaveLength(2);
  });
});

describe("editor import and forces", () => {
  it("loads a graph6 string and exports it back unchanged", () => {
    const ed = new EditorState();
    ed.loadGraph6("IheA@GUAo");
    expect(ed.vertices).toHaveLength(10);
    expect(ed.edges).toHaveLength(15);
    expect(ed.toGraph6()).toBe("IheA@GUAo");
  });

  it("never produces self loops or parallel edges under gesture fuzzing", () => {
    const ed = new EditorState();
    let seed = 0x2545f491;
    const rand = () => {
      seed = (seed * 1103515245 + 12345) & 0x7fffffff;
      return seed / 0x7fffffff;
    };
    for (let step = 0; step < 2500; step++) {
      const r = rand();
      if (r < 0.55) {
        ed.clickAt(rand() * 640, rand() * 520);
      } else if (r < 0.7 && ed.vertices.length) {
        const v = ed.vertices[Math.floor(rand() * ed.vertices.length)];
        ed.dragVertexTo(v.id, rand() * 640, rand() * 520);
      } else if (r < 0.8) {
        ed.zoomAt(rand() * 640, rand() * 520, 0.5 + rand() * 1.5);
      } else if (r < 0.9) {
        ed.panBy(rand() * 60 - 30, rand() * 60 - 30);
      } else {
        ed.deleteSelected();
      }
      const ids = new Set(ed.vertices.map((v) => v.id));
      const seen = new Set<string>();
      for (const [a, b] of ed.edges) {
        expect(a).not.toBe(b);
        expect(ids.has(a) && ids.has(b)).toBe(true);
        const key = `${Math.min(a, b)}:${Math.max(a, b)}`;
        expect(seen.has(key)).toBe(false);
        seen.add(key);
      }
    }
    expect(ed.vertices.length).toBeGreaterThan(0);
  });

  it("force steps are deterministic and ignore the off switch", () => {
    const run = (on: boolean) => {
      const ed = new EditorState();
      ed.loadGraph6("Dhc");
      ed.forcesOn = on;
      for (let i = 0; i < 40; i++) ed.stepForces();
      return ed.vertices.map((v) => [v.x, v.y]);
    };
    expect(run(true)).toEqual(run(true));
    const still = new EditorState();
    still.loadGraph6("Dhc");
    expect(run(false)).toEqual(still.vertices.map((v) => [v.x, v.y]));
  });

  it("forces pull an edge toward its rest length and split coincident vertices", () => {
    const ed = new EditorState();
    const a = ed.addVertex(0, 0);
    const b = ed.addVertex(500, 0);
    ed.addEdge(a, b);
    ed.forcesOn = true;
    for (let i = 0; i < 600; i++) ed.stepForces();
    const d = Math.hypot(
      ed.vertices[0].x - ed.vertices[1].x,
      ed.vertices[0].y - ed.vertices[1].y,
    );
    expect(d).toBeGreaterThan(120);
    expect(d).toBeLessThan(185);

    const pile = new EditorState();
    pile.addVertex(50, 50);
    pile.addVertex(50, 50);
    pile.forcesOn = true;
    pile.stepForces();
    const [p, q] = pile.vertices;
    expect(Math.hypot(p.x - q.x, p.y - q.y)).toBeGreaterThan(0);
  });
});
