import { describe, expect, it } from "vitest";
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { Graph6Error, decodeGraph6, encodeGraph6 } from "../src/graph6.js";

interface Vector {
  n: number;
  edges: Array<[number, number]>;
  g6: string;
}

const here = dirname(fileURLToPath(import.meta.url));
const vectors: Vector[] = JSON.parse(
  readFileSync(join(here, "fixtures", "graph6-vectors.json"), "utf8"),
);

function sortedEdges(edges: Array<[number, number]>): Array<[number, number]> {
  return [...edges].sort((p, q) => p[0] - q[0] || p[1] - q[1]);
}

describe("encodeGraph6", () => {
  it("encodes K3 to exactly Bw", () => {
    expect(
      encodeGraph6(3, [
        [0, 1],
        [0, 2],
        [1, 2],
      ]),
    ).toBe("Bw");
  });

  it("matches the server byte for byte on the whole fixture corpus", () => {
    for (const v of vectors) {
      expect(encodeGraph6(v.n, v.edges)).toBe(v.g6);
    }
  });

  it("accepts edges in either orientation and ignores repeats", () => {
    expect(
      encodeGraph6(3, [
        [2, 0],
        [1, 0],
        [0, 1],
        [2, 1],
      ]),
    ).toBe(encodeGraph6(3, [
      [0, 1],
      [0, 2],
      [1, 2],
    ]));
  });

  it("rejects self loops, out of range endpoints, and oversized orders", () => {
    expect(() => encodeGraph6(3, [[1, 1]])).toThrow(Graph6Error);
    expect(() => encodeGraph6(3, [[0, 3]])).toThrow(Graph6Error);
    expect(() => encodeGraph6(0, [])).toThrow(Graph6Error);
    expect(() => encodeGraph6(1024, [])).toThrow(Graph6Error);
  });
});

describe("decodeGraph6", () => {
  it("inverts the encoder on the fixture corpus", () => {
    for (const v of vectors) {
      const g = decodeGraph6(v.g6);
      expect(g.n).toBe(v.n);
      expect(sortedEdges(g.edges)).toEqual(sortedEdges(v.edges));
    }
  });

  it("round trips seeded random graphs including the long order form", () => {
    let state = 88172645463325252n;
    const rand = () => {
      state ^= state << 13n;
      state ^= state >> 7n;
      state ^= state << 17n;
      state &= (1n << 64n) - 1n;
      return Number(state % 10000n) / 10000;
    };
    for (const n of [1, 2, 5, 17, 62, 63, 64, 100]) {
      const edges: Array<[number, number]> = [];
      for (let i = 0; i < n; i++) {
        for (let j = i + 1; j < n; j++) {
          if (rand() < 0.3) edges.push([i, j]);
        }
      }
      const enc = encodeGraph6(n, edges);
      const dec = decodeGraph6(enc);
      expect(dec.n).toBe(n);
      expect(sortedEdges(dec.edges)).toEqual(sortedEdges(edges));
      expect(encodeGraph6(dec.n, dec.edges)).toBe(enc);
    }
  });

  it("tolerates the format header and a trailing newline", () => {
    expect(decodeGraph6(">>graph6<<Bw").edges).toHaveLength(3);
    expect(decodeGraph6("Bw\n").edges).toHaveLength(3);
    expect(decodeGraph6("Bw\r\n").n).toBe(3);
  });

  it("reports the same error offsets as the server codec", () => {
    const cases: Array<[string, number]> = [
      ["Bv", 1],
      ["Bw!", 2],
      ["", 0],
      ["B", 1],
      ["~", 1],
      ["Bw\x01", 2],
      [">>graph6<<", 10],
    ];
    for (const [text, offset] of cases) {
      let caught: Graph6Error | null = null;
      try {
        decodeGraph6(text);
      } catch (err) {
        caught = err as Graph6Error;
      }
      expect(caught, `no error for ${JSON.stringify(text)}`).toBeInstanceOf(Graph6Error);
      expect(caught!.offset, `offset for ${JSON.stringify(text)}`).toBe(offset);
    }
  });

  it("rejects order zero and orders over the cap", () => {
    expect(() => decodeGraph6("?")).toThrow(/order 0/);
    expect(() => decodeGraph6("~?P???")).toThrow(/cap/);
  });
});
