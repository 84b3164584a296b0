/**
 * graph6 codec, byte-compatible with the server's encoder and decoder.
 *
 * The format is an order prefix (one character for n <= 62, a '~' escape
 * plus three characters up to 258047) followed by the upper triangle of
 * the adjacency matrix in column order, packed six bits per printable
 * character offset by 63. The triangle K3 encodes to exactly "Bw".
 */

export const GRAPH6_HEADER = ">>graph6<<";
export const MAX_ORDER = 1023;

export interface SimpleGraph {
  n: number;
  /** edge pairs with a < b, sorted */
  edges: Array<[number, number]>;
}

export class Graph6Error extends Error {
  offset: number;

  constructor(message: string, offset: number) {
    super(message);
    this.name = "Graph6Error";
    this.offset = offset;
  }
}

function normalizeEdges(n: number, edges: Iterable<[number, number]>): Array<[number, number]> {
  const seen = new Set<number>();
  const out: Array<[number, number]> = [];
  for (const [x, y] of edges) {
    if (!Number.isInteger(x) || !Number.isInteger(y) || x < 0 || y < 0 || x >= n || y >= n) {
      throw new Graph6Error(`edge (${x}, ${y}) out of range for order ${n}`, 0);
    }
    if (x === y) {
      throw new Graph6Error(`self loop at vertex ${x}`, 0);
    }
    const a = Math.min(x, y);
    const b = Math.max(x, y);
    const key = a * n + b;
    if (seen.has(key)) continue;
    seen.add(key);
    out.push([a, b]);
  }
  out.sort((p, q) => (p[0] - q[0]) || (p[1] - q[1]));
  return out;
}

export function encodeGraph6(n: number, edges: Iterable<[number, number]>): string {
  if (!Number.isInteger(n) || n < 1) {
    throw new Graph6Error(`graph order must be a positive integer, got ${n}`, 0);
  }
  if (n > MAX_ORDER) {
    throw new Graph6Error(`order ${n} exceeds the cap of ${MAX_ORDER}`, 0);
  }
  const adj = new Set<number>();
  for (const [a, b] of normalizeEdges(n, edges)) {
    adj.add(a * n + b);
  }
  const bytes: number[] = [];
  if (n <= 62) {
    bytes.push(n + 63);
  } else {
    bytes.push(126);
    bytes.push(((n >> 12) & 63) + 63);
    bytes.push(((n >> 6) & 63) + 63);
    bytes.push((n & 63) + 63);
  }
  let group = 0;
  let filled = 0;
  for (let v = 1; v < n; v++) {
    for (let u = 0; u < v; u++) {
      group = (group << 1) | (adj.has(u * n + v) ? 1 : 0);
      filled += 1;
      if (filled === 6) {
        bytes.push(group + 63);
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled) {
    bytes.push((group << (6 - filled)) + 63);
  }
  return String.fromCharCode(...bytes);
}

/**
 * Decode one graph6 line. Tolerates the optional ">>graph6<<" header and a
 * trailing newline; every failure carries the byte offset of the bad spot.
 */
export function decodeGraph6(s: string, maxOrder: number = MAX_ORDER): SimpleGraph {
  let end = s.length;
  while (end > 0 && (s[end - 1] === "\n" || s[end - 1] === "\r")) end -= 1;
  let pos = 0;
  if (s.startsWith(GRAPH6_HEADER)) pos = GRAPH6_HEADER.length;
  if (pos >= end) {
    throw new Graph6Error("empty graph6 input", pos);
  }

  const take = (why: string): number => {
    if (pos >= end) {
      throw new Graph6Error(`input ended inside ${why}`, pos);
    }
    const b = s.charCodeAt(pos);
    if (b < 63 || b > 126) {
      throw new Graph6Error(`byte ${b} is outside the graph6 alphabet`, pos);
    }
    pos += 1;
    return b - 63;
  };

  const first = take("order prefix");
  let n: number;
  if (first !== 63) {
    n = first;
  } else {
    const second = take("order prefix");
    if (second === 63) {
      n = 0;
      for (let i = 0; i < 6; i++) {
        n = n * 64 + take("order prefix");
      }
    } else {
      n = (second << 12) | (take("order prefix") << 6) | take("order prefix");
    }
  }
  if (n === 0) {
    throw new Graph6Error("graph6 order 0 is not a valid graph", 0);
  }
  if (n > maxOrder) {
    throw new Graph6Error(`order ${n} exceeds the cap of ${maxOrder}`, 0);
  }

  const nbits = (n * (n - 1)) / 2;
  const nchars = Math.ceil(nbits / 6);
  if (end - pos < nchars) {
    throw new Graph6Error(`need ${nchars} adjacency characters, got ${end - pos}`, pos);
  }
  const edges: Array<[number, number]> = [];
  let bit = 0;
  let u = 0;
  let v = 1;
  for (let c = 0; c < nchars; c++) {
    const group = take("adjacency bits");
    for (let k = 5; k >= 0; k--) {
      if (bit === nbits) {
        if ((group & ((1 << (k + 1)) - 1)) !== 0) {
          throw new Graph6Error("padding bits are not zero", pos - 1);
        }
        break;
      }
      if ((group >> k) & 1) edges.push([u, v]);
      bit += 1;
      u += 1;
      if (u === v) {
        u = 0;
        v += 1;
      }
    }
  }
  if (pos !== end) {
    throw new Graph6Error("unexpected data after graph6 payload", pos);
  }
  return { n, edges };
}
