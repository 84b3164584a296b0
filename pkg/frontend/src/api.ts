/**
 * Thin client for the GraphVault HTTP API. Every method maps to one
 * documented route; the fetch implementation is injectable so tests can
 * run without a network. Errors arrive as the server's JSON envelope and
 * are rethrown as ApiError with the same code, message, and detail.
 */

export interface InvariantInfo {
  id: string;
  kind: "boolean" | "integer" | "real";
  display_name: string;
  definition: string;
}

export interface InvariantRecord {
  invariant: string;
  status: "pending" | "computing" | "done" | "timeout";
  value: string | null;
  display: string;
}

export interface CommentInfo {
  author: string;
  created_at: string;
  text: string;
}

export interface EmbeddingInfo {
  seq: number;
  coords: Array<[number, number]>;
  author: string;
  created_at: string;
}

export interface MarkInfo {
  invariant: string;
  author: string;
}

export interface GraphDetail {
  id: number;
  graph6: string;
  canonical_graph6: string;
  n: number;
  m: number;
  name: string | null;
  uploader: string;
  uploaded_at: string;
  adjacency_matrix: string;
  adjacency_list: string;
  invariants: InvariantRecord[];
  comments: CommentInfo[];
  embeddings: EmbeddingInfo[];
  marks: MarkInfo[];
}

export interface StatusResponse {
  id: number;
  invariants: Record<string, InvariantRecord>;
  quiescent: boolean;
}

export interface ResultRow {
  id: number;
  name: string | null;
  thumbnail: number | null;
  cells: InvariantRecord[];
}

export interface ResultPage {
  total: number;
  rows: ResultRow[];
}

export interface ClassInfo {
  slug: string;
  description: string;
  count: number;
}

export interface UploadRequest {
  format?: string;
  data?: string;
  data_base64?: string;
  name?: string;
  comments?: string[];
  marks?: string[];
}

export interface UploadOutcome {
  id: number;
  created: boolean;
  location: string;
}

/**
 * Where the browser should land after an upload: the graph's page, which
 * for a duplicate is the already-existing graph's page.
 */
export function graphPageHash(outcome: UploadOutcome): string {
  return `#/graphs/${outcome.id}`;
}

export class ApiError extends Error {
  status: number;
  code: string;
  detail: unknown;

  constructor(status: number, code: string, message: string, detail: unknown = null) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
    this.detail = detail;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function raiseEnvelope(res: Response): Promise<never> {
  let code = "http_error";
  let message = `${res.status} ${res.statusText}`;
  let detail: unknown = null;
  try {
    const body = await res.json();
    if (body && typeof body.code === "string") {
      code = body.code;
      message = body.message ?? message;
      detail = body.detail ?? null;
    }
  } catch {
    // non-JSON error body, keep the status line
  }
  throw new ApiError(res.status, code, message, detail);
}

export class GraphVaultClient {
  readonly baseUrl: string;
  apiKey: string | null;
  private fetchFn: FetchLike;

  constructor(baseUrl = "", opts: { apiKey?: string | null; fetchFn?: FetchLike } = {}) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.apiKey = opts.apiKey ?? null;
    const impl = opts.fetchFn ?? (globalThis.fetch as FetchLike);
    this.fetchFn = (url, init) => impl(url, init);
  }

  private headers(json: boolean): Record<string, string> {
    const h: Record<string, string> = {};
    if (json) h["Content-Type"] = "application/json";
    if (this.apiKey) h["X-Api-Key"] = this.apiKey;
    return h;
  }

  private async get(path: string): Promise<Response> {
    const res = await this.fetchFn(this.baseUrl + path, { headers: this.headers(false) });
    if (!res.ok) await raiseEnvelope(res);
    return res;
  }

  /** posts a prebuilt body string verbatim, preserving its bytes */
  private async post(path: string, body: string): Promise<Response> {
    const res = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: this.headers(true),
      body,
    });
    if (!res.ok && res.status !== 303) await raiseEnvelope(res);
    return res;
  }

  async invariants(): Promise<InvariantInfo[]> {
    const res = await this.get("/invariants");
    const body = await res.json();
    return body.invariants as InvariantInfo[];
  }

  /**
   * Upload a graph. A fresh graph answers 201 with its id; an isomorphic
   * duplicate answers 303 pointing at the existing page, which fetch may
   * have followed already, so both the redirected response and a bare 303
   * are folded into the same outcome with created = false.
   */
  async upload(req: UploadRequest): Promise<UploadOutcome> {
    const res = await this.post("/graphs", JSON.stringify(req));
    if (res.status === 201) {
      const body = await res.json();
      return { id: body.id, created: true, location: body.location };
    }
    if (res.status === 303) {
      const location = res.headers.get("Location") ?? "";
      const id = parseInt(location.split("/").pop() ?? "", 10);
      return { id, created: false, location };
    }
    if (res.ok && res.redirected) {
      const body = await res.json();
      return { id: body.id, created: false, location: `/graphs/${body.id}` };
    }
    await raiseEnvelope(res);
    throw new Error("unreachable");
  }

  async detail(id: number): Promise<GraphDetail> {
    const res = await this.get(`/graphs/${id}`);
    return (await res.json()) as GraphDetail;
  }

  async status(id: number): Promise<StatusResponse> {
    const res = await this.get(`/graphs/${id}/status`);
    return (await res.json()) as StatusResponse;
  }

  /** body must already be wire-form JSON (see QueryComposer.body) */
  async search(body: string): Promise<ResultPage> {
    const res = await this.post("/search", body);
    return (await res.json()) as ResultPage;
  }

  async searchExport(body: string, format: string): Promise<Blob> {
    const res = await this.post(`/search/export?format=${encodeURIComponent(format)}`, body);
    return await res.blob();
  }

  async exportGraph(id: number, format: string): Promise<Blob> {
    const res = await this.get(`/graphs/${id}/export?format=${encodeURIComponent(format)}`);
    return await res.blob();
  }

  async drawing(id: number, seq: number, kind: "svg" | "tikz", labels = false): Promise<string> {
    const query = labels ? "?labels=true" : "";
    const res = await this.get(`/graphs/${id}/drawings/${seq}.${kind}${query}`);
    return await res.text();
  }

  drawingUrl(id: number, seq: number): string {
    return `${this.baseUrl}/graphs/${id}/drawings/${seq}.svg`;
  }

  async addComment(id: number, text: string): Promise<void> {
    await this.post(`/graphs/${id}/comments`, JSON.stringify({ text }));
  }

  async addEmbedding(id: number, coords: Array<[number, number]>): Promise<number> {
    const res = await this.post(`/graphs/${id}/embeddings`, JSON.stringify({ coords }));
    const body = await res.json();
    return body.seq as number;
  }

  async addMark(id: number, invariant: string): Promise<void> {
    await this.post(`/graphs/${id}/marks`, JSON.stringify({ invariant }));
  }

  async classes(): Promise<ClassInfo[]> {
    const res = await this.get("/classes");
    const body = await res.json();
    return body.classes as ClassInfo[];
  }

  async classMembers(slug: string, order?: number): Promise<string> {
    const query = order === undefined ? "" : `?order=${order}`;
    const res = await this.get(`/classes/${encodeURIComponent(slug)}${query}`);
    return await res.text();
  }
}
