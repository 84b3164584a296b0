/**
 * Search query composer. Criteria are added and removed one at a time and
 * the composer serializes the full set into the API's query wire form,
 * with object keys in the documented order so the body it produces is
 * byte-identical to the reference examples.
 */

export type ComparisonOp = "=" | "!=" | "<" | "<=" | ">" | ">=";

export type Criterion =
  | { type: "numeric"; invariant: string; op: ComparisonOp; value: number }
  | { type: "range"; invariant: string; lo: number; hi: number }
  | { type: "bool"; invariant: string; value: boolean }
  | { type: "marked"; invariant: string }
  | { type: "text"; text: string }
  | { type: "id"; id: number }
  | { type: "isomorphic"; graph6: string };

export interface SortSpec {
  key: string;
  dir: "asc" | "desc";
}

export interface PageSpec {
  offset: number;
  limit: number;
}

export interface WireQuery {
  predicates?: unknown[];
  sort?: SortSpec;
  page?: PageSpec;
  columns?: string[];
}

/** rebuild a predicate object with keys in the documented order */
function wirePredicate(c: Criterion): Record<string, unknown> {
  switch (c.type) {
    case "numeric":
      return { type: "numeric", invariant: c.invariant, op: c.op, value: c.value };
    case "range":
      return { type: "range", invariant: c.invariant, lo: c.lo, hi: c.hi };
    case "bool":
      return { type: "bool", invariant: c.invariant, value: c.value };
    case "marked":
      return { type: "marked", invariant: c.invariant };
    case "text":
      return { type: "text", text: c.text };
    case "id":
      return { type: "id", id: c.id };
    case "isomorphic":
      return { type: "isomorphic", graph6: c.graph6 };
  }
}

export class QueryComposer {
  private criteria: Criterion[] = [];
  private sort: SortSpec | null = null;
  private page: PageSpec | null = null;
  private columns: string[] | null = null;

  add(criterion: Criterion): this {
    this.criteria.push(criterion);
    return this;
  }

  removeAt(index: number): this {
    if (index >= 0 && index < this.criteria.length) {
      this.criteria.splice(index, 1);
    }
    return this;
  }

  clearCriteria(): this {
    this.criteria = [];
    return this;
  }

  list(): readonly Criterion[] {
    return this.criteria;
  }

  setSort(key: string, dir: "asc" | "desc" = "asc"): this {
    this.sort = { key, dir };
    return this;
  }

  clearSort(): this {
    this.sort = null;
    return this;
  }

  setPage(offset: number, limit: number): this {
    this.page = { offset, limit };
    return this;
  }

  clearPage(): this {
    this.page = null;
    return this;
  }

  setColumns(columns: string[]): this {
    this.columns = columns.length ? [...columns] : null;
    return this;
  }

  /** wire object; only composed parts appear, defaults stay implicit */
  build(): WireQuery {
    const out: WireQuery = {};
    if (this.criteria.length) out.predicates = this.criteria.map(wirePredicate);
    if (this.sort) out.sort = { key: this.sort.key, dir: this.sort.dir };
    if (this.page) out.page = { offset: this.page.offset, limit: this.page.limit };
    if (this.columns) out.columns = [...this.columns];
    return out;
  }

  /** exact request body for POST /search */
  body(): string {
    return JSON.stringify(this.build());
  }
}

/** human label for a criterion row in the composer UI */
export function describeCriterion(c: Criterion): string {
  switch (c.type) {
    case "numeric":
      return `${c.invariant} ${c.op} ${c.value}`;
    case "range":
      return `${c.lo} ≤ ${c.invariant} ≤ ${c.hi}`;
    case "bool":
      return `${c.invariant} is ${c.value}`;
    case "marked":
      return `marked interesting for ${c.invariant}`;
    case "text":
      return `text contains "${c.text}"`;
    case "id":
      return `id = ${c.id}`;
    case "isomorphic":
      return `isomorphic to ${c.graph6}`;
  }
}
