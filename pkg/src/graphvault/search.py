"""Query evaluation over stored graphs.

Queries are conjunctions of typed predicates with paging, a sort key, and a
display-column list, parsed from a flat JSON-style wire object. A graph only
matches a value predicate once the invariant is actually computed; pending,
computing, and timed-out records never match.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, Union

from . import codecs
from .canonical import canonical_key
from .errors import CodecError, MalformedQueryError, UnknownInvariantError
from .invariants import BOOLEAN, REAL, REGISTRY, parse_value
from .store import Store

REAL_EQ_TOLERANCE = 1e-9
MAX_LIMIT = 1000
DEFAULT_LIMIT = 100

_OPS = ("=", "!=", "<", "<=", ">", ">=")

TIMEOUT_DISPLAY = "computation timeout"


@dataclass(frozen=True)
class NumericCmp:
    invariant_id: str
    op: str
    value: float


@dataclass(frozen=True)
class NumericRange:
    invariant_id: str
    lo: float
    hi: float


@dataclass(frozen=True)
class BoolIs:
    invariant_id: str
    value: bool


@dataclass(frozen=True)
class MarkedInteresting:
    invariant_id: str


@dataclass(frozen=True)
class TextContains:
    text: str


@dataclass(frozen=True)
class IdEquals:
    graph_id: int


@dataclass(frozen=True)
class IsomorphicTo:
    graph6: str


Predicate = Union[NumericCmp, NumericRange, BoolIs, MarkedInteresting,
                  TextContains, IdEquals, IsomorphicTo]


@dataclass(frozen=True)
class Query:
    predicates: tuple[Predicate, ...] = ()
    sort_key: str = "id"
    sort_dir: str = "asc"
    offset: int = 0
    limit: int = DEFAULT_LIMIT
    columns: tuple[str, ...] = ()


@dataclass(frozen=True)
class ResultCell:
    invariant_id: str
    status: str
    value: Optional[str]

    @property
    def display(self) -> str:
        if self.status == "done":
            return self.value or ""
        if self.status == "timeout":
            return TIMEOUT_DISPLAY
        return self.status


@dataclass(frozen=True)
class ResultRow:
    graph_id: int
    name: Optional[str]
    thumbnail_seq: Optional[int]
    cells: tuple[ResultCell, ...] = ()


@dataclass(frozen=True)
class ResultPage:
    total: int
    rows: tuple[ResultRow, ...]


def _known_invariant(name) -> str:
    if not isinstance(name, str):
        raise MalformedQueryError(f"invariant name must be a string, got {name!r}")
    if name not in REGISTRY:
        raise UnknownInvariantError(name)
    return name


def _numeric_invariant(name) -> str:
    name = _known_invariant(name)
    if REGISTRY[name].kind == BOOLEAN:
        raise MalformedQueryError(f"invariant {name!r} is boolean, not numeric")
    return name


def _number(value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedQueryError(f"expected a number, got {value!r}")
    if isinstance(value, float) and not math.isfinite(value):
        raise MalformedQueryError(f"expected a finite number, got {value!r}")
    return float(value)


def parse_predicate(obj) -> Predicate:
    if not isinstance(obj, dict):
        raise MalformedQueryError(f"predicate must be an object, got {obj!r}")
    kind = obj.get("type")
    if kind == "numeric":
        op = obj.get("op")
        if op not in _OPS:
            raise MalformedQueryError(f"bad comparison operator {op!r}")
        return NumericCmp(_numeric_invariant(obj.get("invariant")), op,
                          _number(obj.get("value")))
    if kind == "range":
        lo = _number(obj.get("lo"))
        hi = _number(obj.get("hi"))
        if lo > hi:
            raise MalformedQueryError(f"empty range: lo {lo} > hi {hi}")
        return NumericRange(_numeric_invariant(obj.get("invariant")), lo, hi)
    if kind == "bool":
        name = _known_invariant(obj.get("invariant"))
        if REGISTRY[name].kind != BOOLEAN:
            raise MalformedQueryError(f"invariant {name!r} is not boolean")
        value = obj.get("value")
        if not isinstance(value, bool):
            raise MalformedQueryError(f"expected true or false, got {value!r}")
        return BoolIs(name, value)
    if kind == "marked":
        return MarkedInteresting(_known_invariant(obj.get("invariant")))
    if kind == "text":
        text = obj.get("text")
        if not isinstance(text, str) or not text:
            raise MalformedQueryError("text predicate needs a non-empty string")
        return TextContains(text)
    if kind == "id":
        gid = obj.get("id")
        if isinstance(gid, bool) or not isinstance(gid, int) or gid < 1:
            raise MalformedQueryError(f"bad graph id {gid!r}")
        return IdEquals(gid)
    if kind == "isomorphic":
        g6 = obj.get("graph6")
        if not isinstance(g6, str):
            raise MalformedQueryError("isomorphic predicate needs a graph6 string")
        try:
            codecs.graph6_decode(g6)
        except CodecError as exc:
            raise MalformedQueryError(f"bad graph6 {g6!r}: {exc}") from exc
        return IsomorphicTo(g6)
    raise MalformedQueryError(f"unknown predicate type {kind!r}")


def parse_query(obj) -> Query:
    """Parse the wire form: predicates, sort {key, dir}, page
    {offset, limit}, columns."""
    if not isinstance(obj, dict):
        raise MalformedQueryError("query must be an object")
    raw_preds = obj.get("predicates", [])
    if not isinstance(raw_preds, list):
        raise MalformedQueryError("predicates must be a list")
    predicates = tuple(parse_predicate(p) for p in raw_preds)

    sort = obj.get("sort", {})
    if not isinstance(sort, dict):
        raise MalformedQueryError("sort must be an object")
    sort_key = sort.get("key", "id")
    if sort_key != "id":
        sort_key = _numeric_invariant(sort_key)
    sort_dir = sort.get("dir", "asc")
    if sort_dir not in ("asc", "desc"):
        raise MalformedQueryError(f"bad sort direction {sort_dir!r}")

    page = obj.get("page", {})
    if not isinstance(page, dict):
        raise MalformedQueryError("page must be an object")
    offset = page.get("offset", 0)
    limit = page.get("limit", DEFAULT_LIMIT)
    if isinstance(offset, bool) or not isinstance(offset, int) or offset < 0:
        raise MalformedQueryError(f"bad page offset {offset!r}")
    if isinstance(limit, bool) or not isinstance(limit, int) or limit < 1:
        raise MalformedQueryError(f"bad page limit {limit!r}")
    if limit > MAX_LIMIT:
        raise MalformedQueryError(f"page limit {limit} exceeds maximum {MAX_LIMIT}")

    raw_cols = obj.get("columns", [])
    if not isinstance(raw_cols, list):
        raise MalformedQueryError("columns must be a list")
    columns = tuple(_known_invariant(c) for c in raw_cols)
    return Query(predicates, sort_key, sort_dir, offset, limit, columns)


def refine(q: Query, extra: Iterable[Predicate]) -> Query:
    extra = tuple(extra)
    for p in extra:
        if isinstance(p, NumericRange) and p.lo > p.hi:
            raise MalformedQueryError(f"empty range: lo {p.lo} > hi {p.hi}")
    return replace(q, predicates=q.predicates + extra)


def _typed_values(store: Store, invariant_id: str) -> dict[int, object]:
    kind = REGISTRY[invariant_id].kind
    return {gid: parse_value(kind, text)
            for gid, text in store.done_values(invariant_id).items()}


def _cmp_matches(op: str, got: float, want: float, real: bool) -> bool:
    if real:
        if op == "=":
            return abs(got - want) <= REAL_EQ_TOLERANCE
        if op == "!=":
            return abs(got - want) > REAL_EQ_TOLERANCE
    if op == "=":
        return got == want
    if op == "!=":
        return got != want
    if op == "<":
        return got < want
    if op == "<=":
        return got <= want
    if op == ">":
        return got > want
    return got >= want


def _predicate_ids(store: Store, p: Predicate) -> set[int]:
    if isinstance(p, NumericCmp):
        real = REGISTRY[p.invariant_id].kind == REAL
        vals = _typed_values(store, p.invariant_id)
        return {gid for gid, v in vals.items()
                if _cmp_matches(p.op, v, p.value, real)}
    if isinstance(p, NumericRange):
        vals = _typed_values(store, p.invariant_id)
        return {gid for gid, v in vals.items() if p.lo <= v <= p.hi}
    if isinstance(p, BoolIs):
        vals = _typed_values(store, p.invariant_id)
        return {gid for gid, v in vals.items() if v is p.value}
    if isinstance(p, MarkedInteresting):
        return store.marked_ids(p.invariant_id)
    if isinstance(p, TextContains):
        needle = p.text.lower()
        return {gid for gid, blob in store.text_blobs().items()
                if needle in blob.lower()}
    if isinstance(p, IdEquals):
        return {p.graph_id} if p.graph_id in set(store.all_ids()) else set()
    key = canonical_key(codecs.graph6_decode(p.graph6))
    found = store.find_by_canonical(key)
    return set() if found is None else {found}


def _match_ids(store: Store, q: Query) -> set[int]:
    sets = [_predicate_ids(store, p) for p in q.predicates]
    if not sets:
        return set(store.all_ids())
    sets.sort(key=len)
    out = sets[0]
    for s in sets[1:]:
        out = out & s
        if not out:
            break
    return out


def _sorted_ids(store: Store, q: Query, ids: set[int]) -> list[int]:
    if q.sort_key == "id":
        return sorted(ids, reverse=(q.sort_dir == "desc"))
    vals = _typed_values(store, q.sort_key)
    sign = -1 if q.sort_dir == "desc" else 1
    with_val = sorted((gid for gid in ids if gid in vals),
                      key=lambda gid: (sign * vals[gid], gid))
    without = sorted(gid for gid in ids if gid not in vals)
    return with_val + without


def evaluate(store: Store, q: Query) -> ResultPage:
    ordered = _sorted_ids(store, q, _match_ids(store, q))
    page_ids = ordered[q.offset:q.offset + q.limit]
    names = store.names()
    col_records = {col: store.statuses(col) for col in q.columns}
    col_values = {col: store.done_values(col) for col in q.columns}
    rows = []
    for gid in page_ids:
        detail_cells = tuple(
            ResultCell(col, col_records[col].get(gid, "pending"),
                       col_values[col].get(gid))
            for col in q.columns)
        rows.append(ResultRow(gid, names.get(gid),
                              store.first_embedding_seq(gid), detail_cells))
    return ResultPage(total=len(ordered), rows=tuple(rows))


def match_ids(store: Store, q: Query) -> list[int]:
    """Full ordered match list (no paging); used by exports."""
    return _sorted_ids(store, q, _match_ids(store, q))


def export_results(store: Store, q: Query, fmt: str) -> Iterator[bytes]:
    """Stream every match, one encoded graph after another, in result order."""
    fmt = codecs.normalize_format(fmt)
    for gid in match_ids(store, q):
        g = codecs.graph6_decode(store.graph6_of(gid))
        yield codecs.encode_payload(fmt, g)
