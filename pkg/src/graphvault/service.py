"""HTTP face of the database: upload, detail, search, export, comments,
embeddings, marks, class lists, invariant registry, and job statuses.

All handlers parse their own JSON and answer errors in one envelope shape
{code, message, detail}. Authentication is a static API-key header; callers
without a key get read-only access.
"""

from __future__ import annotations

import base64
import binascii
import json
import time
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import (
    JSONResponse,
    PlainTextResponse,
    RedirectResponse,
    StreamingResponse,
)

from . import codecs, layout, search
from .config import Config
from .errors import (
    CodecError,
    CoordinateCountError,
    GraphError,
    GraphVaultError,
    MalformedQueryError,
    NotFoundError,
    StoreError,
    UnauthenticatedError,
    UnknownFormatError,
    UnknownInvariantError,
)
from .invariants import list_invariants
from .store import Store

ANONYMOUS = "anonymous"


class _Forbidden(GraphVaultError):
    pass


class _BadRequest(GraphVaultError):
    pass


_STATUS_BY_TYPE = (
    (UnauthenticatedError, 401, "unauthenticated"),
    (_Forbidden, 403, "forbidden"),
    (NotFoundError, 404, "not_found"),
    (UnknownFormatError, 415, "unknown_format"),
    (UnknownInvariantError, 400, "unknown_invariant"),
    (MalformedQueryError, 400, "malformed_query"),
    (CoordinateCountError, 400, "coordinate_count"),
    (CodecError, 400, "parse_error"),
    (GraphError, 400, "bad_graph"),
    (StoreError, 400, "store_error"),
    (_BadRequest, 400, "bad_request"),
    (GraphVaultError, 400, "bad_request"),
)


def _envelope(status: int, code: str, message: str, detail=None) -> JSONResponse:
    return JSONResponse(status_code=status,
                        content={"code": code, "message": message,
                                 "detail": detail})


def _error_response(exc: GraphVaultError) -> JSONResponse:
    for etype, status, code in _STATUS_BY_TYPE:
        if isinstance(exc, etype):
            detail = None
            if isinstance(exc, CodecError) and exc.offset is not None:
                detail = {"offset": exc.offset}
            return _envelope(status, code, str(exc), detail)
    return _envelope(500, "internal", str(exc))


class _RateLimiter:
    def __init__(self, per_minute: int):
        self.per_minute = per_minute
        self._counts: dict[tuple[str, int], int] = {}

    def allow(self, who: str) -> bool:
        if self.per_minute <= 0:
            return True
        window = int(time.time() // 60)
        self._counts = {k: v for k, v in self._counts.items() if k[1] == window}
        key = (who, window)
        self._counts[key] = self._counts.get(key, 0) + 1
        return self._counts[key] <= self.per_minute


def _json_body(raw: bytes):
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise _BadRequest(f"body is not valid JSON: {exc}") from exc


def _record_json(rec) -> dict:
    display = rec.value if rec.status == "done" else (
        "computation timeout" if rec.status == "timeout" else rec.status)
    return {"invariant": rec.invariant_id, "status": rec.status,
            "value": rec.value, "display": display}


def create_app(store: Store, config: Config = Config()) -> FastAPI:
    app = FastAPI(title="graphvault", docs_url=None, redoc_url=None)
    app.state.store = store
    app.state.config = config
    keys = {k.key: k for k in config.api_keys}
    limiter = _RateLimiter(config.rate_per_minute)

    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(GraphVaultError)
    async def _vault_error(_request: Request, exc: GraphVaultError):
        return _error_response(exc)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        return _envelope(400, "malformed_request", "request failed validation",
                         detail=str(exc))

    @app.middleware("http")
    async def _guards(request: Request, call_next):
        length = request.headers.get("content-length")
        if length is not None and int(length) > config.max_body_bytes:
            return _envelope(400, "body_too_large",
                             f"body exceeds {config.max_body_bytes} bytes")
        client = request.client.host if request.client else "local"
        who = request.headers.get("x-api-key") or client
        if not limiter.allow(who):
            return _envelope(429, "rate_limited", "too many requests")
        return await call_next(request)

    def principal(request: Request):
        header = request.headers.get("x-api-key")
        if header is None:
            return None
        found = keys.get(header)
        if found is None:
            raise UnauthenticatedError("unknown api key")
        return found

    def contributor(request: Request) -> str:
        who = principal(request)
        if who is None:
            raise UnauthenticatedError("this endpoint requires an api key")
        if who.role != "contributor":
            raise _Forbidden(f"{who.name} has read-only access")
        return who.name

    async def body_within_limit(request: Request) -> bytes:
        raw = await request.body()
        if len(raw) > config.max_body_bytes:
            raise _BadRequest(f"body exceeds {config.max_body_bytes} bytes")
        return raw

    # ------------------------------------------------------------- registry

    @app.get("/invariants")
    async def invariants():
        return {"invariants": [
            {"id": d.invariant_id, "kind": d.kind,
             "display_name": d.display_name, "definition": d.definition}
            for d in list_invariants()]}

    # --------------------------------------------------------------- graphs

    @app.get("/graphs/{graph_id}")
    async def get_graph(graph_id: int):
        d = store.get_graph(graph_id)
        return {
            "id": d.graph_id, "graph6": d.graph6,
            "canonical_graph6": d.canonical_key, "n": d.n, "m": d.m,
            "name": d.name, "uploader": d.uploader,
            "uploaded_at": d.uploaded_at,
            "adjacency_matrix": d.adjacency_matrix,
            "adjacency_list": d.adjacency_list,
            "invariants": [_record_json(r) for r in d.invariants],
            "comments": [{"author": c.author, "created_at": c.created_at,
                          "text": c.text} for c in d.comments],
            "embeddings": [{"seq": e.seq, "coords": [[x, y] for x, y in e.coords],
                            "author": e.author, "created_at": e.created_at}
                           for e in d.embeddings],
            "marks": [{"invariant": m.invariant_id, "author": m.author}
                      for m in d.marks],
        }

    @app.post("/graphs")
    async def post_graph(request: Request):
        author = contributor(request)
        obj = _json_body(await body_within_limit(request))
        if not isinstance(obj, dict):
            raise _BadRequest("expected a JSON object")
        fmt = codecs.normalize_format(str(obj.get("format", "graph6")))
        if "data_base64" in obj:
            try:
                data = base64.b64decode(obj["data_base64"], validate=True)
            except (binascii.Error, TypeError) as exc:
                raise _BadRequest(f"bad base64 payload: {exc}") from exc
        elif "data" in obj:
            if not isinstance(obj["data"], str):
                raise _BadRequest("data must be a string")
            data = obj["data"].encode("utf-8")
        else:
            raise _BadRequest("missing graph payload: data or data_base64")
        name = obj.get("name")
        if name is not None and not isinstance(name, str):
            raise _BadRequest("name must be a string")
        comments = obj.get("comments", [])
        marks = obj.get("marks", [])
        if not isinstance(comments, list) or not all(isinstance(c, str) for c in comments):
            raise _BadRequest("comments must be a list of strings")
        if not isinstance(marks, list) or not all(isinstance(m, str) for m in marks):
            raise _BadRequest("marks must be a list of invariant ids")
        result = store.upload(codecs.EncodedGraph(fmt, data), author,
                              name=name, comments=comments, marks=marks)
        location = f"/graphs/{result.graph_id}"
        body = {"id": result.graph_id, "created": result.created,
                "location": location}
        status = 201 if result.created else 303
        return JSONResponse(status_code=status, content=body,
                            headers={"Location": location})

    @app.get("/graphs/{graph_id}/export")
    async def export_graph(graph_id: int, format: str = "graph6"):
        fmt = codecs.normalize_format(format)
        g = store.load_graph(graph_id)
        return Response(content=codecs.encode_payload(fmt, g),
                        media_type=codecs.content_type(fmt))

    @app.get("/graphs/{graph_id}/status")
    async def graph_status(graph_id: int):
        d = store.get_graph(graph_id)
        records = {r.invariant_id: _record_json(r) for r in d.invariants}
        busy = any(r.status in ("pending", "computing") for r in d.invariants)
        return {"id": graph_id, "invariants": records, "quiescent": not busy}

    # ------------------------------------------------------------ mutations

    @app.post("/graphs/{graph_id}/comments")
    async def post_comment(graph_id: int, request: Request):
        author = contributor(request)
        obj = _json_body(await body_within_limit(request))
        text = obj.get("text") if isinstance(obj, dict) else None
        if not isinstance(text, str) or not text:
            raise _BadRequest("comment needs a non-empty text field")
        store.add_comment(graph_id, author, text)
        return JSONResponse(status_code=201, content={"ok": True})

    @app.post("/graphs/{graph_id}/embeddings")
    async def post_embedding(graph_id: int, request: Request):
        author = contributor(request)
        obj = _json_body(await body_within_limit(request))
        coords = obj.get("coords") if isinstance(obj, dict) else None
        if (not isinstance(coords, list)
                or not all(isinstance(p, list) and len(p) == 2
                           and all(isinstance(v, (int, float)) for v in p)
                           for p in coords)):
            raise _BadRequest("coords must be a list of [x, y] pairs")
        seq = store.add_embedding(graph_id, author,
                                  [(float(x), float(y)) for x, y in coords])
        return JSONResponse(status_code=201, content={"seq": seq})

    @app.post("/graphs/{graph_id}/marks")
    async def post_mark(graph_id: int, request: Request):
        author = contributor(request)
        obj = _json_body(await body_within_limit(request))
        invariant = obj.get("invariant") if isinstance(obj, dict) else None
        if not isinstance(invariant, str):
            raise _BadRequest("mark needs an invariant field")
        store.add_mark(graph_id, invariant, author)
        return JSONResponse(status_code=201, content={"ok": True})

    # -------------------------------------------------------------- drawings

    @app.get("/graphs/{graph_id}/drawings/{name}")
    async def drawing(graph_id: int, name: str, labels: bool = False):
        stem, _, suffix = name.rpartition(".")
        try:
            seq = int(stem)
        except ValueError:
            raise NotFoundError(f"no drawing {name!r}") from None
        emb = store.get_embedding(graph_id, seq)
        g = store.load_graph(graph_id)
        options = layout.ExportOptions(labels=labels, graph_id=graph_id)
        if suffix == "svg":
            return Response(content=layout.export_svg(g, emb.coords, options),
                            media_type="image/svg+xml")
        if suffix == "tikz":
            return PlainTextResponse(layout.export_tikz(g, emb.coords, options))
        raise UnknownFormatError(suffix)

    # ---------------------------------------------------------------- search

    @app.post("/search")
    async def run_search(request: Request):
        obj = _json_body(await body_within_limit(request))
        q = search.parse_query(obj)
        page = search.evaluate(store, q)
        return {
            "total": page.total,
            "rows": [{
                "id": row.graph_id, "name": row.name,
                "thumbnail": row.thumbnail_seq,
                "cells": [{"invariant": c.invariant_id, "status": c.status,
                           "value": c.value, "display": c.display}
                          for c in row.cells],
            } for row in page.rows],
        }

    @app.post("/search/export")
    async def search_export(request: Request, format: str = "graph6"):
        fmt = codecs.normalize_format(format)
        obj = _json_body(await body_within_limit(request))
        q = search.parse_query(obj)
        chunks = search.export_results(store, q, fmt)
        return StreamingResponse(chunks, media_type=codecs.content_type(fmt))

    # --------------------------------------------------------------- classes

    @app.get("/classes")
    async def classes():
        return {"classes": [{"slug": slug, "description": desc, "count": count}
                            for slug, desc, count in store.list_classes()]}

    @app.get("/classes/{slug}")
    async def class_graphs(slug: str, order: Optional[int] = None):
        lines = store.list_class(slug, order)
        text = "".join(line + "\n" for line in lines)
        return PlainTextResponse(text)

    # ---------------------------------------------------------------- legacy

    @app.get("/ViewGraphInfo.action")
    async def legacy_view(id: Optional[int] = None):
        if id is None:
            raise _BadRequest("missing id parameter")
        return RedirectResponse(url=f"/graphs/{id}", status_code=301)

    return app
