"""Command line front end.

Every computation is reachable offline: bulk `compute`, per-invariant
subcommands, canonical forms, format conversion, layout export, store
administration, and the HTTP server. Data goes to standard output,
diagnostics to standard error. Exit codes: 0 success (timeouts included),
2 parse or usage error, 3 store error.
"""

from __future__ import annotations

import argparse
import json
import os
import sqlite3
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import codecs, layout, search
from .budget import NO_BUDGET, Budget
from .config import Config, load_config
from .errors import (
    CodecError,
    GraphError,
    GraphVaultError,
    ComputationInterrupted,
    StoreError,
    UnknownFormatError,
    UnknownInvariantError,
)
from .invariants import compute as compute_invariant
from .invariants import list_invariants
from .canonical import canonical_form
from .core import Graph
from .scheduler import ThreadedScheduler
from .store import Store, make_computer

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_STORE = 3

TIMEOUT_WORD = "TIMEOUT"


def _fail(message: str, code: int) -> int:
    print(f"graphvault: {message}", file=sys.stderr)
    return code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _graph6_lines(path: str) -> list[str]:
    return [line for line in _read_text(path).splitlines() if line.strip()]


def _decode_many(fmt: str, data: bytes) -> list[Graph]:
    """All graphs in a payload: line-per-graph for graph6, concatenated
    blocks for multicode, a single graph for the adjacency formats."""
    if fmt == "graph6":
        return [codecs.graph6_decode(ln) for ln in data.decode("utf-8").splitlines()
                if ln.strip()]
    if fmt == "multicode":
        return codecs.multicode_decode_stream(data)
    return [codecs.decode_payload(fmt, data)]


def _open_store(data_dir: str) -> Store:
    try:
        return Store(Config(data_dir=data_dir).store_path())
    except sqlite3.OperationalError as exc:
        raise StoreError(f"cannot open store in {data_dir!r}: {exc}") from exc


# ------------------------------------------------------------------ compute


def _compute_cell(g: Graph, invariant_id: str, timeout: Optional[float]) -> str:
    budget = Budget(seconds=timeout) if timeout is not None else NO_BUDGET
    try:
        return compute_invariant(invariant_id, g, budget).render()
    except ComputationInterrupted:
        return TIMEOUT_WORD


def _compute_row(args: tuple[str, list[str], Optional[float]]) -> list[str]:
    line, invariant_ids, timeout = args
    g = codecs.graph6_decode(line)
    return [_compute_cell(g, inv, timeout) for inv in invariant_ids]


def _cmd_compute(opts) -> int:
    invariant_ids = opts.invariant or [d.invariant_id for d in list_invariants()]
    for inv in invariant_ids:
        get_registered(inv)
    lines = _graph6_lines(opts.file)
    work = [(line, invariant_ids, opts.timeout) for line in lines]
    if opts.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            rows = list(pool.map(_compute_row, work))
    else:
        rows = [_compute_row(w) for w in work]
    for index, row in enumerate(rows):
        for inv, value in zip(invariant_ids, row):
            print(f"{index}\t{inv}\t{value}")
    return EXIT_OK


def get_registered(invariant_id: str) -> str:
    if invariant_id not in {d.invariant_id for d in list_invariants()}:
        raise UnknownInvariantError(invariant_id)
    return invariant_id


def _cmd_single_invariant(invariant_id: str, opts) -> int:
    line = sys.stdin.readline().strip()
    if not line:
        return _fail("expected one graph6 line on standard input", EXIT_PARSE)
    g = codecs.graph6_decode(line)
    value = _compute_cell(g, invariant_id, opts.timeout)
    print(f"{invariant_id}\t{value}")
    return EXIT_OK


# ------------------------------------------------------------- conversions


def _cmd_canon(opts) -> int:
    seen = set()
    for line in _graph6_lines(opts.file):
        cf = canonical_form(codecs.graph6_decode(line))
        if opts.unique:
            if cf.graph6 in seen:
                continue
            seen.add(cf.graph6)
        print(cf.graph6)
    return EXIT_OK


def _cmd_convert(opts) -> int:
    src = codecs.normalize_format(opts.src)
    dst = codecs.normalize_format(opts.dst)
    graphs = _decode_many(src, _read_bytes(opts.file))
    out = sys.stdout.buffer
    for i, g in enumerate(graphs):
        if dst in ("adj-matrix", "adj-list") and i > 0:
            out.write(b"\n")
        out.write(codecs.encode_payload(dst, g))
    out.flush()
    return EXIT_OK


def _cmd_layout(opts) -> int:
    params = layout.LayoutParams(seed=opts.seed)
    for line in _graph6_lines(opts.file):
        g = codecs.graph6_decode(line)
        coords = layout.spring_embed(g, params)
        options = layout.ExportOptions(labels=opts.labels, seed=opts.seed)
        if opts.format == "svg":
            sys.stdout.write(layout.export_svg(g, coords, options))
        else:
            sys.stdout.write(layout.export_tikz(g, coords, options))
    return EXIT_OK


# ------------------------------------------------------------------- store


def _cmd_search(opts) -> int:
    store = _open_store(opts.store)
    try:
        query = search.parse_query(json.loads(_read_text(opts.query)))
        if opts.export:
            fmt = codecs.normalize_format(opts.export)
            for chunk in search.export_results(store, query, fmt):
                sys.stdout.buffer.write(chunk)
            sys.stdout.buffer.flush()
            return EXIT_OK
        page = search.evaluate(store, query)
        print(f"total: {page.total}", file=sys.stderr)
        for row in page.rows:
            cells = "\t".join(c.display for c in row.cells)
            name = row.name or ""
            print(f"{row.graph_id}\t{name}" + (f"\t{cells}" if cells else ""))
        return EXIT_OK
    finally:
        store.close()


def _cmd_import_class(opts) -> int:
    store = _open_store(opts.store)
    try:
        count = store.import_class(opts.slug, _read_text(opts.file).splitlines(),
                                   description=opts.description)
        print(f"imported {count} graphs into class {opts.slug}", file=sys.stderr)
        return EXIT_OK
    finally:
        store.close()


def _cmd_dump(opts) -> int:
    store = _open_store(opts.store)
    try:
        text = store.dumps()
        if opts.file == "-":
            sys.stdout.write(text)
        else:
            with open(opts.file, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        return EXIT_OK
    finally:
        store.close()


def _cmd_restore(opts) -> int:
    store = _open_store(opts.store)
    try:
        store.restore_text(_read_text(opts.file))
        return EXIT_OK
    finally:
        store.close()


def _cmd_serve(opts) -> int:
    import uvicorn

    from .service import create_app

    config = load_config(opts.config) if opts.config else Config()
    os.makedirs(config.data_dir, exist_ok=True)
    store = Store(config.store_path(), queue_config=config.queue)
    scheduler = ThreadedScheduler(store.queue, make_computer(store),
                                  workers=config.queue.workers)
    scheduler.start()
    try:
        uvicorn.run(create_app(store, config), host=config.host, port=config.port)
    finally:
        scheduler.stop()
        store.close()
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphvault",
        description="A searchable database of graphs with computed invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config", help="TOML config file")
    p.set_defaults(fn=_cmd_serve)

    p = sub.add_parser("compute", help="compute invariants for graph6 input")
    p.add_argument("--invariant", action="append",
                   help="invariant id; repeatable; default all")
    p.add_argument("--timeout", type=float, help="per-value budget in seconds")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("canon", help="canonical graph6 per input line")
    p.add_argument("--unique", action="store_true",
                   help="drop isomorphic repeats")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_canon)

    p = sub.add_parser("convert", help="transcode between graph formats")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("layout", help="spring embedding export")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("svg", "tikz"), default="svg")
    p.add_argument("--labels", action="store_true")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_layout)

    p = sub.add_parser("search", help="query a store offline")
    p.add_argument("--store", required=True, help="data directory")
    p.add_argument("--query", required=True, help="JSON query file or -")
    p.add_argument("--export", help="emit matches in this format")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("import-class", help="import a complete class list")
    p.add_argument("--store", required=True)
    p.add_argument("--slug", required=True)
    p.add_argument("--description", default="")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_import_class)

    p = sub.add_parser("dump", help="write the interchange dump")
    p.add_argument("--store", required=True)
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_dump)

    p = sub.add_parser("restore", help="load an interchange dump")
    p.add_argument("--store", required=True)
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(fn=_cmd_restore)

    for d in list_invariants():
        name = d.invariant_id.replace("_", "-")
        p = sub.add_parser(name, help=f"compute {d.display_name} for one graph")
        p.add_argument("--timeout", type=float)
        p.set_defaults(fn=_cmd_single_invariant, single_invariant=d.invariant_id)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    opts = parser.parse_args(argv)
    try:
        if getattr(opts, "single_invariant", None):
            return _cmd_single_invariant(opts.single_invariant, opts)
        return opts.fn(opts)
    except (CodecError, GraphError, UnknownFormatError,
            UnknownInvariantError, json.JSONDecodeError) as exc:
        return _fail(str(exc), EXIT_PARSE)
    except StoreError as exc:
        return _fail(str(exc), EXIT_STORE)
    except GraphVaultError as exc:
        return _fail(str(exc), EXIT_PARSE)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
