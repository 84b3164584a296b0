"""Persistent graph database: dedup on canonical form, invariant records,
comments, marks, embeddings, class lists, and the job queue mirror.

Backed by sqlite. The canonical key carries a unique constraint, so the
upload dedup check is a single atomic insert rather than check-then-write.
The full store round-trips through a line-oriented text dump.
"""

from __future__ import annotations

import sqlite3
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable, Optional

from . import codecs
from .canonical import canonical_key
from .core import Graph
from .errors import (
    CoordinateCountError,
    DumpFormatError,
    ImportLineError,
    NotFoundError,
    SchemaVersionError,
    StoreError,
    UnknownInvariantError,
)
from .budget import Budget
from .invariants import REGISTRY, compute, list_invariants
from .scheduler import COMPUTING, DONE, PENDING, TIMEOUT, Job, JobQueue, QueueConfig

DUMP_HEADER = "HOGDUMP"
DUMP_VERSION = 1

_SCHEMA = """
CREATE TABLE IF NOT EXISTS graphs (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    canonical_key TEXT NOT NULL UNIQUE,
    graph6 TEXT NOT NULL,
    n INTEGER NOT NULL,
    name TEXT,
    uploader TEXT NOT NULL,
    uploaded_at TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS invariant_records (
    graph_id INTEGER NOT NULL,
    invariant_id TEXT NOT NULL,
    status TEXT NOT NULL,
    value TEXT,
    PRIMARY KEY (graph_id, invariant_id)
);
CREATE TABLE IF NOT EXISTS comments (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    graph_id INTEGER NOT NULL,
    author TEXT NOT NULL,
    created_at TEXT NOT NULL,
    text TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS marks (
    graph_id INTEGER NOT NULL,
    invariant_id TEXT NOT NULL,
    author TEXT NOT NULL,
    PRIMARY KEY (graph_id, invariant_id, author)
);
CREATE TABLE IF NOT EXISTS embeddings (
    graph_id INTEGER NOT NULL,
    seq INTEGER NOT NULL,
    coords TEXT NOT NULL,
    author TEXT NOT NULL,
    created_at TEXT NOT NULL,
    PRIMARY KEY (graph_id, seq)
);
CREATE TABLE IF NOT EXISTS classes (
    slug TEXT PRIMARY KEY,
    description TEXT NOT NULL DEFAULT ''
);
CREATE TABLE IF NOT EXISTS class_graphs (
    slug TEXT NOT NULL,
    seq INTEGER NOT NULL,
    graph6 TEXT NOT NULL,
    n INTEGER NOT NULL,
    PRIMARY KEY (slug, seq)
);
CREATE TABLE IF NOT EXISTS jobs (
    job_id INTEGER PRIMARY KEY,
    graph_id INTEGER NOT NULL,
    invariant_id TEXT NOT NULL,
    level INTEGER NOT NULL,
    status TEXT NOT NULL,
    enqueue_seq INTEGER NOT NULL,
    attempts INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS meta (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
"""


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\n", "\\n").replace(" ", "\\s")


def _unescape(token: str) -> str:
    out = []
    i = 0
    while i < len(token):
        c = token[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        if i + 1 >= len(token):
            raise ValueError("dangling escape")
        nxt = token[i + 1]
        if nxt == "\\":
            out.append("\\")
        elif nxt == "n":
            out.append("\n")
        elif nxt == "s":
            out.append(" ")
        else:
            raise ValueError(f"unknown escape \\{nxt}")
        i += 2
    return "".join(out)


@dataclass(frozen=True)
class UploadResult:
    graph_id: int
    created: bool


@dataclass(frozen=True)
class InvariantRecord:
    invariant_id: str
    status: str
    value: Optional[str]


@dataclass(frozen=True)
class Comment:
    author: str
    created_at: str
    text: str


@dataclass(frozen=True)
class Embedding:
    seq: int
    coords: list[tuple[float, float]]
    author: str
    created_at: str


@dataclass(frozen=True)
class Mark:
    invariant_id: str
    author: str


@dataclass(frozen=True)
class GraphDetail:
    graph_id: int
    graph6: str
    canonical_key: str
    n: int
    m: int
    name: Optional[str]
    uploader: str
    uploaded_at: str
    adjacency_matrix: str
    adjacency_list: str
    invariants: list[InvariantRecord] = field(default_factory=list)
    comments: list[Comment] = field(default_factory=list)
    embeddings: list[Embedding] = field(default_factory=list)
    marks: list[Mark] = field(default_factory=list)


def _format_coords(coords: Iterable[tuple[float, float]]) -> str:
    return ";".join(f"{float(x)!r},{float(y)!r}" for x, y in coords)


def _parse_coords(text: str) -> list[tuple[float, float]]:
    if not text:
        return []
    pairs = []
    for part in text.split(";"):
        xs, ys = part.split(",")
        pairs.append((float(xs), float(ys)))
    return pairs


class Store:
    """Single-process graph store. Safe for concurrent use from multiple
    threads; all sqlite access is serialized behind one lock."""

    def __init__(self, path: str = ":memory:",
                 queue_config: QueueConfig = QueueConfig(),
                 now: Callable[[], str] = _now_iso):
        self._lock = threading.RLock()
        self._now = now
        self._db = sqlite3.connect(path, check_same_thread=False)
        self._db.executescript(_SCHEMA)
        self._db.execute(
            "INSERT OR IGNORE INTO meta (key, value) VALUES ('schema_version', ?)",
            (str(DUMP_VERSION),))
        self._db.commit()
        self.queue = JobQueue(queue_config,
                              known_invariants=[d.invariant_id for d in list_invariants()],
                              on_change=self._persist_job)
        self._load_jobs()
        self.queue.recover()

    def close(self) -> None:
        with self._lock:
            self._db.close()

    # ------------------------------------------------------------- job mirror

    def _persist_job(self, job: Job) -> None:
        with self._lock:
            self._db.execute(
                "INSERT OR REPLACE INTO jobs VALUES (?,?,?,?,?,?,?)",
                (job.job_id, job.graph_id, job.invariant_id, job.level,
                 job.status, job.enqueue_seq, job.attempts))
            if job.status == DONE:
                self._db.execute(
                    "UPDATE invariant_records SET status=?, value=? "
                    "WHERE graph_id=? AND invariant_id=?",
                    (DONE, job.value, job.graph_id, job.invariant_id))
            else:
                self._db.execute(
                    "UPDATE invariant_records SET status=?, value=NULL "
                    "WHERE graph_id=? AND invariant_id=?",
                    (job.status, job.graph_id, job.invariant_id))
            self._db.commit()

    def _load_jobs(self) -> None:
        rows = self._db.execute(
            "SELECT job_id, graph_id, invariant_id, level, status, enqueue_seq,"
            " attempts FROM jobs WHERE status IN (?, ?) ORDER BY enqueue_seq",
            (PENDING, COMPUTING)).fetchall()
        self.queue.load(Job(job_id=r[0], graph_id=r[1], invariant_id=r[2],
                            level=r[3], status=r[4], enqueue_seq=r[5],
                            attempts=r[6]) for r in rows)

    # ----------------------------------------------------------------- upload

    def upload(self, encoded: codecs.EncodedGraph, author: str,
               name: Optional[str] = None,
               comments: Iterable[str] = (),
               marks: Iterable[str] = ()) -> UploadResult:
        """Decode, dedup by canonical form, persist, and enqueue all
        invariant computations. A duplicate mutates nothing."""
        g = codecs.decode_payload(encoded.format, encoded.data)
        key = canonical_key(g)
        g6 = codecs.graph6_encode(g)
        name = name or None
        with self._lock:
            cur = self._db.execute(
                "INSERT INTO graphs (canonical_key, graph6, n, name, uploader,"
                " uploaded_at) VALUES (?,?,?,?,?,?)"
                " ON CONFLICT(canonical_key) DO NOTHING",
                (key, g6, g.n, name, author, self._now()))
            if cur.rowcount == 0:
                row = self._db.execute(
                    "SELECT id FROM graphs WHERE canonical_key=?", (key,)).fetchone()
                self._db.commit()
                return UploadResult(graph_id=row[0], created=False)
            graph_id = cur.lastrowid
            all_ids = [d.invariant_id for d in list_invariants()]
            self._db.executemany(
                "INSERT INTO invariant_records (graph_id, invariant_id, status)"
                " VALUES (?,?,?)",
                [(graph_id, inv, PENDING) for inv in all_ids])
            self._db.commit()
        self.queue.submit(graph_id, all_ids)
        for text in comments:
            self.add_comment(graph_id, author, text)
        for inv in marks:
            self.add_mark(graph_id, inv, author)
        return UploadResult(graph_id=graph_id, created=True)

    # ------------------------------------------------------------------ reads

    def _graph_row(self, graph_id: int):
        row = self._db.execute(
            "SELECT id, canonical_key, graph6, n, name, uploader, uploaded_at"
            " FROM graphs WHERE id=?", (graph_id,)).fetchone()
        if row is None:
            raise NotFoundError(f"no graph with id {graph_id}")
        return row

    def load_graph(self, graph_id: int) -> Graph:
        with self._lock:
            row = self._graph_row(graph_id)
        return codecs.graph6_decode(row[2])

    def get_graph(self, graph_id: int) -> GraphDetail:
        with self._lock:
            row = self._graph_row(graph_id)
            inv_rows = self._db.execute(
                "SELECT invariant_id, status, value FROM invariant_records"
                " WHERE graph_id=?", (graph_id,)).fetchall()
            comment_rows = self._db.execute(
                "SELECT author, created_at, text FROM comments WHERE graph_id=?"
                " ORDER BY id", (graph_id,)).fetchall()
            emb_rows = self._db.execute(
                "SELECT seq, coords, author, created_at FROM embeddings"
                " WHERE graph_id=? ORDER BY seq", (graph_id,)).fetchall()
            mark_rows = self._db.execute(
                "SELECT invariant_id, author FROM marks WHERE graph_id=?"
                " ORDER BY invariant_id, author", (graph_id,)).fetchall()
        g = codecs.graph6_decode(row[2])
        by_id = {r[0]: r for r in inv_rows}
        records = [InvariantRecord(d.invariant_id, *by_id[d.invariant_id][1:])
                   for d in list_invariants() if d.invariant_id in by_id]
        return GraphDetail(
            graph_id=row[0], canonical_key=row[1], graph6=row[2], n=row[3],
            m=g.m, name=row[4], uploader=row[5], uploaded_at=row[6],
            adjacency_matrix=codecs.adjacency_matrix_print(g),
            adjacency_list=codecs.adjacency_list_print(g),
            invariants=records,
            comments=[Comment(*r) for r in comment_rows],
            embeddings=[Embedding(r[0], _parse_coords(r[1]), r[2], r[3])
                        for r in emb_rows],
            marks=[Mark(*r) for r in mark_rows])

    def graph_count(self) -> int:
        with self._lock:
            return self._db.execute("SELECT COUNT(*) FROM graphs").fetchone()[0]

    def all_ids(self) -> list[int]:
        with self._lock:
            rows = self._db.execute("SELECT id FROM graphs ORDER BY id").fetchall()
        return [r[0] for r in rows]

    def find_by_canonical(self, key: str) -> Optional[int]:
        with self._lock:
            row = self._db.execute(
                "SELECT id FROM graphs WHERE canonical_key=?", (key,)).fetchone()
        return None if row is None else row[0]

    def done_values(self, invariant_id: str) -> dict[int, str]:
        """graph id -> rendered value, for records already computed."""
        with self._lock:
            rows = self._db.execute(
                "SELECT graph_id, value FROM invariant_records"
                " WHERE invariant_id=? AND status=?", (invariant_id, DONE)).fetchall()
        return {r[0]: r[1] for r in rows}

    def statuses(self, invariant_id: str) -> dict[int, str]:
        with self._lock:
            rows = self._db.execute(
                "SELECT graph_id, status FROM invariant_records WHERE invariant_id=?",
                (invariant_id,)).fetchall()
        return {r[0]: r[1] for r in rows}

    def text_blobs(self) -> dict[int, str]:
        """graph id -> searchable text (name plus all comment texts)."""
        with self._lock:
            rows = self._db.execute("SELECT id, name FROM graphs").fetchall()
            blobs = {r[0]: (r[1] or "") for r in rows}
            for gid, text in self._db.execute(
                    "SELECT graph_id, text FROM comments ORDER BY id"):
                blobs[gid] = blobs[gid] + "\n" + text
        return blobs

    def marked_ids(self, invariant_id: str) -> set[int]:
        with self._lock:
            rows = self._db.execute(
                "SELECT DISTINCT graph_id FROM marks WHERE invariant_id=?",
                (invariant_id,)).fetchall()
        return {r[0] for r in rows}

    def names(self) -> dict[int, Optional[str]]:
        with self._lock:
            rows = self._db.execute("SELECT id, name FROM graphs").fetchall()
        return {r[0]: r[1] for r in rows}

    def graph6_of(self, graph_id: int) -> str:
        with self._lock:
            return self._graph_row(graph_id)[2]

    # ------------------------------------------------------------- mutations

    def _require_graph(self, graph_id: int) -> int:
        row = self._db.execute("SELECT n FROM graphs WHERE id=?", (graph_id,)).fetchone()
        if row is None:
            raise NotFoundError(f"no graph with id {graph_id}")
        return row[0]

    def add_comment(self, graph_id: int, author: str, text: str) -> None:
        if not text:
            raise StoreError("comment text must be non-empty")
        text = text.replace("\r\n", "\n").replace("\r", "\n")
        with self._lock:
            self._require_graph(graph_id)
            self._db.execute(
                "INSERT INTO comments (graph_id, author, created_at, text)"
                " VALUES (?,?,?,?)", (graph_id, author, self._now(), text))
            self._db.commit()

    def add_embedding(self, graph_id: int, author: str,
                      coords: Iterable[tuple[float, float]]) -> int:
        pts = [(float(x), float(y)) for x, y in coords]
        with self._lock:
            n = self._require_graph(graph_id)
            if len(pts) != n:
                raise CoordinateCountError(got=len(pts), expected=n)
            row = self._db.execute(
                "SELECT COALESCE(MAX(seq), 0) FROM embeddings WHERE graph_id=?",
                (graph_id,)).fetchone()
            seq = row[0] + 1
            self._db.execute(
                "INSERT INTO embeddings VALUES (?,?,?,?,?)",
                (graph_id, seq, _format_coords(pts), author, self._now()))
            self._db.commit()
        return seq

    def get_embedding(self, graph_id: int, seq: int) -> Embedding:
        with self._lock:
            self._require_graph(graph_id)
            row = self._db.execute(
                "SELECT seq, coords, author, created_at FROM embeddings"
                " WHERE graph_id=? AND seq=?", (graph_id, seq)).fetchone()
        if row is None:
            raise NotFoundError(f"graph {graph_id} has no embedding {seq}")
        return Embedding(row[0], _parse_coords(row[1]), row[2], row[3])

    def first_embedding_seq(self, graph_id: int) -> Optional[int]:
        with self._lock:
            row = self._db.execute(
                "SELECT MIN(seq) FROM embeddings WHERE graph_id=?",
                (graph_id,)).fetchone()
        return row[0]

    def add_mark(self, graph_id: int, invariant_id: str, author: str) -> None:
        if invariant_id not in REGISTRY:
            raise UnknownInvariantError(invariant_id)
        with self._lock:
            self._require_graph(graph_id)
            self._db.execute(
                "INSERT OR IGNORE INTO marks VALUES (?,?,?)",
                (graph_id, invariant_id, author))
            self._db.commit()

    # ---------------------------------------------------------- class lists

    def import_class(self, slug: str, lines: Iterable[str],
                     description: str = "") -> int:
        """Store a complete class list verbatim. Any undecodable line aborts
        the whole import."""
        parsed: list[tuple[str, int]] = []
        for line_no, line in enumerate(lines, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = codecs.graph6_decode(line)
            except Exception as exc:
                raise ImportLineError(line_no, str(exc)) from exc
            parsed.append((codecs.graph6_encode(g), g.n))
        with self._lock:
            self._db.execute(
                "INSERT INTO classes (slug, description) VALUES (?,?)"
                " ON CONFLICT(slug) DO UPDATE SET description=excluded.description",
                (slug, description))
            row = self._db.execute(
                "SELECT COALESCE(MAX(seq), 0) FROM class_graphs WHERE slug=?",
                (slug,)).fetchone()
            seq = row[0]
            for g6, n in parsed:
                seq += 1
                self._db.execute("INSERT INTO class_graphs VALUES (?,?,?,?)",
                                 (slug, seq, g6, n))
            self._db.commit()
        return len(parsed)

    def list_classes(self) -> list[tuple[str, str, int]]:
        with self._lock:
            rows = self._db.execute(
                "SELECT c.slug, c.description,"
                " (SELECT COUNT(*) FROM class_graphs g WHERE g.slug = c.slug)"
                " FROM classes c ORDER BY c.slug").fetchall()
        return [tuple(r) for r in rows]

    def list_class(self, slug: str, order: Optional[int] = None) -> list[str]:
        with self._lock:
            row = self._db.execute("SELECT slug FROM classes WHERE slug=?",
                                   (slug,)).fetchone()
            if row is None:
                raise NotFoundError(f"no class {slug!r}")
            if order is None:
                rows = self._db.execute(
                    "SELECT graph6 FROM class_graphs WHERE slug=? ORDER BY seq",
                    (slug,)).fetchall()
            else:
                rows = self._db.execute(
                    "SELECT graph6 FROM class_graphs WHERE slug=? AND n=?"
                    " ORDER BY seq", (slug, order)).fetchall()
        return [r[0] for r in rows]

    # --------------------------------------------------------- dump / restore

    def dumps(self) -> str:
        """Serialize the whole store. In-flight computations are snapshotted
        as pending so a restored store resumes them; that also makes
        dump(restore(dump(s))) byte-identical."""
        out = [f"{DUMP_HEADER} {DUMP_VERSION}"]
        with self._lock:
            graphs = self._db.execute(
                "SELECT id, canonical_key, graph6, name, uploader, uploaded_at"
                " FROM graphs ORDER BY id").fetchall()
            order = {d.invariant_id: i for i, d in enumerate(list_invariants())}
            for gid, key, g6, name, uploader, uploaded_at in graphs:
                line = f"G {gid} {key} {g6}"
                if name:
                    line += f" {_escape(name)}"
                out.append(line)
                out.append(f"U {gid} {_escape(uploader)} {uploaded_at}")
                invs = self._db.execute(
                    "SELECT invariant_id, status, value FROM invariant_records"
                    " WHERE graph_id=?", (gid,)).fetchall()
                for inv, status, value in sorted(invs, key=lambda r: order[r[0]]):
                    shown = PENDING if status == COMPUTING else status
                    if status == DONE:
                        out.append(f"I {gid} {inv} {shown} {value}")
                    else:
                        out.append(f"I {gid} {inv} {shown}")
                for author, created_at, text in self._db.execute(
                        "SELECT author, created_at, text FROM comments"
                        " WHERE graph_id=? ORDER BY id", (gid,)):
                    out.append(f"C {gid} {_escape(author)} {created_at}"
                               f" {_escape(text)}")
                for seq, coords, author, created_at in self._db.execute(
                        "SELECT seq, coords, author, created_at FROM embeddings"
                        " WHERE graph_id=? ORDER BY seq", (gid,)):
                    out.append(f"E {gid} {seq} {coords}")
                    out.append(f"F {gid} {seq} {_escape(author)} {created_at}")
                for inv, author in self._db.execute(
                        "SELECT invariant_id, author FROM marks WHERE graph_id=?"
                        " ORDER BY invariant_id, author", (gid,)):
                    out.append(f"M {gid} {inv} {_escape(author)}")
            for slug, desc in self._db.execute(
                    "SELECT slug, description FROM classes ORDER BY slug"):
                line = f"K {_escape(slug)}"
                if desc:
                    line += f" {_escape(desc)}"
                out.append(line)
                for seq, g6 in self._db.execute(
                        "SELECT seq, graph6 FROM class_graphs WHERE slug=?"
                        " ORDER BY seq", (slug,)):
                    out.append(f"L {_escape(slug)} {seq} {g6}")
            jobs = self._db.execute(
                "SELECT job_id, graph_id, invariant_id, level, enqueue_seq"
                " FROM jobs WHERE status IN (?, ?) ORDER BY job_id",
                (PENDING, COMPUTING)).fetchall()
            for job_id, gid, inv, level, enq in jobs:
                out.append(f"J {job_id} {gid} {inv} {level} {enq}")
        return "\n".join(out) + "\n"

    def dump(self, path: str) -> None:
        text = self.dumps()
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)

    def restore_text(self, text: str) -> None:
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines:
            raise DumpFormatError(1, "empty dump")
        head = lines[0].split(" ")
        if len(head) != 2 or head[0] != DUMP_HEADER:
            raise DumpFormatError(1, "bad header")
        try:
            version = int(head[1])
        except ValueError:
            raise DumpFormatError(1, f"bad version {head[1]!r}") from None
        if version > DUMP_VERSION:
            raise SchemaVersionError(
                f"dump version {version} is newer than supported {DUMP_VERSION}")
        parsed = self._parse_records(lines)
        with self._lock:
            for table in ("graphs", "invariant_records", "comments", "marks",
                          "embeddings", "classes", "class_graphs", "jobs"):
                self._db.execute(f"DELETE FROM {table}")
            if self._db.execute("SELECT name FROM sqlite_master"
                                " WHERE name='sqlite_sequence'").fetchone():
                self._db.execute("DELETE FROM sqlite_sequence")
            for sql, rows in parsed:
                self._db.executemany(sql, rows)
            self._db.commit()
        self.queue = JobQueue(self.queue.config,
                              known_invariants=list(REGISTRY),
                              on_change=self._persist_job)
        self._load_jobs()
        self.queue.recover()

    def _parse_records(self, lines: list[str]):
        graphs, invs, comments, marks = [], [], [], []
        embeddings: dict[tuple[int, int], list] = {}
        classes, class_graphs, jobs = [], [], []
        known_statuses = {PENDING, COMPUTING, DONE, TIMEOUT}
        for line_no, line in enumerate(lines[1:], start=2):
            if not line:
                raise DumpFormatError(line_no, "blank line")
            kind, _, rest = line.partition(" ")
            fields = rest.split(" ") if rest else []
            try:
                if kind == "G":
                    if len(fields) not in (3, 4):
                        raise ValueError("expected: id canonical g6 [name]")
                    gid, key, g6 = int(fields[0]), fields[1], fields[2]
                    name = _unescape(fields[3]) if len(fields) == 4 else None
                    n = codecs.graph6_decode(g6).n
                    graphs.append((gid, key, g6, n, name, "", ""))
                elif kind == "U":
                    gid, uploader, at = int(fields[0]), _unescape(fields[1]), fields[2]
                    for i, row in enumerate(graphs):
                        if row[0] == gid:
                            graphs[i] = row[:5] + (uploader, at)
                            break
                    else:
                        raise ValueError(f"uploader record before graph {gid}")
                elif kind == "I":
                    if len(fields) not in (3, 4):
                        raise ValueError("expected: id invariant status [value]")
                    gid, inv, status = int(fields[0]), fields[1], fields[2]
                    if inv not in REGISTRY:
                        raise ValueError(f"unknown invariant {inv!r}")
                    if status not in known_statuses:
                        raise ValueError(f"unknown status {status!r}")
                    value = fields[3] if len(fields) == 4 else None
                    invs.append((gid, inv, status, value))
                elif kind == "C":
                    if len(fields) < 3:
                        raise ValueError("expected: id author timestamp text")
                    comments.append((int(fields[0]), _unescape(fields[1]),
                                     fields[2], _unescape(fields[3])))
                elif kind == "E":
                    gid, seq = int(fields[0]), int(fields[1])
                    _parse_coords(fields[2])
                    embeddings[(gid, seq)] = [gid, seq, fields[2], "", ""]
                elif kind == "F":
                    gid, seq = int(fields[0]), int(fields[1])
                    if (gid, seq) not in embeddings:
                        raise ValueError("embedding meta before embedding")
                    embeddings[(gid, seq)][3] = _unescape(fields[2])
                    embeddings[(gid, seq)][4] = fields[3]
                elif kind == "M":
                    marks.append((int(fields[0]), fields[1], _unescape(fields[2])))
                elif kind == "K":
                    if len(fields) not in (1, 2):
                        raise ValueError("expected: slug [description]")
                    desc = _unescape(fields[1]) if len(fields) == 2 else ""
                    classes.append((_unescape(fields[0]), desc))
                elif kind == "L":
                    slug, seq, g6 = _unescape(fields[0]), int(fields[1]), fields[2]
                    class_graphs.append((slug, seq, g6, codecs.graph6_decode(g6).n))
                elif kind == "J":
                    jobs.append((int(fields[0]), int(fields[1]), fields[2],
                                 int(fields[3]), PENDING, int(fields[4]), 0))
                else:
                    raise ValueError(f"unknown record type {kind!r}")
            except DumpFormatError:
                raise
            except Exception as exc:
                raise DumpFormatError(line_no, str(exc)) from exc
        return [
            ("INSERT INTO graphs VALUES (?,?,?,?,?,?,?)", graphs),
            ("INSERT INTO invariant_records VALUES (?,?,?,?)", invs),
            ("INSERT INTO comments (graph_id, author, created_at, text)"
             " VALUES (?,?,?,?)", comments),
            ("INSERT INTO marks VALUES (?,?,?)", marks),
            ("INSERT INTO embeddings VALUES (?,?,?,?,?)",
             [tuple(v) for v in embeddings.values()]),
            ("INSERT INTO classes VALUES (?,?)", classes),
            ("INSERT INTO class_graphs VALUES (?,?,?,?)", class_graphs),
            ("INSERT INTO jobs VALUES (?,?,?,?,?,?,?)", jobs),
        ]

    def restore(self, path: str) -> None:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            self.restore_text(fh.read())


def make_computer(store: Store) -> Callable[[int, str, Budget], str]:
    """Worker body for the scheduler: load the graph, compute, render."""
    def computer(graph_id: int, invariant_id: str, budget: Budget) -> str:
        g = store.load_graph(graph_id)
        return compute(invariant_id, g, budget).render()
    return computer
