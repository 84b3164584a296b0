"""Bit-exact graph serialization: graph6, multicode, adjacency matrix/list.

graph6 is the printable-ASCII format of McKay's tools: an order prefix
followed by the upper-triangle adjacency bits in column order, packed into
6-bit groups offset by 63. multicode is the binary format of the exhaustive
generation tools: a leading order byte, then for each vertex 1..n-1 (1-based)
its ascending higher-numbered neighbors terminated by a zero byte.

File conventions: .g6 holds one graph6 string per line, .mc holds
concatenated multicode records, matrix/list text holds a single graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import MAX_ORDER_DEFAULT, Graph
from .errors import (
    BadCharacterError,
    CodecError,
    NeighborOutOfRangeError,
    NonZeroDiagonalError,
    NotSymmetricError,
    OrderTooLargeError,
    PaddingNotZeroError,
    RaggedRowError,
    TrailingDataError,
    TruncatedBitVectorError,
    UnexpectedEndOfStreamError,
    UnknownFormatError,
)

GRAPH6_HEADER = ">>graph6<<"

FORMATS = ("graph6", "multicode", "adj-matrix", "adj-list")

_FORMAT_ALIASES = {
    "graph6": "graph6",
    "g6": "graph6",
    "multicode": "multicode",
    "mc": "multicode",
    "adj-matrix": "adj-matrix",
    "adjmat": "adj-matrix",
    "matrix": "adj-matrix",
    "adj-list": "adj-list",
    "adjlist": "adj-list",
    "list": "adj-list",
}


def normalize_format(fmt: str) -> str:
    try:
        return _FORMAT_ALIASES[fmt.strip().lower()]
    except KeyError:
        raise UnknownFormatError(fmt) from None


@dataclass(frozen=True)
class EncodedGraph:
    """A graph payload tagged with its wire format; bytes for multicode, text otherwise."""

    format: str
    data: bytes

    def text(self) -> str:
        return self.data.decode("utf-8")


# ------------------------------------------------------------------- graph6


def graph6_encode(g: Graph) -> str:
    """Encode to a single graph6 line (no trailing newline)."""
    n = g.n
    if n > MAX_ORDER_DEFAULT:
        raise OrderTooLargeError(n, MAX_ORDER_DEFAULT)
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.append(((n >> 12) & 63) + 63)
        out.append(((n >> 6) & 63) + 63)
        out.append((n & 63) + 63)
    group = 0
    filled = 0
    for v in range(1, n):
        col = g.bits[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


def graph6_decode(s: str, max_order: int = MAX_ORDER_DEFAULT) -> Graph:
    """Decode one graph6 line; tolerates the optional format header and
    trailing newline. Error offsets index into the given string."""
    end = len(s)
    while end > 0 and s[end - 1] in "\r\n":
        end -= 1
    pos = 0
    if s.startswith(GRAPH6_HEADER):
        pos = len(GRAPH6_HEADER)
    if pos >= end:
        raise UnexpectedEndOfStreamError("empty graph6 input", pos)

    def take(why: str) -> int:
        nonlocal pos
        if pos >= end:
            raise UnexpectedEndOfStreamError(f"input ended inside {why}", pos)
        b = ord(s[pos])
        if not 63 <= b <= 126:
            raise BadCharacterError(pos, b)
        pos += 1
        return b - 63

    first = take("order prefix")
    if first != 63:
        n = first
    else:
        second = take("order prefix")
        if second == 63:
            # 8-byte order form: six more 6-bit groups
            n = 0
            for _ in range(6):
                n = n << 6 | take("order prefix")
        else:
            n = second << 12 | take("order prefix") << 6 | take("order prefix")
    if n == 0:
        raise CodecError("graph6 order 0 is not a valid graph", 0)
    if n > max_order:
        raise OrderTooLargeError(n, max_order)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if end - pos < nchars:
        raise TruncatedBitVectorError(
            f"need {nchars} adjacency characters, got {end - pos}", pos)
    edges = []
    bit = 0
    group = 0
    u, v = 0, 1
    for _ in range(nchars):
        group = take("adjacency bits")
        for k in range(5, -1, -1):
            if bit == nbits:
                if group & ((1 << (k + 1)) - 1):
                    raise PaddingNotZeroError("padding bits are not zero", pos - 1)
                break
            if group >> k & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    if pos != end:
        raise TrailingDataError("unexpected data after graph6 payload", pos)
    return Graph(n, edges, max_order=max_order)


def iter_graph6_lines(text: str, max_order: int = MAX_ORDER_DEFAULT) -> Iterator[Graph]:
    """Decode a .g6 file body, one graph per non-empty line."""
    for line in text.splitlines():
        if line.strip():
            yield graph6_decode(line, max_order=max_order)


# ---------------------------------------------------------------- multicode


def multicode_encode(g: Graph) -> bytes:
    if g.n > 255:
        raise OrderTooLargeError(g.n, 255)
    out = bytearray([g.n])
    for v in range(g.n - 1):
        out.extend(w + 1 for w in g.adj[v] if w > v)
        out.append(0)
    return bytes(out)


def _multicode_decode_at(b: bytes, pos: int, max_order: int) -> tuple[Graph, int]:
    if pos >= len(b):
        raise UnexpectedEndOfStreamError("missing order byte", pos)
    n = b[pos]
    if n == 0:
        raise CodecError("multicode order 0 is not a valid graph", pos)
    pos += 1
    edges = []
    for i in range(1, n):  # 1-based vertex whose block follows
        while True:
            if pos >= len(b):
                raise UnexpectedEndOfStreamError(
                    f"input ended inside the neighbor block of vertex {i}", pos)
            j = b[pos]
            if j == 0:
                pos += 1
                break
            if not i < j <= n:
                raise NeighborOutOfRangeError(j, n, pos)
            edges.append((i - 1, j - 1))
            pos += 1
    return Graph(n, edges, max_order=max_order), pos


def multicode_decode(b: bytes, max_order: int = MAX_ORDER_DEFAULT) -> Graph:
    """Decode exactly one multicode record."""
    g, pos = _multicode_decode_at(b, 0, max_order)
    if pos != len(b):
        raise TrailingDataError("unexpected data after multicode record", pos)
    return g


def multicode_decode_stream(b: bytes, max_order: int = MAX_ORDER_DEFAULT) -> list[Graph]:
    """Decode a .mc file: back-to-back multicode records."""
    graphs = []
    pos = 0
    while pos < len(b):
        g, pos = _multicode_decode_at(b, pos, max_order)
        graphs.append(g)
    return graphs


def multicode_encode_stream(graphs: Iterable[Graph]) -> bytes:
    return b"".join(multicode_encode(g) for g in graphs)


# --------------------------------------------------------- adjacency matrix


def adjacency_matrix_print(g: Graph) -> str:
    lines = []
    for v in range(g.n):
        row = g.bits[v]
        lines.append(" ".join("1" if row >> u & 1 else "0" for u in range(g.n)))
    return "\n".join(lines) + "\n"


def adjacency_matrix_parse(text: str, max_order: int = MAX_ORDER_DEFAULT) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CodecError("empty adjacency matrix", 0)
    n = len(lines)
    rows = []
    for i, ln in enumerate(lines):
        cells = ln.split()
        if len(cells) != n:
            raise RaggedRowError(i)
        row = []
        for cell in cells:
            if cell not in ("0", "1"):
                raise CodecError(f"matrix entry {cell!r} in row {i} is not 0 or 1")
            row.append(cell == "1")
        rows.append(row)
    edges = []
    for i in range(n):
        if rows[i][i]:
            raise NonZeroDiagonalError(i)
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetricError(i, j)
            if rows[i][j]:
                edges.append((i, j))
    return Graph(n, edges, max_order=max_order)


# ----------------------------------------------------------- adjacency list


def adjacency_list_print(g: Graph) -> str:
    lines = []
    for v in range(g.n):
        tail = " ".join(str(w) for w in g.adj[v])
        lines.append(f"{v}: {tail}" if tail else f"{v}:")
    return "\n".join(lines) + "\n"


def adjacency_list_parse(text: str, max_order: int = MAX_ORDER_DEFAULT) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CodecError("empty adjacency list", 0)
    n = len(lines)
    neighbor_sets: list[set[int]] = []
    for i, ln in enumerate(lines):
        head, sep, tail = ln.partition(":")
        if not sep:
            raise CodecError(f"line {i} has no ':' separator")
        try:
            idx = int(head.strip())
        except ValueError:
            raise CodecError(f"line {i} has a non-integer vertex label") from None
        if idx != i:
            raise CodecError(f"line {i} is labeled {idx}; lines must be 0..n-1 in order")
        ns = set()
        for tok in tail.split():
            try:
                j = int(tok)
            except ValueError:
                raise CodecError(f"line {i} has a non-integer neighbor {tok!r}") from None
            if not 0 <= j < n:
                raise NeighborOutOfRangeError(j, n)
            if j == i:
                raise NonZeroDiagonalError(i)
            ns.add(j)
        neighbor_sets.append(ns)
    edges = []
    for i in range(n):
        for j in neighbor_sets[i]:
            if i not in neighbor_sets[j]:
                raise NotSymmetricError(i, j)
            if i < j:
                edges.append((i, j))
    return Graph(n, edges, max_order=max_order)


# ----------------------------------------------------------- format routing


def encode_payload(fmt: str, g: Graph) -> bytes:
    """Encode one graph in a named format; text formats come back UTF-8."""
    fmt = normalize_format(fmt)
    if fmt == "graph6":
        return (graph6_encode(g) + "\n").encode("ascii")
    if fmt == "multicode":
        return multicode_encode(g)
    if fmt == "adj-matrix":
        return adjacency_matrix_print(g).encode("ascii")
    return adjacency_list_print(g).encode("ascii")


def decode_payload(fmt: str, data: bytes, max_order: int = MAX_ORDER_DEFAULT) -> Graph:
    """Decode a single graph from a named format."""
    fmt = normalize_format(fmt)
    if fmt == "multicode":
        return multicode_decode(data, max_order=max_order)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CodecError(f"payload is not valid UTF-8: {exc}") from None
    if fmt == "graph6":
        return graph6_decode(text.strip(), max_order=max_order)
    if fmt == "adj-matrix":
        return adjacency_matrix_parse(text, max_order=max_order)
    return adjacency_list_parse(text, max_order=max_order)


def content_type(fmt: str) -> str:
    fmt = normalize_format(fmt)
    if fmt == "multicode":
        return "application/octet-stream"
    return "text/plain; charset=utf-8"
