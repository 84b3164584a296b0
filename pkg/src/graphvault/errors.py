"""Exception hierarchy shared by all graphvault modules."""

from __future__ import annotations


class GraphVaultError(Exception):
    """Base class for every error raised by this package."""


# ---------------------------------------------------------------- graph core


class GraphError(GraphVaultError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class VertexOutOfRangeError(GraphError):
    def __init__(self, vertex: int, order: int):
        super().__init__(f"vertex {vertex} out of range for order {order}")
        self.vertex = vertex
        self.order = order


class OrderTooLargeError(GraphError):
    def __init__(self, order: int, maximum: int):
        super().__init__(f"order {order} exceeds maximum {maximum}")
        self.order = order
        self.maximum = maximum


class PermutationLengthError(GraphError):
    def __init__(self, got: int, expected: int):
        super().__init__(f"permutation has length {got}, expected {expected}")
        self.got = got
        self.expected = expected


class NotAPermutationError(GraphError):
    pass


# -------------------------------------------------------------------- codecs


class CodecError(GraphVaultError):
    """Parse or serialization failure; `offset` locates the problem when known."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class BadCharacterError(CodecError):
    def __init__(self, offset: int, byte: int):
        super().__init__(f"byte {byte} at offset {offset} outside graph6 range 63..126", offset)
        self.byte = byte


class TruncatedBitVectorError(CodecError):
    pass


class PaddingNotZeroError(CodecError):
    pass


class TrailingDataError(CodecError):
    pass


class UnexpectedEndOfStreamError(CodecError):
    pass


class NeighborOutOfRangeError(CodecError):
    def __init__(self, neighbor: int, order: int, offset: int | None = None):
        super().__init__(f"neighbor {neighbor} out of range for order {order}", offset)
        self.neighbor = neighbor
        self.order = order


class NotSymmetricError(CodecError):
    def __init__(self, i: int, j: int):
        super().__init__(f"adjacency not symmetric at ({i},{j})")
        self.i = i
        self.j = j


class NonZeroDiagonalError(CodecError):
    def __init__(self, i: int):
        super().__init__(f"non-zero diagonal entry at vertex {i}")
        self.i = i


class RaggedRowError(CodecError):
    def __init__(self, i: int):
        super().__init__(f"row {i} has the wrong number of entries")
        self.i = i


class UnknownFormatError(GraphVaultError):
    def __init__(self, fmt: str):
        super().__init__(f"unknown format {fmt!r}")
        self.format = fmt


# ------------------------------------------------------- computation control


class ComputationInterrupted(GraphVaultError):
    """Raised cooperatively when a computation exhausts its wall-clock budget."""


class UnknownInvariantError(GraphVaultError):
    def __init__(self, invariant_id: str):
        super().__init__(f"unknown invariant {invariant_id!r}")
        self.invariant_id = invariant_id


# --------------------------------------------------------------------- store


class StoreError(GraphVaultError):
    pass


class NotFoundError(StoreError):
    pass


class UnauthenticatedError(GraphVaultError):
    pass


class CoordinateCountError(GraphVaultError):
    def __init__(self, got: int, expected: int):
        super().__init__(f"got {got} coordinates, expected {expected}")
        self.got = got
        self.expected = expected


class SchemaVersionError(StoreError):
    pass


class DumpFormatError(StoreError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ImportLineError(StoreError):
    """A class-list file failed to decode; nothing was persisted."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


# -------------------------------------------------------------------- search


class MalformedQueryError(GraphVaultError):
    pass
