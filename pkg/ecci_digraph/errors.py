"""Exceptions raised by the digraph, metric, index and search layers."""

from __future__ import annotations

from typing import Optional


class EcciError(Exception):
    """Base class for every error raised by this package.

    Args:
        message: Human readable description.
        line: 1-based line number when the error was raised while reading a file.
    """

    def __init__(self, message: str = "", *, line: Optional[int] = None) -> None:
        super().__init__(message)
        self.line = line


class InvalidDigraphError(EcciError, ValueError):
    """The arcs given do not describe a loop-free digraph without parallel arcs."""


class LoopArcError(InvalidDigraphError):
    pass


class DuplicateArcError(InvalidDigraphError):
    pass


class VertexOutOfRangeError(InvalidDigraphError):
    pass


class EmptyVertexSetError(InvalidDigraphError):
    pass


class NotStronglyConnectedError(EcciError, ValueError):
    """Some ordered vertex pair has no directed path, so mecc is not finite."""


class NotConnectedError(EcciError, ValueError):
    pass


class NotRegularError(EcciError, ValueError):
    pass


class PreconditionViolatedError(EcciError, ValueError):
    pass


class OrderTooSmallError(EcciError, ValueError):
    pass


class InvalidFamilyParameterError(EcciError, ValueError):
    pass


class CapExceededError(EcciError, ValueError):
    """An exhaustive search or canonicalization was asked for beyond its order cap."""


class UnknownTheoremError(EcciError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class RetriesExhaustedError(EcciError, RuntimeError):
    pass


class MatrixTooLargeError(EcciError, MemoryError):
    pass


class EdgeListSyntaxError(EcciError, ValueError):
    """Malformed edge-list text; ``line`` points at the offending line."""


class HeaderMismatchError(EdgeListSyntaxError):
    pass
