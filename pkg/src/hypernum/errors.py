"""Exception taxonomy shared by every hypernum module."""

from __future__ import annotations

import builtins
from typing import Optional, Tuple

Span = Tuple[int, int]


class NumError(ArithmeticError):
    """Base class for all hypernum errors.

    ``span`` is a half-open ``(start, end)`` byte range into the source text
    of an expression, filled in by the evaluator when the error originates in
    a parsed expression; library calls leave it ``None``.
    """

    label = "error"

    def __init__(self, message: str, span: Optional[Span] = None):
        super().__init__(message)
        self.message = message
        self.span = span


class NullConeDivision(NumError, ZeroDivisionError):
    """Division by (or inversion of) a number whose quadratic form is zero."""

    label = "null-cone division"


class DomainError(NumError, ValueError):
    """Argument outside the domain of an operation (narrowing, log of a
    non-wedge value, exact division by zero, ...)."""

    label = "domain error"


class NumOverflowError(NumError, builtins.OverflowError):
    """An exact (INT or RATIONAL) component left the signed 64-bit range."""

    label = "overflow"


class ParseError(NumError, ValueError):
    """Malformed text. ``position`` is a byte offset into the input."""

    label = "parse error"

    def __init__(self, position: int, message: str):
        super().__init__(message, (position, position + 1))
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} at offset {self.position}"
