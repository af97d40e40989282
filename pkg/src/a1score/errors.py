from __future__ import annotations

from typing import Sequence


class A1Error(Exception):
    """Base class for every error raised by this package."""


class ComplexityError(A1Error):
    pass


class ParseError(ComplexityError):
    """Syntax error in a complexity expression."""

    def __init__(self, message: str, text: str, pos: int, expected: Sequence[str] = ()):
        self.text = text
        self.pos = pos
        self.expected = tuple(expected)
        detail = f"{message} at position {pos}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)

    def pointer(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^"


class UnsupportedExpression(ComplexityError):
    """Well-formed syntax naming a construct outside the supported fragment."""

    def __init__(self, message: str, construct: str = "", pos: int | None = None):
        self.message = message
        self.construct = construct
        self.pos = pos
        detail = message
        if construct:
            detail += f": {construct}"
        if pos is not None:
            detail += f" (at position {pos})"
        super().__init__(detail)


class DomainError(A1Error, ValueError):
    pass


class EvaluationOverflow(A1Error, ArithmeticError):
    pass


class CatalogError(A1Error):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
