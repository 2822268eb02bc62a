"""Exception hierarchy shared by every compiler stage."""

from __future__ import annotations


class CompileError(Exception):
    """A positioned failure raised by one of the pipeline stages.

    ``source`` names the input the position refers to (``"schema"`` or
    ``"stylesheet"``); the pipeline fills it in when a stage leaves it unset.
    """

    stage = "error"
    exit_code = 1

    def __init__(
        self,
        message: str,
        line: int = 0,
        column: int = 0,
        source: str | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column
        self.source = source

    def __str__(self) -> str:
        if self.line:
            return f"{self.line}:{self.column}: {self.message}"
        return self.message


class LexicalError(CompileError):
    stage = "lexical"
    exit_code = 1


class ParseError(CompileError):
    """Raised on the first token at which no production can continue."""

    stage = "syntax"
    exit_code = 2

    def __init__(self, message: str, found=None, expected: str = "", **kwargs) -> None:
        if found is not None:
            kwargs.setdefault("line", found.line)
            kwargs.setdefault("column", found.column)
        super().__init__(message, **kwargs)
        self.found = found
        self.expected = expected


class SemanticError(CompileError):
    # Reported under the binding stage: both map to the same exit status.
    stage = "binding"
    exit_code = 3


class BindingError(CompileError):
    stage = "binding"
    exit_code = 3
