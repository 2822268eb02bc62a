"""Parser for the line-oriented style sheet language.

Each instruction has the shape::

    element:NAME (tag:TAG)
    element:NAME (tag:ol, listype:LISTTYPE)

``type`` is accepted as a synonym for ``listype``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ParseError
from .lexer import STYLESHEET, TAG_NAMES, Token, TokenKind, tokenize

LIST_TYPES = ("1", "a", "A", "i", "I")
HEADER_TAGS = frozenset(("h1", "h2", "h3", "h4", "h5", "h6"))
LIST_TAGS = frozenset(("ol", "ul"))
INPUT_TAGS = frozenset(("text", "password", "checkbox", "radio", "submit", "textarea"))
# Controls whose content the user types freely; these get validators.
EDITABLE_TAGS = frozenset(("text", "password", "textarea"))


@dataclass(frozen=True)
class StyleInstruction:
    element_name: str
    tag: str
    list_type: Optional[str] = None
    line: int = 1
    column: int = field(default=1, compare=False)

    def __post_init__(self) -> None:
        if self.tag not in TAG_NAMES:
            raise ValueError(f"unknown tag {self.tag!r}")
        if (self.tag == "ol") != (self.list_type is not None):
            raise ValueError("a list type is required on ol and forbidden elsewhere")
        if self.list_type is not None and self.list_type not in LIST_TYPES:
            raise ValueError(f"unknown list type {self.list_type!r}")


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        if not tokens or tokens[-1].kind is not TokenKind.EOF:
            raise ValueError("token sequence must end with an end-of-input token")
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, expected: str, token: Token | None = None) -> ParseError:
        return ParseError(
            message, found=token or self.current, expected=expected, source="stylesheet"
        )

    def expect(self, kind: TokenKind, lexeme: str) -> Token:
        token = self.current
        if token.kind is not kind or token.lexeme != lexeme:
            raise self.error(f"expected {lexeme!r}, found {token}", repr(lexeme))
        self.pos += 1
        return token

    def instructions(self) -> list[StyleInstruction]:
        result = []
        while self.current.kind is not TokenKind.EOF:
            result.append(self.instruction())
        return result

    def instruction(self) -> StyleInstruction:
        start = self.expect(TokenKind.KEYWORD, "element")
        self.expect(TokenKind.SYMBOL, ":")
        name = self.current
        # Element names may collide with style keywords (e.g. an element called "submit").
        if name.kind not in (TokenKind.IDENTIFIER, TokenKind.KEYWORD):
            raise self.error(f"expected an element name, found {name}", "identifier")
        self.pos += 1
        self.expect(TokenKind.SYMBOL, "(")
        self.expect(TokenKind.KEYWORD, "tag")
        self.expect(TokenKind.SYMBOL, ":")
        tag = self.current
        if tag.kind is not TokenKind.KEYWORD or tag.lexeme not in TAG_NAMES:
            raise self.error(f"unknown tag name {tag}", "a tag name")
        self.pos += 1
        list_type = None
        if self.current.kind is TokenKind.SYMBOL and self.current.lexeme == ",":
            comma = self.current
            self.pos += 1
            key = self.current
            if key.kind is not TokenKind.KEYWORD or key.lexeme not in ("listype", "type"):
                raise self.error(f"expected 'listype', found {key}", "'listype'")
            if tag.lexeme != "ol":
                raise self.error(f"listype is only valid on tag ol, not {tag.lexeme}", "')'", comma)
            self.pos += 1
            self.expect(TokenKind.SYMBOL, ":")
            value = self.current
            if value.kind is TokenKind.STRING or value.lexeme not in LIST_TYPES:
                raise self.error(
                    f"unknown list type {value} (expected one of {', '.join(LIST_TYPES)})",
                    "a list type",
                )
            list_type = value.lexeme
            self.pos += 1
        elif tag.lexeme == "ol":
            raise self.error("tag ol requires a listype", "','")
        self.expect(TokenKind.SYMBOL, ")")
        return StyleInstruction(name.lexeme, tag.lexeme, list_type, line=start.line, column=start.column)


def parse_stylesheet(tokens: list[Token]) -> list[StyleInstruction]:
    """Parse stylesheet-profile tokens into instructions, in source order."""
    return _Parser(tokens).instructions()


def parse_stylesheet_text(source: str) -> list[StyleInstruction]:
    return parse_stylesheet(tokenize(source, STYLESHEET))
