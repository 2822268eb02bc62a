"""Table-driven lexer shared by the schema and stylesheet languages."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import LexicalError

WHITESPACE = frozenset(" \t\r\n")
LETTERS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ")
DIGITS = frozenset("0123456789")
WORD_CHARS = LETTERS | DIGITS

PRIMITIVE_TYPES = ("string", "integer", "positiveInteger", "boolean", "decimal", "dateTime")
FACET_KINDS = (
    "length",
    "minLength",
    "maxLength",
    "pattern",
    "enumeration",
    "totalDigits",
    "fractionDigits",
)
TAG_NAMES = (
    "h1", "h2", "h3", "h4", "h5", "h6",
    "ol", "ul", "a", "label",
    "text", "password", "checkbox", "radio", "submit", "textarea", "select",
    "null",
)


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    SYMBOL = "symbol"
    IDENTIFIER = "identifier"
    NUMBER = "numerical-value"
    STRING = "string-value"
    EOF = "end-of-input"


@dataclass(frozen=True)
class LanguageProfile:
    name: str
    keywords: frozenset[str]
    symbols: frozenset[str]

    def __post_init__(self) -> None:
        if self.keywords & self.symbols:
            raise ValueError(f"profile {self.name!r}: keywords overlap symbols")


SCHEMA = LanguageProfile(
    name="schema",
    keywords=frozenset(
        (
            "schema", "xs", "element", "name", "type", "fixed", "default",
            "complexType", "simpleType", "sequence", "minOccurs", "maxOccurs",
            "base", "restriction", "value",
        )
        + PRIMITIVE_TYPES
        + FACET_KINDS
    ),
    symbols=frozenset(("<", ">", "</", "/>", ":", "=", "/", "+", "-")),
)

STYLESHEET = LanguageProfile(
    name="stylesheet",
    keywords=frozenset(("element", "tag", "type", "listype") + TAG_NAMES),
    symbols=frozenset((":", "(", ")", ",")),
)

PROFILES = {SCHEMA.name: SCHEMA, STYLESHEET.name: STYLESHEET}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    line: int
    column: int

    def __str__(self) -> str:
        if self.kind is TokenKind.EOF:
            return "end of input"
        if self.kind is TokenKind.STRING:
            return f'"{self.lexeme}"'
        return repr(self.lexeme)


class _Cursor:
    __slots__ = ("source", "pos", "line", "column")

    def __init__(self, source: str) -> None:
        self.source = source
        self.pos = 0
        self.line = 1
        self.column = 1

    def peek(self, ahead: int = 0) -> str:
        i = self.pos + ahead
        return self.source[i] if i < len(self.source) else ""

    def advance(self, count: int = 1) -> str:
        start = self.pos
        for _ in range(count):
            ch = self.source[self.pos]
            self.pos += 1
            if ch == "\n":
                self.line += 1
                self.column = 1
            else:
                self.column += 1
        return self.source[start : self.pos]


def _scan_string(cursor: _Cursor) -> Token:
    line, column = cursor.line, cursor.column
    cursor.advance()
    end = cursor.source.find('"', cursor.pos)
    if end < 0:
        raise LexicalError("unterminated string", line, column)
    lexeme = cursor.advance(end - cursor.pos)
    cursor.advance()
    return Token(TokenKind.STRING, lexeme, line, column)


def scan_quoted_string(source: str, start: int = 0) -> tuple[Token, int]:
    """Scan the double-quoted literal opening at offset ``start``.

    The lexeme is every character up to the next ``"``; there is no escape
    mechanism. Returns the token and the offset just past the closing quote.
    """
    if source[start : start + 1] != '"':
        raise ValueError(f"no opening quote at offset {start}")
    cursor = _Cursor(source)
    cursor.line = source.count("\n", 0, start) + 1
    cursor.column = start - (source.rfind("\n", 0, start) + 1) + 1
    cursor.pos = start
    token = _scan_string(cursor)
    return token, cursor.pos


def _is_digit(ch: str) -> bool:
    return ch in DIGITS


def _scan_number(cursor: _Cursor) -> str:
    length = 1 if cursor.peek() in ("+", "-") else 0
    while _is_digit(cursor.peek(length)):
        length += 1
    if cursor.peek(length) == "." and _is_digit(cursor.peek(length + 1)):
        length += 1
        while _is_digit(cursor.peek(length)):
            length += 1
    return cursor.advance(length)


def tokenize(source: str, profile: LanguageProfile | str) -> list[Token]:
    """Split ``source`` into tokens for ``profile``, ending with one EOF token."""
    if isinstance(profile, str):
        profile = PROFILES[profile]
    cursor = _Cursor(source)
    tokens: list[Token] = []
    # Longest symbols first so that "</" wins over "<".
    symbols = sorted(profile.symbols, key=len, reverse=True)

    while cursor.pos < len(source):
        ch = cursor.peek()
        if ch in WHITESPACE:
            cursor.advance()
            continue
        line, column = cursor.line, cursor.column
        if ch == '"':
            tokens.append(_scan_string(cursor))
        elif ch in LETTERS:
            length = 1
            while cursor.peek(length) in WORD_CHARS:
                length += 1
            word = cursor.advance(length)
            kind = TokenKind.KEYWORD if word in profile.keywords else TokenKind.IDENTIFIER
            tokens.append(Token(kind, word, line, column))
        elif _is_digit(ch) or (ch in ("+", "-") and _is_digit(cursor.peek(1))):
            tokens.append(Token(TokenKind.NUMBER, _scan_number(cursor), line, column))
        else:
            for symbol in symbols:
                if source.startswith(symbol, cursor.pos):
                    tokens.append(Token(TokenKind.SYMBOL, cursor.advance(len(symbol)), line, column))
                    break
            else:
                raise LexicalError(f"unexpected character {ch!r}", line, column)

    tokens.append(Token(TokenKind.EOF, "", cursor.line, cursor.column))
    return tokens
