"""Recursive-descent parser for the schema dialect.

Grammar implemented (one-token lookahead picks every alternative)::

    Schema        -> "<" xs ":" schema ">" Elements "</" xs ":" schema ">"
    Elements      -> Element Elements | epsilon
    Element       -> "<" xs ":" element Attributes ( "/>" | ">" Body "</" xs ":" element ">" )
    Body          -> Derived | Complex
    Derived       -> <xs:simpleType> <xs:restriction base="xs:T"> Facets </xs:restriction> </xs:simpleType>
    Facets        -> "<" xs ":" FACET value="..." "/>" Facets | epsilon
    Complex       -> <xs:complexType> <xs:sequence [minOccurs=".."] [maxOccurs=".."]> Elements
                     </xs:sequence> </xs:complexType>
"""

from __future__ import annotations

import re

from .errors import ParseError, SemanticError
from .lexer import FACET_KINDS, SCHEMA, Token, TokenKind, tokenize
from .schema_ast import (
    ComplexElement,
    DerivedElement,
    ElementDecl,
    Facet,
    Occurrence,
    PrimitiveDataType,
    SchemaDocument,
    SimpleElement,
    check_facet_applicability,
)

IDENTIFIER_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")
_TYPE_NAMES = ", ".join(f"xs:{t.value}" for t in PrimitiveDataType)


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        if not tokens or tokens[-1].kind is not TokenKind.EOF:
            raise ValueError("token sequence must end with an end-of-input token")
        self.tokens = tokens
        self.pos = 0

    # -- token plumbing -------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, ahead: int = 1) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def _fail(self, expected: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(
            f"expected {expected}, found {token}", found=token, expected=expected, source="schema"
        )

    def expect(self, kind: TokenKind, lexeme: str | None = None) -> Token:
        token = self.current
        if token.kind is not kind or (lexeme is not None and token.lexeme != lexeme):
            raise self._fail(repr(lexeme) if lexeme is not None else kind.value)
        self.pos += 1
        return token

    def symbol(self, lexeme: str) -> Token:
        return self.expect(TokenKind.SYMBOL, lexeme)

    def keyword(self, lexeme: str) -> Token:
        return self.expect(TokenKind.KEYWORD, lexeme)

    def at_symbol(self, lexeme: str) -> bool:
        return self.current.kind is TokenKind.SYMBOL and self.current.lexeme == lexeme

    def qualified(self, word: str) -> None:
        self.keyword("xs")
        self.symbol(":")
        self.keyword(word)

    def open_tag(self, word: str) -> Token:
        start = self.symbol("<")
        self.qualified(word)
        return start

    def close_tag(self, word: str) -> None:
        self.symbol("</")
        self.qualified(word)
        self.symbol(">")

    def attributes(self, allowed: tuple[str, ...]) -> dict[str, Token]:
        """Parse ``key="value"`` pairs in any order until a tag delimiter."""
        found: dict[str, Token] = {}
        while self.current.kind is TokenKind.KEYWORD and self.current.lexeme in allowed:
            key = self.current
            self.pos += 1
            if key.lexeme in found:
                raise ParseError(
                    f"duplicate attribute {key.lexeme}", found=key, expected="attribute", source="schema"
                )
            self.symbol("=")
            found[key.lexeme] = self.expect(TokenKind.STRING)
        if self.current.kind is TokenKind.KEYWORD:
            raise self._fail(f"one of {', '.join(allowed)} or end of tag")
        return found

    # -- value checks ---------------------------------------------------

    def name_value(self, token: Token) -> str:
        if not IDENTIFIER_RE.match(token.lexeme):
            raise ParseError(
                f"element name {token} is not an identifier",
                found=token,
                expected="identifier",
                source="schema",
            )
        return token.lexeme

    def type_value(self, token: Token) -> PrimitiveDataType:
        prefix, _, local = token.lexeme.partition(":")
        if prefix == "xs" and local in PrimitiveDataType._value2member_map_:
            return PrimitiveDataType(local)
        raise ParseError(
            f"{token} is not a primitive data type (expected one of {_TYPE_NAMES})",
            found=token,
            expected=_TYPE_NAMES,
            source="schema",
        )

    def occurs_value(self, token: Token) -> int:
        if not (token.lexeme.isascii() and token.lexeme.isdigit()):
            raise SemanticError(
                f"occurrence bound {token} is not a non-negative integer",
                token.line,
                token.column,
                source="schema",
            )
        return int(token.lexeme)

    # -- productions ----------------------------------------------------

    def schema(self) -> SchemaDocument:
        self.open_tag("schema")
        self.symbol(">")
        roots = self.elements()
        self.close_tag("schema")
        self.expect(TokenKind.EOF)
        return SchemaDocument(tuple(roots))

    def elements(self) -> list[ElementDecl]:
        items = []
        while self.at_symbol("<"):
            items.append(self.element())
        return items

    def element(self) -> ElementDecl:
        start = self.open_tag("element")
        attrs = self.attributes(("name", "type", "default", "fixed"))
        if self.at_symbol("/>"):
            self.pos += 1
            return self.simple(start, attrs)
        self.symbol(">")
        if not self.at_symbol("<") or self.peek(3).kind is not TokenKind.KEYWORD:
            raise self._fail("<xs:simpleType> or <xs:complexType>")
        body = self.peek(3).lexeme
        if body == "simpleType":
            element = self.derived(start, attrs)
        elif body == "complexType":
            element = self.complex(start, attrs)
        else:
            raise self._fail("simpleType or complexType", self.peek(3))
        self.close_tag("element")
        return element

    def _only(self, attrs: dict[str, Token], allowed: tuple[str, ...], what: str) -> None:
        for key, token in attrs.items():
            if key not in allowed:
                raise ParseError(
                    f"attribute {key} is not allowed on a {what} element",
                    found=token,
                    expected=", ".join(allowed) or "no attributes",
                    source="schema",
                )

    def simple(self, start: Token, attrs: dict[str, Token]) -> SimpleElement:
        for required in ("name", "type"):
            if required not in attrs:
                raise ParseError(
                    f"simple element is missing its {required} attribute",
                    found=self.tokens[self.pos - 1],
                    expected=f'{required}="..."',
                    source="schema",
                )
        return SimpleElement(
            name=self.name_value(attrs["name"]),
            datatype=self.type_value(attrs["type"]),
            default=attrs["default"].lexeme if "default" in attrs else None,
            fixed=attrs["fixed"].lexeme if "fixed" in attrs else None,
            line=start.line,
            column=start.column,
        )

    def derived(self, start: Token, attrs: dict[str, Token]) -> DerivedElement:
        self._only(attrs, ("name",), "derived")
        if "name" not in attrs:
            raise self._fail('name="..." on the derived element', start)
        name = self.name_value(attrs["name"])
        self.open_tag("simpleType")
        self.symbol(">")
        self.open_tag("restriction")
        base_attrs = self.attributes(("base",))
        if "base" not in base_attrs:
            raise self._fail('base="..."')
        base = self.type_value(base_attrs["base"])
        self.symbol(">")
        facets = self.facets()
        self.close_tag("restriction")
        self.close_tag("simpleType")
        if not facets:
            raise SemanticError(
                f"derived element {name} declares no facets", start.line, start.column, source="schema"
            )
        element = DerivedElement(name, base, tuple(facets), line=start.line, column=start.column)
        check_facet_applicability(element)
        return element

    def facets(self) -> list[Facet]:
        facets: list[Facet] = []
        seen: set[str] = set()
        while self.at_symbol("<"):
            self.symbol("<")
            self.keyword("xs")
            self.symbol(":")
            kind = self.current
            if kind.kind is not TokenKind.KEYWORD or kind.lexeme not in FACET_KINDS:
                raise self._fail("a facet name")
            self.pos += 1
            attrs = self.attributes(("value",))
            if "value" not in attrs:
                raise self._fail('value="..."')
            self.symbol("/>")
            if kind.lexeme in seen and kind.lexeme != "enumeration":
                raise SemanticError(
                    f"facet {kind.lexeme} appears more than once", kind.line, kind.column, source="schema"
                )
            seen.add(kind.lexeme)
            try:
                facets.append(Facet(kind.lexeme, attrs["value"].lexeme))
            except ValueError as exc:
                token = attrs["value"]
                raise SemanticError(str(exc), token.line, token.column, source="schema") from None
        return facets

    def complex(self, start: Token, attrs: dict[str, Token]) -> ComplexElement:
        self._only(attrs, ("name",), "complex")
        name = self.name_value(attrs["name"]) if "name" in attrs else None
        self.open_tag("complexType")
        self.symbol(">")
        self.open_tag("sequence")
        bounds = self.attributes(("minOccurs", "maxOccurs"))
        low = self.occurs_value(bounds["minOccurs"]) if "minOccurs" in bounds else 1
        high = self.occurs_value(bounds["maxOccurs"]) if "maxOccurs" in bounds else 1
        try:
            occurrence = Occurrence(low, high)
        except ValueError as exc:
            raise SemanticError(str(exc), start.line, start.column, source="schema") from None
        self.symbol(">")
        children = self.elements()
        self.close_tag("sequence")
        self.close_tag("complexType")
        return ComplexElement(name, occurrence, tuple(children), line=start.line, column=start.column)


def parse_schema(tokens: list[Token]) -> SchemaDocument:
    """Parse a schema-profile token sequence into a :class:`SchemaDocument`."""
    return _Parser(tokens).schema()


def parse_element(tokens: list[Token], cursor: int = 0) -> tuple[ElementDecl, int]:
    """Parse one ``<xs:element>`` starting at ``cursor``; return it and the new cursor."""
    parser = _Parser(tokens)
    parser.pos = cursor
    element = parser.element()
    return element, parser.pos


def parse_schema_text(source: str) -> SchemaDocument:
    return parse_schema(tokenize(source, SCHEMA))
