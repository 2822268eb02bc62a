"""Abstract syntax of the schema dialect and its intrinsic validity rules."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import SemanticError
from .lexer import FACET_KINDS, PRIMITIVE_TYPES


class PrimitiveDataType(str, enum.Enum):
    STRING = "string"
    INTEGER = "integer"
    POSITIVE_INTEGER = "positiveInteger"
    BOOLEAN = "boolean"
    DECIMAL = "decimal"
    DATETIME = "dateTime"


assert tuple(t.value for t in PrimitiveDataType) == PRIMITIVE_TYPES

NUMERIC_FACETS = frozenset(("length", "minLength", "maxLength", "totalDigits", "fractionDigits"))

_ALL_TYPES = frozenset(PrimitiveDataType)
FACET_APPLICABILITY: dict[str, frozenset[PrimitiveDataType]] = {
    "length": _ALL_TYPES,
    "minLength": _ALL_TYPES,
    "maxLength": _ALL_TYPES,
    "pattern": _ALL_TYPES,
    "enumeration": _ALL_TYPES,
    "totalDigits": frozenset(
        (PrimitiveDataType.INTEGER, PrimitiveDataType.POSITIVE_INTEGER, PrimitiveDataType.DECIMAL)
    ),
    "fractionDigits": frozenset((PrimitiveDataType.DECIMAL,)),
}
assert tuple(FACET_APPLICABILITY) == FACET_KINDS


@dataclass(frozen=True)
class Facet:
    kind: str
    value: str

    def __post_init__(self) -> None:
        if self.kind not in FACET_APPLICABILITY:
            raise ValueError(f"unknown facet {self.kind!r}")
        if self.kind in NUMERIC_FACETS and not (self.value.isascii() and self.value.isdigit()):
            raise ValueError(f"facet {self.kind} needs a non-negative integer, got {self.value!r}")

    @property
    def number(self) -> int:
        return int(self.value)


@dataclass(frozen=True)
class Occurrence:
    min: int = 1
    max: int = 1

    def __post_init__(self) -> None:
        if self.min < 0 or self.max < 1 or self.min > self.max:
            raise ValueError(f"invalid occurrence bounds ({self.min}, {self.max})")


# Positions are carried for diagnostics only and excluded from equality.
@dataclass(frozen=True)
class SimpleElement:
    name: str
    datatype: PrimitiveDataType
    default: str | None = None
    fixed: str | None = None
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class DerivedElement:
    name: str
    base: PrimitiveDataType
    facets: tuple[Facet, ...]
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if not self.facets:
            raise ValueError(f"derived element {self.name!r} has no facets")

    @property
    def enumerations(self) -> list[str]:
        return [f.value for f in self.facets if f.kind == "enumeration"]


@dataclass(frozen=True)
class ComplexElement:
    name: str | None
    occurrence: Occurrence = Occurrence()
    children: tuple["ElementDecl", ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


ElementDecl = Union[SimpleElement, DerivedElement, ComplexElement]


@dataclass(frozen=True)
class SchemaDocument:
    roots: tuple[ElementDecl, ...] = ()


def check_facet_applicability(element: DerivedElement) -> None:
    """Raise :class:`SemanticError` on the first facet illegal for the base type."""
    for facet in element.facets:
        if element.base not in FACET_APPLICABILITY[facet.kind]:
            raise SemanticError(
                f"facet {facet.kind} is not applicable to base type "
                f"{element.base.value} on element {element.name}",
                element.line,
                element.column,
                source="schema",
            )


def _walk(elements: tuple[ElementDecl, ...]) -> Iterator[ElementDecl]:
    for element in elements:
        if isinstance(element, ComplexElement):
            if element.name is not None:
                yield element
            yield from _walk(element.children)
        else:
            yield element


def flatten_renderables(doc: SchemaDocument) -> list[ElementDecl]:
    """Every element a stylesheet instruction must address, in document order.

    Anonymous complex elements are transparent: only their children appear.
    """
    return list(_walk(doc.roots))


def renderable_descendants(element: ComplexElement) -> list[ElementDecl]:
    return list(_walk(element.children))


def _attr(name: str, value: str | None) -> str:
    return "" if value is None else f' {name}="{value}"'


def _unparse(element: ElementDecl, depth: int, out: list[str]) -> None:
    pad = "  " * depth
    if isinstance(element, SimpleElement):
        out.append(
            f'{pad}<xs:element name="{element.name}" type="xs:{element.datatype.value}"'
            f"{_attr('default', element.default)}{_attr('fixed', element.fixed)}/>"
        )
    elif isinstance(element, DerivedElement):
        out.append(f'{pad}<xs:element name="{element.name}">')
        out.append(f"{pad}  <xs:simpleType>")
        out.append(f'{pad}    <xs:restriction base="xs:{element.base.value}">')
        for facet in element.facets:
            out.append(f'{pad}      <xs:{facet.kind} value="{facet.value}"/>')
        out.append(f"{pad}    </xs:restriction>")
        out.append(f"{pad}  </xs:simpleType>")
        out.append(f"{pad}</xs:element>")
    else:
        occurs = ""
        if element.occurrence != Occurrence():
            occurs = (
                f' minOccurs="{element.occurrence.min}" maxOccurs="{element.occurrence.max}"'
            )
        out.append(f"{pad}<xs:element{_attr('name', element.name)}>")
        out.append(f"{pad}  <xs:complexType>")
        out.append(f"{pad}    <xs:sequence{occurs}>")
        for child in element.children:
            _unparse(child, depth + 3, out)
        out.append(f"{pad}    </xs:sequence>")
        out.append(f"{pad}  </xs:complexType>")
        out.append(f"{pad}</xs:element>")


def unparse(doc: SchemaDocument) -> str:
    """Print ``doc`` in canonical form (attributes as name, type, default, fixed)."""
    out = ["<xs:schema>"]
    for element in doc.roots:
        _unparse(element, 1, out)
    out.append("</xs:schema>")
    return "\n".join(out) + "\n"
