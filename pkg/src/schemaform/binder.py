"""Pair style instructions with schema elements and decide where validators go."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BindingError
from .schema_ast import (
    ComplexElement,
    DerivedElement,
    ElementDecl,
    PrimitiveDataType,
    SchemaDocument,
    SimpleElement,
    flatten_renderables,
    renderable_descendants,
)
from .stylesheet import EDITABLE_TAGS, HEADER_TAGS, INPUT_TAGS, LIST_TAGS, StyleInstruction


@dataclass(frozen=True)
class ControlBinding:
    element: ElementDecl
    instruction: StyleInstruction
    validator_needed: bool = False
    children: tuple[ElementDecl, ...] = ()
    # How many copies to render; product of the enclosing maxOccurs bounds.
    repeat: int = 1

    @property
    def name(self) -> str:
        return self.instruction.element_name

    @property
    def tag(self) -> str:
        return self.instruction.tag


@dataclass(frozen=True)
class BindingPlan:
    bindings: tuple[ControlBinding, ...] = ()
    suppressed: tuple[str, ...] = ()
    absorbed: int = 0


def needs_validator(element: ElementDecl, tag: str) -> bool:
    if tag not in EDITABLE_TAGS:
        return False
    if isinstance(element, DerivedElement):
        return True
    return isinstance(element, SimpleElement) and element.datatype is not PrimitiveDataType.STRING


def check_compatibility(element: ElementDecl, instruction: StyleInstruction) -> None:
    """Raise :class:`BindingError` if ``instruction.tag`` cannot render ``element``."""
    tag = instruction.tag
    reason = None
    if tag == "null":
        return
    if tag == "select":
        if not (isinstance(element, DerivedElement) and element.enumerations):
            reason = "select needs a restricted element with enumeration facets"
    elif tag in LIST_TAGS:
        if not isinstance(element, ComplexElement):
            reason = f"{tag} needs a complex-type element"
    elif tag == "a":
        if getattr(element, "fixed", None) is None:
            reason = "an anchor needs a fixed attribute for its target"
    elif tag in HEADER_TAGS or tag == "label":
        if getattr(element, "default", None) is None:
            reason = f"{tag} needs a default attribute for its text"
    elif tag in INPUT_TAGS:
        if isinstance(element, ComplexElement):
            reason = f"{tag} cannot render a complex-type element"
    if reason is not None:
        raise BindingError(
            f"element {instruction.element_name} cannot be rendered as {tag}: {reason}",
            instruction.line,
            instruction.column,
            source="stylesheet",
        )


def _repeat_counts(doc: SchemaDocument) -> dict[int, int]:
    counts: dict[int, int] = {}

    def visit(elements, factor):
        for element in elements:
            counts[id(element)] = factor
            if isinstance(element, ComplexElement):
                visit(element.children, factor * element.occurrence.max)

    visit(doc.roots, 1)
    return counts


def bind(doc: SchemaDocument, instructions: list[StyleInstruction]) -> BindingPlan:
    """Match ``instructions`` one-to-one and in order against the renderable elements.

    Checks run in a fixed order: count, then names, then tag compatibility.
    """
    renderables = flatten_renderables(doc)

    absorbed_by_name = {}
    for element in renderables:
        if isinstance(element, ComplexElement) and element.name not in absorbed_by_name:
            absorbed_by_name[element.name] = len(renderable_descendants(element))
    absorbed = sum(
        absorbed_by_name.get(ins.element_name, 0) for ins in instructions if ins.tag in LIST_TAGS
    )
    expected = len(renderables) - absorbed

    pairs: list[tuple[ElementDecl, StyleInstruction, tuple[ElementDecl, ...]]] = []
    mismatch: tuple[StyleInstruction, ElementDecl] | None = None
    i = 0
    for instruction in instructions:
        if i >= len(renderables):
            break
        element = renderables[i]
        if element.name != instruction.element_name:
            mismatch = (instruction, element)
            break
        children: tuple[ElementDecl, ...] = ()
        i += 1
        if instruction.tag in LIST_TAGS and isinstance(element, ComplexElement):
            children = element.children
            i += len(renderable_descendants(element))
        pairs.append((element, instruction, children))

    if len(instructions) != expected:
        if mismatch is not None:
            at = mismatch[0]
        elif len(pairs) < len(instructions):
            at = instructions[len(pairs)]
        else:
            at = instructions[-1] if instructions else None
        raise BindingError(
            f"count mismatch: {len(instructions)} instructions for {expected} renderable elements",
            at.line if at else 1,
            at.column if at else 1,
            source="stylesheet",
        )
    if mismatch is not None:
        instruction, element = mismatch
        raise BindingError(
            f"name mismatch at position {len(pairs) + 1}: instruction names "
            f"{instruction.element_name} but the schema declares {element.name}",
            instruction.line,
            instruction.column,
            source="stylesheet",
        )

    repeats = _repeat_counts(doc)
    bindings = []
    suppressed = []
    for element, instruction, children in pairs:
        check_compatibility(element, instruction)
        if instruction.tag == "null":
            suppressed.append(instruction.element_name)
            continue
        bindings.append(
            ControlBinding(
                element,
                instruction,
                needs_validator(element, instruction.tag),
                children,
                repeats.get(id(element), 1),
            )
        )
    absorbed = sum(len(renderable_descendants(element)) for element, _, children in pairs if children)
    return BindingPlan(tuple(bindings), tuple(suppressed), absorbed)
