"""Render a binding plan as an HTML form page with embedded check routines."""

from __future__ import annotations

import html
import json
from dataclasses import dataclass
from typing import Union

from .binder import BindingPlan, ControlBinding
from .schema_ast import DerivedElement, PrimitiveDataType, SimpleElement
from .stylesheet import HEADER_TAGS

BAD_INPUT = "Bad Input"
TEXTAREA_ROWS = 5
TEXTAREA_COLS = 30

CheckParam = Union[None, int, str, tuple]


@dataclass(frozen=True)
class HtmlFragment:
    text: str
    kind: str  # header, label, input, select, textarea, anchor, list, submit


@dataclass(frozen=True)
class ScriptRoutine:
    function_name: str
    target: str
    checks: tuple[tuple[str, CheckParam], ...]

    @property
    def text(self) -> str:
        condition = " || ".join(_js_failure(kind, param) for kind, param in self.checks)
        return (
            f"function {self.function_name}(object_var)\n"
            "{\n"
            f"if ({condition})\n"
            f"object_var.value = {_js_string(BAD_INPUT)};\n"
            "}"
        )


@dataclass(frozen=True)
class HtmlPage:
    routines: tuple[ScriptRoutine, ...]
    fragments: tuple[HtmlFragment, ...]

    @property
    def text(self) -> str:
        script = ""
        if self.routines:
            script = "\n" + "\n".join(r.text for r in self.routines) + "\n"
        body = ""
        if self.fragments:
            parts = []
            for i, fragment in enumerate(self.fragments):
                parts.append(fragment.text)
                if i + 1 < len(self.fragments):
                    # A header or label shares its row with what follows.
                    parts.append("\n" if fragment.kind in ("header", "label") else "\n<br>\n")
            body = "\n" + "".join(parts) + "\n"
        return (
            f'<html><head><script type="text/javascript">{script}</script></head>'
            f"<body><form>{body}</form></body></html>"
        )


def _js_string(value: str) -> str:
    return json.dumps(value).replace("</", "<\\/")


_VALUE = "object_var.value"
_INTEGER_RE = r"/^[+-]?[0-9]+$/"
_TYPE_FAILURES = {
    "integer": f"!{_INTEGER_RE}.test({_VALUE})",
    "positiveInteger": f"!{_INTEGER_RE}.test({_VALUE}) || Number({_VALUE}) <= 0",
    "decimal": rf"!/^[+-]?[0-9]+(\.[0-9]+)?$/.test({_VALUE})",
    "boolean": f'({_VALUE} != "true" && {_VALUE} != "false")',
    "dateTime": f"isNaN(Date.parse({_VALUE}))",
}


def _js_failure(kind: str, param: CheckParam) -> str:
    """JavaScript expression that is true when the check rejects the value."""
    if kind in _TYPE_FAILURES:
        return _TYPE_FAILURES[kind]
    if kind == "length":
        return f"{_VALUE}.length != {param}"
    if kind == "minLength":
        return f"{_VALUE}.length < {param}"
    if kind == "maxLength":
        return f"{_VALUE}.length > {param}"
    if kind == "pattern":
        return f"!new RegExp({_js_string('^(?:' + param + ')$')}).test({_VALUE})"
    if kind == "enumeration":
        options = ", ".join(_js_string(v) for v in param)
        return f"[{options}].indexOf({_VALUE}) < 0"
    if kind == "totalDigits":
        return f'{_VALUE}.replace(/[^0-9]/g, "").length > {param}'
    if kind == "fractionDigits":
        return f'({_VALUE}.split(".")[1] || "").length > {param}'
    raise ValueError(f"unknown check {kind!r}")


def validator_checks(element) -> tuple[tuple[str, CheckParam], ...]:
    """Type check first (skipped for strings), then one check per facet in order.

    All enumeration facets collapse into a single membership check at the
    position of the first one.
    """
    base = element.datatype if isinstance(element, SimpleElement) else element.base
    checks: list[tuple[str, CheckParam]] = []
    if base is not PrimitiveDataType.STRING:
        checks.append((base.value, None))
    if isinstance(element, DerivedElement):
        enumerations = tuple(element.enumerations)
        for facet in element.facets:
            if facet.kind == "enumeration":
                if enumerations:
                    checks.append(("enumeration", enumerations))
                    enumerations = ()
            elif facet.kind == "pattern":
                checks.append(("pattern", facet.value))
            else:
                checks.append((facet.kind, facet.number))
    return tuple(checks)


def generate_validator(binding: ControlBinding) -> ScriptRoutine:
    return ScriptRoutine(
        function_name=f"validate_{binding.name}",
        target=binding.name,
        checks=validator_checks(binding.element),
    )


def _esc(value: str) -> str:
    return html.escape(value, quote=True)


def _visible_text(element) -> str:
    default = getattr(element, "default", None)
    if default is None:
        default = getattr(element, "fixed", None)
    return default or ""


def render_control(binding: ControlBinding, name: str | None = None) -> HtmlFragment:
    """Render one bound element; ``name`` overrides the control name for repeated copies."""
    tag = binding.tag
    element = binding.element
    name = _esc(name or binding.name)
    default = getattr(element, "default", None)
    onblur = f' onBlur="validate_{binding.name}(this)"' if binding.validator_needed else ""

    if tag in HEADER_TAGS:
        return HtmlFragment(f"<{tag}>{_esc(default)}</{tag}>", "header")
    if tag == "label":
        return HtmlFragment(f"<label>{_esc(default)}</label>", "label")
    if tag == "a":
        return HtmlFragment(
            f'<a href="{_esc(element.fixed)}">{_esc(_visible_text(element))}</a>', "anchor"
        )
    if tag == "textarea":
        return HtmlFragment(
            f'<textarea name="{name}" rows="{TEXTAREA_ROWS}" cols="{TEXTAREA_COLS}"{onblur}>'
            f"{_esc(default or '')}</textarea>",
            "textarea",
        )
    if tag == "select":
        options = "".join(f"<option>{_esc(v)}</option>\n" for v in element.enumerations)
        return HtmlFragment(f'<select name="{name}"{onblur}>\n{options}</select>', "select")
    if tag in ("ol", "ul"):
        items = "".join(f"<li>{_esc(_visible_text(child))}</li>\n" for child in binding.children)
        opening = f'<ol type="{binding.instruction.list_type}">' if tag == "ol" else "<ul>"
        return HtmlFragment(f"{opening}\n{items}</{tag}>", "list")
    if tag in ("text", "password", "checkbox", "radio", "submit"):
        value = "" if default is None else f' value="{_esc(default)}"'
        kind = "submit" if tag == "submit" else "input"
        return HtmlFragment(f'<input name="{name}" type="{tag}"{value}{onblur}/>', kind)
    raise ValueError(f"tag {tag!r} does not render")


def build_page(plan: BindingPlan) -> HtmlPage:
    routines = []
    fragments = []
    for binding in plan.bindings:
        if binding.validator_needed:
            routines.append(generate_validator(binding))
        if binding.repeat == 1:
            fragments.append(render_control(binding))
        else:
            for copy in range(1, binding.repeat + 1):
                fragments.append(render_control(binding, f"{binding.name}-{copy}"))
    return HtmlPage(tuple(routines), tuple(fragments))


def assemble_page(plan: BindingPlan) -> str:
    """Complete, deterministic page text for ``plan``."""
    return build_page(plan).text
