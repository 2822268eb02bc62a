"""Test-side tools that stay independent of the code they check."""

from __future__ import annotations

import re
from datetime import datetime
from html.parser import HTMLParser
from pathlib import Path

DATA = Path(__file__).parent / "data"
VOID = frozenset(("input", "br"))
CONTROL_TAGS = frozenset(("h1", "h2", "h3", "h4", "h5", "h6", "label", "input", "select",
                          "textarea", "a", "ol", "ul"))


def read(name: str) -> str:
    return (DATA / name).read_text(encoding="utf-8")


class PageScan(HTMLParser):
    """Collects the control sequence inside <form> and checks tag balance."""

    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.stack: list[str] = []
        self.errors: list[str] = []
        self.controls: list[dict] = []
        self.script = ""
        self._current: dict | None = None

    def handle_starttag(self, tag, attrs):
        attrs = dict(attrs)
        if tag not in VOID:
            self.stack.append(tag)
        if "form" in self.stack and tag in CONTROL_TAGS:
            item = {"tag": tag, "attrs": attrs, "text": "", "options": []}
            self.controls.append(item)
            if tag not in VOID:
                self._current = item
        if tag in ("option", "li") and self.controls:
            self.controls[-1]["options"].append("")

    def handle_startendtag(self, tag, attrs):
        self.handle_starttag(tag, attrs)
        if tag not in VOID:
            self.handle_endtag(tag)

    def handle_endtag(self, tag):
        if not self.stack or self.stack[-1] != tag:
            self.errors.append(f"unbalanced </{tag}> with open {self.stack}")
            return
        self.stack.pop()
        if self._current is not None and self._current["tag"] == tag:
            self._current = None

    def handle_data(self, data):
        if self.stack and self.stack[-1] == "script":
            self.script += data
        elif self.stack and self.stack[-1] in ("option", "li") and self.controls:
            self.controls[-1]["options"][-1] += data
        elif self._current is not None:
            self._current["text"] += data


def scan(page: str) -> PageScan:
    parser = PageScan()
    parser.feed(page)
    parser.close()
    if parser.stack:
        parser.errors.append(f"unclosed tags {parser.stack}")
    return parser


def control_signature(page: str) -> list[tuple[str, str]]:
    """(tag or input type, name-or-text) for every control in form order."""
    out = []
    for c in scan(page).controls:
        if c["tag"] == "input":
            out.append((c["attrs"].get("type"), c["attrs"].get("name")))
        elif c["tag"] in ("select", "textarea"):
            out.append((c["tag"], c["attrs"].get("name")))
        else:
            out.append((c["tag"], c["text"]))
    return out


def strip_labels(page: str) -> str:
    return re.sub(r"</?label>", "", page)


# -- independent interpreter for validator check lists ---------------------

def _all_digits(text: str) -> bool:
    return text != "" and all(ch in "0123456789" for ch in text)


def _is_int(v: str) -> bool:
    return _all_digits(v[1:] if v[:1] in ("+", "-") else v)


def _passes(kind, param, v: str) -> bool:
    if kind == "length":
        return len(v) == param
    if kind == "minLength":
        return len(v) >= param
    if kind == "maxLength":
        return len(v) <= param
    if kind == "pattern":
        return re.fullmatch(param, v) is not None
    if kind == "enumeration":
        return v in param
    if kind == "totalDigits":
        return sum(ch in "0123456789" for ch in v) <= param
    if kind == "fractionDigits":
        return len(v.split(".")[1]) <= param if "." in v else True
    if kind == "integer":
        return _is_int(v)
    if kind == "positiveInteger":
        return _is_int(v) and int(v) > 0
    if kind == "decimal":
        head, dot, tail = v.partition(".")
        return _is_int(head) and (not dot or _all_digits(tail))
    if kind == "boolean":
        return v in ("true", "false")
    if kind == "dateTime":
        for fmt in ("%m/%d/%Y", "%Y-%m-%d", "%Y-%m-%dT%H:%M:%S"):
            try:
                datetime.strptime(v, fmt)
                return True
            except ValueError:
                pass
        return False
    raise AssertionError(f"unknown check {kind}")


def run_checks(checks, value: str) -> str:
    """Simulate the generated routine: return the control value after blur."""
    if all(_passes(kind, param, value) for kind, param in checks):
        return value
    return "Bad Input"
