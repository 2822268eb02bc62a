"""Run the full compile: lex, parse both inputs, bind, generate."""

from __future__ import annotations

from .binder import BindingPlan, bind
from .codegen import assemble_page
from .errors import CompileError
from .lexer import SCHEMA, STYLESHEET, tokenize
from .schema_ast import SchemaDocument
from .schema_parser import parse_schema
from .stylesheet import StyleInstruction, parse_stylesheet


def _tagged(source: str, func, *args):
    try:
        return func(*args)
    except CompileError as exc:
        if exc.source is None:
            exc.source = source
        raise


def load_schema(text: str) -> SchemaDocument:
    tokens = _tagged("schema", tokenize, text, SCHEMA)
    return _tagged("schema", parse_schema, tokens)


def load_stylesheet(text: str) -> list[StyleInstruction]:
    tokens = _tagged("stylesheet", tokenize, text, STYLESHEET)
    return _tagged("stylesheet", parse_stylesheet, tokens)


def plan(schema_text: str, stylesheet_text: str) -> BindingPlan:
    doc = load_schema(schema_text)
    instructions = load_stylesheet(stylesheet_text)
    return bind(doc, instructions)


def compile_page(schema_text: str, stylesheet_text: str) -> str:
    """Compile both input texts into the page text; raises :class:`CompileError`."""
    return assemble_page(plan(schema_text, stylesheet_text))
