"""Compile a schema dialect plus a style sheet into an HTML form page."""

from .binder import BindingPlan, ControlBinding, bind, check_compatibility
from .codegen import HtmlFragment, HtmlPage, ScriptRoutine, assemble_page, build_page
from .errors import BindingError, CompileError, LexicalError, ParseError, SemanticError
from .lexer import SCHEMA, STYLESHEET, Token, TokenKind, tokenize
from .pipeline import compile_page
from .schema_ast import SchemaDocument, flatten_renderables
from .schema_parser import parse_schema
from .stylesheet import StyleInstruction, parse_stylesheet

__all__ = [
    "BindingError",
    "BindingPlan",
    "CompileError",
    "ControlBinding",
    "HtmlFragment",
    "HtmlPage",
    "LexicalError",
    "ParseError",
    "SCHEMA",
    "STYLESHEET",
    "ScriptRoutine",
    "SchemaDocument",
    "SemanticError",
    "StyleInstruction",
    "Token",
    "TokenKind",
    "assemble_page",
    "bind",
    "build_page",
    "check_compatibility",
    "compile_page",
    "flatten_renderables",
    "parse_schema",
    "parse_stylesheet",
    "tokenize",
]
