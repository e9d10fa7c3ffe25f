"""A small language for scale definitions and dimensional queries."""

from .evaluator import Diagnostic, Evaluator, Result, Severity, evaluate
from .lexer import LexError, Token, TokenKind, tokenize
from .loader import DefinitionsError, load_definitions
from .parser import ParseError, parse, parse_expression
from .printer import expr_to_source, pretty, statement_to_source

__all__ = [
    "Diagnostic", "Evaluator", "Result", "Severity", "evaluate",
    "LexError", "Token", "TokenKind", "tokenize",
    "DefinitionsError", "load_definitions",
    "ParseError", "parse", "parse_expression",
    "expr_to_source", "pretty", "statement_to_source",
]
