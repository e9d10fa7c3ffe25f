"""Recursive-descent parser for the unit language.

Grammar::

    program   := statement* ;
    statement := "base" IDENT ";"
               | ["signed"] "scale" IDENT ":" expr ["=" NUMBER] ";"
               | "dim" expr ";"
               | "check" expr "~" expr ";"
               | "express" expr "in" "(" IDENT "," IDENT "," IDENT ")" ";"
               | "pigroups" "(" IDENT ("," IDENT)* ")" ";"
               | "ratio" expr "," expr ";" ;
    expr      := term (("*" | "/") term)* ;
    term      := factor ["^" rational] ;
    factor    := IDENT | NUMBER | "(" expr ")" ;
    rational  := ["-"] INT | "(" ["-"] INT "/" INT ")" ;
"""

from __future__ import annotations

import math
from fractions import Fraction

from .lexer import Token, TokenKind, tokenize
from .nodes import (
    Base,
    Check,
    Dim,
    Div,
    Express,
    Expr,
    Group,
    Ident,
    Literal,
    Mul,
    PiGroups,
    Pow,
    Ratio,
    ScaleDef,
    Statement,
)

K = TokenKind


class ParseError(Exception):
    code = "ParseError"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


def _number(tok: Token) -> float:
    value = float(tok.text)
    if not math.isfinite(value):
        raise ParseError(f"number {tok.text} is out of range", tok.line, tok.column)
    return value


def _describe(tok: Token) -> str:
    if tok.kind is K.EOF:
        return "end of input"
    return f"{tok.text!r}"


class Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind is not K.EOF:
            self.i += 1
        return tok

    def error(self, expected: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(f"expected {expected}, found {_describe(tok)}", tok.line, tok.column)

    def at(self, kind: TokenKind, text: str | None = None) -> bool:
        return self.tok.kind is kind and (text is None or self.tok.text == text)

    def expect(self, kind: TokenKind, what: str, text: str | None = None) -> Token:
        if not self.at(kind, text):
            raise self.error(what)
        return self.advance()

    def keyword(self, word: str) -> Token:
        return self.expect(K.KEYWORD, f"'{word}'", word)

    # statements

    def program(self) -> list[Statement]:
        out = []
        while not self.at(K.EOF):
            out.append(self.statement())
        return out

    def statement(self) -> Statement:
        tok = self.tok
        if tok.kind is not K.KEYWORD or tok.text == "in":
            raise self.error("a statement keyword")
        pos = (tok.line, tok.column)
        word = tok.text
        if word == "base":
            self.advance()
            name = self.expect(K.IDENT, "a base-space name").text
            stmt = Base(name, pos)
        elif word in ("signed", "scale"):
            signed = word == "signed"
            if signed:
                self.advance()
            self.keyword("scale")
            name = self.expect(K.IDENT, "a scale name").text
            self.expect(K.COLON, "':'")
            expr = self.expr()
            coeff = None
            if self.at(K.EQUALS):
                self.advance()
                coeff = _number(self.expect(K.NUM, "a number"))
            stmt = ScaleDef(name, signed, expr, coeff, pos)
        elif word == "dim":
            self.advance()
            stmt = Dim(self.expr(), pos)
        elif word == "check":
            self.advance()
            lhs = self.expr()
            self.expect(K.TILDE, "'~'")
            stmt = Check(lhs, self.expr(), pos)
        elif word == "express":
            self.advance()
            expr = self.expr()
            self.keyword("in")
            names, where = self.name_list()
            if len(names) != 3:
                raise ParseError(
                    f"a scale basis needs exactly 3 names, got {len(names)}", *pos
                )
            stmt = Express(expr, tuple(names), pos, tuple(where))
        elif word == "pigroups":
            self.advance()
            names, where = self.name_list()
            stmt = PiGroups(tuple(names), pos, tuple(where))
        elif word == "ratio":
            self.advance()
            lhs = self.expr()
            self.expect(K.COMMA, "','")
            stmt = Ratio(lhs, self.expr(), pos)
        else:  # pragma: no cover - every keyword is handled above
            raise self.error("a statement keyword")
        self.expect(K.SEMI, "';'")
        return stmt

    def name_list(self) -> tuple[list[str], list[tuple[int, int]]]:
        self.expect(K.LPAREN, "'('")
        names, where = [], []
        while True:
            tok = self.expect(K.IDENT, "a name")
            names.append(tok.text)
            where.append((tok.line, tok.column))
            if not self.at(K.COMMA):
                break
            self.advance()
        self.expect(K.RPAREN, "')'")
        return names, where

    # expressions

    def expr(self) -> Expr:
        node = self.term()
        while self.at(K.STAR) or self.at(K.SLASH):
            op = self.advance()
            right = self.term()
            cls = Mul if op.kind is K.STAR else Div
            node = cls(node, right, (op.line, op.column))
        return node

    def term(self) -> Expr:
        node = self.factor()
        if self.at(K.CARET):
            caret = self.advance()
            node = Pow(node, self.rational(), (caret.line, caret.column))
        return node

    def factor(self) -> Expr:
        tok = self.tok
        pos = (tok.line, tok.column)
        if tok.kind is K.IDENT:
            self.advance()
            return Ident(tok.text, pos)
        if tok.kind is K.NUM:
            self.advance()
            value = _number(tok)
            if not value > 0:
                raise ParseError("numeric literals must be positive", *pos)
            return Literal(value, pos)
        if tok.kind is K.LPAREN:
            self.advance()
            inner = self.expr()
            self.expect(K.RPAREN, "')'")
            return Group(inner, pos)
        raise self.error("an expression")

    def rational(self) -> Fraction:
        if self.at(K.NUM):
            tok = self.advance()
            if not tok.is_int:
                raise self.error("an integer exponent", tok)
            return Fraction(int(tok.text))
        if self.at(K.LPAREN):
            self.advance()
            num = self.expect(K.NUM, "an integer numerator")
            if not num.is_int:
                raise self.error("an integer numerator", num)
            self.expect(K.SLASH, "'/'")
            den = self.expect(K.NUM, "a positive integer denominator")
            if not den.is_int or int(den.text) <= 0:
                raise self.error("a positive integer denominator", den)
            self.expect(K.RPAREN, "')'")
            return Fraction(int(num.text), int(den.text))
        raise self.error("an exponent")


def parse(tokens_or_text) -> list[Statement]:
    tokens = tokenize(tokens_or_text) if isinstance(tokens_or_text, str) else tokens_or_text
    return Parser(tokens).program()


def parse_expression(text: str) -> Expr:
    """Parse a lone expression (no trailing ``;``)."""
    p = Parser(tokenize(text))
    node = p.expr()
    if not p.at(K.EOF):
        raise p.error("end of expression")
    return node


def parse_names(text: str) -> list[str]:
    """Parse a comma-separated name list like ``m,hbar,G``."""
    p = Parser(tokenize(text))
    names = []
    while True:
        names.append(p.expect(K.IDENT, "a name").text)
        if p.at(K.EOF):
            return names
        p.expect(K.COMMA, "','")
