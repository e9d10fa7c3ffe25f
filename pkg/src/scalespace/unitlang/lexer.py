"""Tokenizer for ``.units`` source."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

KEYWORDS = frozenset(
    {"base", "scale", "signed", "dim", "check", "express", "in", "pigroups", "ratio"}
)


class TokenKind(str, Enum):
    IDENT = "Ident"
    KEYWORD = "Keyword"
    NUM = "Num"
    STAR = "Star"
    SLASH = "Slash"
    CARET = "Caret"
    LPAREN = "LParen"
    RPAREN = "RParen"
    COMMA = "Comma"
    TILDE = "Tilde"
    COLON = "Colon"
    SEMI = "Semi"
    EQUALS = "Equals"
    EOF = "EOF"


_PUNCT = {
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
    "~": TokenKind.TILDE,
    ":": TokenKind.COLON,
    ";": TokenKind.SEMI,
    "=": TokenKind.EQUALS,
}

_NUMBER = re.compile(r"-?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class LexError(Exception):
    code = "LexError"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    @property
    def is_int(self) -> bool:
        return self.kind is TokenKind.NUM and re.fullmatch(r"-?\d+", self.text) is not None

    @property
    def value(self):
        """Exact Fraction for integer literals, float otherwise."""
        if self.is_int:
            return Fraction(int(self.text))
        return float(self.text)

    def __repr__(self):
        if self.kind in (TokenKind.IDENT, TokenKind.NUM, TokenKind.KEYWORD):
            return f"{self.kind.value} {self.text}"
        return self.kind.value


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens; ``#`` starts a comment running to end of line.

    A ``-`` is only legal as the sign of a number written right after it.
    """
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line, col = line + 1, 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        m = _NUMBER.match(text, i)
        if m:
            end = m.end()
            if end < n and (text[end].isalpha() or text[end] == "_"):
                raise LexError(f"malformed number {text[i:end + 1]!r}", line, col)
            tokens.append(Token(TokenKind.NUM, m.group(), line, col))
        elif ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            end = i + 1
        elif (m := _IDENT.match(text, i)) is not None:
            word = m.group()
            kind = TokenKind.KEYWORD if word in KEYWORDS else TokenKind.IDENT
            tokens.append(Token(kind, word, line, col))
            end = m.end()
        else:
            raise LexError(f"illegal character {ch!r}", line, col)
        col += end - i
        i = end
    tokens.append(Token(TokenKind.EOF, "", line, col))
    return tokens
