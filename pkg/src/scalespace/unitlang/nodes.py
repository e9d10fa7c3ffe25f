"""Syntax tree of the unit language.

Every node carries its source position in ``pos`` (line, column).  Positions
are excluded from equality so a pretty-printed and reparsed program compares
equal to the original.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

Pos = tuple[int, int]


def _pos():
    return field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Ident:
    name: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class Literal:
    value: float
    pos: Pos = _pos()


@dataclass(frozen=True)
class Mul:
    left: Expr
    right: Expr
    pos: Pos = _pos()


@dataclass(frozen=True)
class Div:
    left: Expr
    right: Expr
    pos: Pos = _pos()


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: Fraction
    pos: Pos = _pos()


@dataclass(frozen=True)
class Group:
    inner: Expr
    pos: Pos = _pos()


Expr = Union[Ident, Literal, Mul, Div, Pow, Group]


@dataclass(frozen=True)
class Base:
    name: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class ScaleDef:
    name: str
    signed: bool
    expr: Expr
    coeff: float | None = None
    pos: Pos = _pos()


@dataclass(frozen=True)
class Dim:
    expr: Expr
    pos: Pos = _pos()


@dataclass(frozen=True)
class Check:
    lhs: Expr
    rhs: Expr
    pos: Pos = _pos()


@dataclass(frozen=True)
class Express:
    expr: Expr
    basis: tuple[str, str, str]
    pos: Pos = _pos()
    basis_pos: tuple[Pos, ...] = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class PiGroups:
    names: tuple[str, ...]
    pos: Pos = _pos()
    names_pos: tuple[Pos, ...] = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class Ratio:
    lhs: Expr
    rhs: Expr
    pos: Pos = _pos()


Statement = Union[Base, ScaleDef, Dim, Check, Express, PiGroups, Ratio]

DEFINITIONS = (Base, ScaleDef)
QUERIES = (Dim, Check, Express, PiGroups, Ratio)
