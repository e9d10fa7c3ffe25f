"""Canonical source rendering; ``parse(pretty(stmts)) == stmts``."""

from __future__ import annotations

from fractions import Fraction

from .nodes import (
    Base,
    Check,
    Dim,
    Div,
    Express,
    Group,
    Ident,
    Literal,
    Mul,
    PiGroups,
    Pow,
    Ratio,
    ScaleDef,
)


def _exponent(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"({q.numerator}/{q.denominator})"


def expr_to_source(node) -> str:
    if isinstance(node, Ident):
        return node.name
    if isinstance(node, Literal):
        return repr(node.value)
    if isinstance(node, Mul):
        return f"{expr_to_source(node.left)} * {expr_to_source(node.right)}"
    if isinstance(node, Div):
        return f"{expr_to_source(node.left)} / {expr_to_source(node.right)}"
    if isinstance(node, Pow):
        return f"{expr_to_source(node.base)}^{_exponent(node.exponent)}"
    if isinstance(node, Group):
        return f"({expr_to_source(node.inner)})"
    raise TypeError(f"not an expression node: {node!r}")


def statement_to_source(stmt) -> str:
    if isinstance(stmt, Base):
        return f"base {stmt.name};"
    if isinstance(stmt, ScaleDef):
        head = "signed scale" if stmt.signed else "scale"
        tail = "" if stmt.coeff is None else f" = {stmt.coeff!r}"
        return f"{head} {stmt.name} : {expr_to_source(stmt.expr)}{tail};"
    if isinstance(stmt, Dim):
        return f"dim {expr_to_source(stmt.expr)};"
    if isinstance(stmt, Check):
        return f"check {expr_to_source(stmt.lhs)} ~ {expr_to_source(stmt.rhs)};"
    if isinstance(stmt, Express):
        return f"express {expr_to_source(stmt.expr)} in ({', '.join(stmt.basis)});"
    if isinstance(stmt, PiGroups):
        return f"pigroups ({', '.join(stmt.names)});"
    if isinstance(stmt, Ratio):
        return f"ratio {expr_to_source(stmt.lhs)}, {expr_to_source(stmt.rhs)};"
    raise TypeError(f"not a statement: {stmt!r}")


def pretty(statements) -> str:
    return "".join(statement_to_source(s) + "\n" for s in statements)
