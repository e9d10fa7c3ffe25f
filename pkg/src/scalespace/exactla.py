"""Exact rational arithmetic and small dense linear algebra over Q.

``Rational`` is :class:`fractions.Fraction`: unbounded integer parts, always
stored in lowest terms with a positive denominator, so structural equality is
value equality.  Matrices here are tiny (3 x n at most in practice), so every
routine is plain Gaussian elimination without pivot-size heuristics.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZero, ShapeMismatch, SingularMatrix

Rational = Fraction

REL_TOL = 1e-12

_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Rational.

    Floats are rejected: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot make a Rational from {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if q == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    a, b = rat(a), rat(b)
    if fn is operator.truediv and b == 0:
        raise DivisionByZero(f"{format_rational(a)} / 0")
    return fn(a, b)


def close(a: float, b: float, rel_tol: float = REL_TOL) -> bool:
    """Relative comparison used for every positive-real coefficient."""
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=0.0)


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(rat(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> RatMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence], rows: int | None = None) -> RatMatrix:
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ShapeMismatch("ragged columns")
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> RatMatrix:
        return RatMatrix.from_columns(self.to_rows(), rows=self.cols)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
            return RatMatrix.from_rows(
                [
                    [sum((a * other[k, j] for k, a in enumerate(self.row(i))), Fraction(0))
                     for j in range(other.cols)]
                    for i in range(self.rows)
                ],
                cols=other.cols,
            )
        vec = [rat(x) for x in other]
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        return tuple(
            sum((a * x for a, x in zip(self.row(i), vec)), Fraction(0))
            for i in range(self.rows)
        )

    def __str__(self):
        body = "; ".join(
            " ".join(format_rational(x) for x in self.row(i)) for i in range(self.rows)
        )
        return f"[{body}]"


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns).

    The pivot in each column is the first row at or below the current pivot
    row with a nonzero entry.
    """
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: RatMatrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    return len(_echelon(a.to_rows())[1])


def det(a: RatMatrix) -> Fraction:
    """Exact determinant by fraction-valued elimination."""
    if a.rows != a.cols:
        raise ShapeMismatch(f"determinant of a non-square {a.shape} matrix")
    m = a.to_rows()
    n = a.rows
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def det3(m: RatMatrix) -> Fraction:
    if m.shape != (3, 3):
        raise ShapeMismatch(f"det3 needs a 3x3 matrix, got {m.rows}x{m.cols}")
    (a, b, c), (d, e, f), (g, h, i) = m.to_rows()
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def solve_linear(a: RatMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Unique solution of ``a x = b``; raises SingularMatrix when det(a) = 0."""
    if a.rows != a.cols:
        raise ShapeMismatch(f"solve_linear needs a square matrix, got {a.shape}")
    rhs = [rat(x) for x in b]
    if len(rhs) != a.rows:
        raise ShapeMismatch(f"right-hand side of length {len(rhs)} for {a.shape}")
    n = a.rows
    aug = [list(a.row(i)) + [rhs[i]] for i in range(n)]
    red, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(red[i][n] for i in range(n))


def nullspace(a: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : a x = 0}``, each vector scaled to a leading 1."""
    n = a.cols
    if a.rows == 0:
        red, pivots = [], []
    else:
        red, pivots = _echelon(a.to_rows())
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -red[r][fc]
        lead = next(v for v in x if v != 0)
        basis.append(tuple(v / lead for v in x))
    return basis


def integer_form(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Smallest integer multiple of ``vec`` whose first nonzero entry is positive."""
    vec = [rat(v) for v in vec]
    nonzero = [v for v in vec if v != 0]
    if not nonzero:
        return tuple(vec)
    lcm = math.lcm(*(v.denominator for v in nonzero))
    ints = [v * lcm for v in vec]
    g = math.gcd(*(int(v) for v in ints if v != 0))
    if nonzero[0] < 0:
        g = -g
    return tuple(Fraction(int(v) // g) for v in ints)
