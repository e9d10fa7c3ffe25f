"""Finite semi-free semi-vector spaces over the positive reals.

Every space is held in its canonical-orthant form: a fixed semi-basis
``b_0 .. b_{n-1}`` and elements written as sparse maps ``index -> coefficient``
with strictly positive rational coefficients.  A complete space additionally
contains the zero vector (empty coordinates).  Unique coordinates make the
cancellation law and element equality decidable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    AlreadyComplete,
    InvalidMap,
    NonPositiveScalar,
    SpaceMismatch,
)
from .exactla import RatMatrix, format_rational, nullspace, rank, rat, solve_linear


@dataclass(frozen=True)
class SemiSpace:
    """A semi-free space of semi-dimension ``sdim``.

    ``dual_of`` links a semi-dual back to its predual, so ``U.dual().dual()``
    is ``U`` itself.  ``factors`` records the factor spaces of a semi-tensor
    product (empty for atomic spaces).
    """

    sdim: int
    complete: bool = False
    label: str = "U"
    dual_of: SemiSpace | None = field(default=None, repr=False)
    factors: tuple[SemiSpace, ...] = field(default=(), repr=False)

    def __post_init__(self):
        if self.sdim < 0:
            raise ValueError("semi-dimension must be nonnegative")
        if self.sdim == 0 and not self.complete:
            raise ValueError("a space of semi-dimension 0 must be complete")

    @property
    def is_positive_space(self) -> bool:
        return self.sdim == 1 and not self.complete

    def zero(self) -> SemiVector:
        if not self.complete:
            raise SpaceMismatch(f"{self.label} is not complete and has no zero vector")
        return SemiVector(self, {})

    def basis(self) -> list[SemiVector]:
        return [SemiVector(self, {i: 1}) for i in range(self.sdim)]

    def vector(self, coords: Mapping[int, object] | Sequence) -> SemiVector:
        """Build an element from a mapping or a dense sequence; zero entries are dropped."""
        if isinstance(coords, Mapping):
            items = coords.items()
        else:
            items = enumerate(coords)
        return SemiVector(self, {i: c for i, c in items if rat(c) != 0})

    def dual(self) -> SemiSpace:
        # The dual semi-basis pairs to zero off the diagonal, so the semi-dual
        # is modelled as complete.
        if self.dual_of is not None:
            return self.dual_of
        return SemiSpace(self.sdim, True, f"{self.label}*", dual_of=self)

    def __str__(self):
        return self.label


def complete(space: SemiSpace) -> SemiSpace:
    """The completion ``U ⊔ {0}``; completing a complete space is refused."""
    if space.complete:
        raise AlreadyComplete(f"{space.label} is already complete")
    return SemiSpace(space.sdim, True, space.label, factors=space.factors)


@dataclass(frozen=True)
class SemiVector:
    space: SemiSpace
    coords: Mapping[int, Fraction]

    def __post_init__(self):
        clean = {}
        for i, c in dict(self.coords).items():
            c = rat(c)
            if not (0 <= i < self.space.sdim):
                raise IndexError(f"index {i} outside semi-basis of {self.space.label}")
            if c <= 0:
                raise ValueError(f"coefficient {format_rational(c)} is not positive")
            clean[i] = c
        if not clean and not self.space.complete:
            raise SpaceMismatch(f"{self.space.label} is not complete: zero is not an element")
        object.__setattr__(self, "coords", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.space, tuple(self.coords.items())))

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def __getitem__(self, i: int) -> Fraction:
        return self.coords.get(i, Fraction(0))

    def dense(self) -> tuple[Fraction, ...]:
        return tuple(self[i] for i in range(self.space.sdim))

    def __add__(self, other):
        if not isinstance(other, SemiVector):
            return NotImplemented
        return add(self, other)

    def __rmul__(self, r):
        return smul(r, self)

    def __str__(self):
        if self.is_zero:
            return "0"
        return " + ".join(f"{format_rational(c)}·b_{i}" for i, c in self.coords.items())


def _same_space(a: SemiSpace, b: SemiSpace, what: str = "operands"):
    if a != b:
        raise SpaceMismatch(f"{what} live in {a.label} and {b.label}")


def add(u: SemiVector, v: SemiVector) -> SemiVector:
    _same_space(u.space, v.space)
    out = dict(u.coords)
    for i, c in v.coords.items():
        out[i] = out.get(i, 0) + c
    return SemiVector(u.space, out)


def smul(r, u: SemiVector) -> SemiVector:
    r = rat(r)
    if r <= 0:
        raise NonPositiveScalar(f"scalar {format_rational(r)} is not positive")
    return SemiVector(u.space, {i: r * c for i, c in u.coords.items()})


def pair(alpha: SemiVector, u: SemiVector) -> Fraction:
    """Evaluate a semi-dual element on an element of its predual."""
    if alpha.space.dual() != u.space:
        raise SpaceMismatch(f"{alpha.space.label} is not the semi-dual of {u.space.label}")
    return sum((c * u[i] for i, c in alpha.coords.items()), Fraction(0))


def dual_basis(space: SemiSpace) -> list[SemiVector]:
    return space.dual().basis()


def _monomial(matrix: Sequence[Sequence[Fraction]]) -> bool:
    n = len(matrix)
    seen = set()
    for row in matrix:
        support = [j for j, x in enumerate(row) if x != 0]
        if len(support) != 1 or row[support[0]] <= 0:
            return False
        seen.add(support[0])
    return len(seen) == n


def is_semi_basis(space: SemiSpace, candidates: Sequence[SemiVector]) -> bool:
    """True iff ``candidates`` form a semi-basis of ``space``.

    Two semi-bases of a semi-free space differ by a positive rescaling and a
    relabelling, so this reduces to checking that the candidates' coordinate
    matrix is monomial.
    """
    for c in candidates:
        _same_space(c.space, space, "candidate and space")
        if c.is_zero:
            return False
    if len(candidates) != space.sdim:
        return False
    return _monomial([c.dense() for c in candidates])


@dataclass(frozen=True)
class SemiLinearMap:
    """Nonnegative ``target.sdim x source.sdim`` matrix between semi-free spaces."""

    source: SemiSpace
    target: SemiSpace
    matrix: RatMatrix

    def __post_init__(self):
        m = self.matrix
        if not isinstance(m, RatMatrix):
            m = RatMatrix.from_rows(m, cols=self.source.sdim)
            object.__setattr__(self, "matrix", m)
        if m.shape != (self.target.sdim, self.source.sdim):
            raise InvalidMap(
                f"matrix shape {m.shape} does not match "
                f"{self.source.label} -> {self.target.label}"
            )
        if any(x < 0 for x in m.entries):
            raise InvalidMap("semi-linear maps need nonnegative matrix entries")
        if not self.target.complete:
            if self.source.complete:
                raise InvalidMap("no semi-linear map from a complete space into a non-complete one")
            for j in range(m.cols):
                if not any(x > 0 for x in m.col(j)):
                    raise InvalidMap(f"column {j} is zero but {self.target.label} has no zero")

    @classmethod
    def identity(cls, space: SemiSpace) -> SemiLinearMap:
        return cls(space, space, RatMatrix.identity(space.sdim))

    @classmethod
    def from_images(cls, source: SemiSpace, images: Sequence[SemiVector]) -> SemiLinearMap:
        """The unique semi-linear map sending ``b_i`` to ``images[i]``."""
        if len(images) != source.sdim:
            raise InvalidMap("need one image per semi-basis element")
        target = images[0].space if images else None
        for v in images:
            _same_space(v.space, target, "images")
        return cls(source, target, RatMatrix.from_columns([v.dense() for v in images],
                                                          rows=target.sdim))

    def __call__(self, u: SemiVector) -> SemiVector:
        return apply(self, u)

    def __add__(self, other: SemiLinearMap) -> SemiLinearMap:
        _same_space(self.source, other.source, "map sources")
        _same_space(self.target, other.target, "map targets")
        entries = tuple(a + b for a, b in zip(self.matrix.entries, other.matrix.entries))
        return SemiLinearMap(self.source, self.target,
                             RatMatrix(self.matrix.rows, self.matrix.cols, entries))


def apply(f: SemiLinearMap, u: SemiVector) -> SemiVector:
    _same_space(u.space, f.source, "argument and map source")
    return f.target.vector(f.matrix @ u.dense())


def compose(g: SemiLinearMap, f: SemiLinearMap) -> SemiLinearMap:
    """``g ∘ f``."""
    _same_space(f.target, g.source, "f.target and g.source")
    return SemiLinearMap(f.source, g.target, g.matrix @ f.matrix)


def transpose(f: SemiLinearMap) -> SemiLinearMap:
    """The transpose ``f*: V* -> U*``, written in the dual semi-bases."""
    return SemiLinearMap(f.target.dual(), f.source.dual(), f.matrix.transpose())


def cone_element(generators: Sequence[Sequence], coeffs: Iterable) -> tuple[Fraction, ...]:
    """Ambient coordinates of ``Σ r_i s_i`` for a cone spanned by ``generators``."""
    coeffs = [rat(c) for c in coeffs]
    dim = len(generators[0])
    return tuple(
        sum((c * rat(g[k]) for c, g in zip(coeffs, generators)), Fraction(0))
        for k in range(dim)
    )


def cone_coordinates(generators: Sequence[Sequence], point: Sequence,
                     space: SemiSpace | None = None) -> SemiVector:
    """Pull a point of the cone spanned by independent generators back to the orthant.

    The generators must be linearly independent; the result is the unique
    positive decomposition, and ``ValueError`` is raised when the point is
    not in the cone.
    """
    n = len(generators)
    space = space or SemiSpace(n, False, "cone")
    cols = [[rat(x) for x in g] for g in generators]
    dim = len(cols[0])
    a = RatMatrix.from_columns(cols, rows=dim)
    if nullspace(a):
        raise ValueError("cone generators are not linearly independent")
    # square up the system on n independent ambient rows
    rows = []
    for r in range(dim):
        trial = rows + [r]
        sub = RatMatrix.from_rows([a.row(i) for i in trial], cols=n)
        if rank(sub) == len(trial):
            rows = trial
        if len(rows) == n:
            break
    sub = RatMatrix.from_rows([a.row(i) for i in rows], cols=n)
    x = solve_linear(sub, [rat(point[i]) for i in rows])
    if a @ x != tuple(rat(p) for p in point) or any(v < 0 for v in x):
        raise ValueError("point is not in the cone")
    return space.vector(x)
