"""Sesqui-tensor products, the universal vector extension, semi-tensor products.

All products are built directly in coordinates on their distinguished bases:

* ``V ⊗̀ U`` with ``U`` semi-free has basis ``b_i ⊗̀ c_j`` (row-major in ``i, j``).
* ``V ⊗̀ U`` with ``U`` a vector space has the doubled basis: the block of
  ``b_i ⊗̀ c_j`` followed by the block of ``b_i ⊗̀ (-c_j)``.
* ``R ⊗̀ U`` has basis ``1 ⊗̀ b_i``.
* ``U ⊗̂ V`` has semi-basis ``b_i ⊗̂ c_j``, again row-major.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidMap, NotSemiFree, SpaceMismatch
from .exactla import RatMatrix, format_rational, rat
from .semivec import SemiLinearMap, SemiSpace, SemiVector

POSITIVE_REALS = SemiSpace(1, False, "R+")


@dataclass(frozen=True)
class VecSpace:
    dim: int
    label: str = "V"

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")

    def vector(self, coords: Sequence) -> Vector:
        return Vector(self, tuple(coords))

    def zero(self) -> Vector:
        return Vector(self, (0,) * self.dim)

    def basis(self) -> list[Vector]:
        return [Vector(self, tuple(int(i == j) for j in range(self.dim)))
                for i in range(self.dim)]


@dataclass(frozen=True)
class Vector:
    space: VecSpace
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(rat(c) for c in self.coords)
        if len(coords) != self.space.dim:
            raise SpaceMismatch(
                f"{len(coords)} coordinates for {self.space.label} of dim {self.space.dim}"
            )
        object.__setattr__(self, "coords", coords)

    def _check(self, other: Vector):
        if self.space != other.space:
            raise SpaceMismatch(f"{self.space.label} vs {other.space.label}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vector:
        return Vector(self.space, tuple(-a for a in self.coords))

    def __rmul__(self, s) -> Vector:
        s = rat(s)
        return Vector(self.space, tuple(s * a for a in self.coords))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class LinearMap:
    source: VecSpace
    target: VecSpace
    matrix: RatMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise InvalidMap(f"matrix shape {self.matrix.shape} does not fit "
                             f"{self.source.label} -> {self.target.label}")

    def __call__(self, x: Vector) -> Vector:
        if x.space != self.source:
            raise SpaceMismatch(f"argument in {x.space.label}, map from {self.source.label}")
        return Vector(self.target, self.matrix @ x.coords)


@dataclass(frozen=True)
class SemiToVecMap:
    """A semi-linear map from a semi-free space into a vector space.

    Column ``i`` of ``matrix`` is the image of the semi-basis element ``b_i``;
    entries may have any sign.
    """

    source: SemiSpace
    target: VecSpace
    matrix: RatMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.sdim):
            raise InvalidMap(f"matrix shape {self.matrix.shape} does not fit "
                             f"{self.source.label} -> {self.target.label}")

    def __call__(self, u: SemiVector) -> Vector:
        if u.space != self.source:
            raise SpaceMismatch(f"argument in {u.space.label}, map from {self.source.label}")
        return Vector(self.target, self.matrix @ u.dense())


# -- sesqui-tensor products -------------------------------------------------


@dataclass(frozen=True)
class SesquiSpace(VecSpace):
    """``left ⊗̀ right``; ``right`` is a semi-free space or a vector space."""

    left: VecSpace = field(default=None)
    right: SemiSpace | VecSpace = field(default=None)

    @property
    def right_is_vector(self) -> bool:
        return isinstance(self.right, VecSpace)


def sesqui_space(left: VecSpace, right: SemiSpace | VecSpace) -> SesquiSpace:
    if isinstance(right, SemiSpace):
        dim = left.dim * right.sdim
    elif isinstance(right, VecSpace):
        dim = 2 * left.dim * right.dim
    else:
        raise NotSemiFree(f"cannot form a sesqui-tensor product with {right!r}")
    return SesquiSpace(dim, f"{left.label}⊗̀{right.label}", left, right)


def _check_factors(space: SesquiSpace | None, v: Vector, right) -> SesquiSpace:
    expected = sesqui_space(v.space, right)
    if space is not None and space != expected:
        raise SpaceMismatch(f"factors do not match {space.label}")
    return expected


def sesqui(v: Vector, u: SemiVector | Vector, space: SesquiSpace | None = None) -> Vector:
    """``v ⊗̀ u``: linear in ``v``, semi-linear in ``u``."""
    if isinstance(u, Vector):
        return sesqui_vv(v, u, space)
    space = _check_factors(space, v, u.space)
    ud = u.dense()
    return Vector(space, tuple(a * b for a in v.coords for b in ud))


def _sign_split(coords: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    plus = [c if c > 0 else Fraction(0) for c in coords]
    minus = [-c if c < 0 else Fraction(0) for c in coords]
    return plus, minus


def sesqui_vv(v: Vector, u: Vector, space: SesquiSpace | None = None) -> Vector:
    """``v ⊗̀ u`` for a vector-space right factor, via ``u = u₊ - u₋``.

    The positive part lands on the ``b_i ⊗̀ c_j`` block and the negative part
    on the ``b_i ⊗̀ (-c_j)`` block, both with nonnegative weights, so only
    positive scalars ever leave the second factor.
    """
    if not isinstance(u, Vector):
        raise SpaceMismatch("sesqui_vv needs a vector-space right factor")
    space = _check_factors(space, v, u.space)
    plus, minus = _sign_split(u.coords)
    return Vector(space, tuple(a * b for a in v.coords for b in plus)
                  + tuple(a * b for a in v.coords for b in minus))


def tensor_space(left: VecSpace, right: VecSpace) -> VecSpace:
    """Ordinary ``V ⊗ U``, basis ``e_ij`` row-major."""
    return VecSpace(left.dim * right.dim, f"{left.label}⊗{right.label}")


def projection_matrix(space: SesquiSpace) -> RatMatrix:
    """Matrix of ``V ⊗̀ U -> V ⊗ U``: ``[I | -I]``."""
    if not space.right_is_vector:
        raise SpaceMismatch("projection is defined for a vector-space right factor")
    n = space.left.dim * space.right.dim
    return RatMatrix.from_rows(
        [[int(i == j) for j in range(n)] + [-int(i == j) for j in range(n)]
         for i in range(n)],
        cols=2 * n,
    )


def sesqui_project(t: Vector) -> Vector:
    space = t.space
    if not isinstance(space, SesquiSpace):
        raise SpaceMismatch(f"{space.label} is not a sesqui-tensor product")
    target = tensor_space(space.left, space.right)
    return Vector(target, projection_matrix(space) @ t.coords)


def outer(v: Vector, u: Vector) -> Vector:
    return Vector(tensor_space(v.space, u.space),
                  tuple(a * b for a in v.coords for b in u.coords))


def left_sesqui(u: SemiVector, v: Vector) -> Vector:
    """``u ⊗́ v``, obtained by reindexing ``v ⊗̀ u`` to column-major order."""
    t = sesqui(v, u)
    m, n = v.space.dim, u.space.sdim
    space = VecSpace(m * n, f"{u.space.label}⊗́{v.space.label}")
    return Vector(space, tuple(t.coords[i * n + j] for j in range(n) for i in range(m)))


# -- universal vector extension ---------------------------------------------


@dataclass(frozen=True)
class ExtensionSpace(VecSpace):
    """``R ⊗̀ U`` for semi-free ``U``; coordinates on the basis ``1 ⊗̀ b_i``."""

    base: SemiSpace = field(default=None)


def extend_space(u_space: SemiSpace) -> ExtensionSpace:
    if not isinstance(u_space, SemiSpace):
        raise NotSemiFree(f"{u_space!r} is not a semi-free space")
    return ExtensionSpace(u_space.sdim, f"R⊗̀{u_space.label}", u_space)


def embed(u: SemiVector) -> Vector:
    """``u ↦ 1 ⊗̀ u``."""
    return Vector(extend_space(u.space), u.dense())


def decompose_extension(t: Vector) -> tuple[SemiVector | None, SemiVector | None]:
    """Split ``t = embed(u₊) - embed(u₋)`` with disjoint supports.

    A part that would be the zero vector is returned as ``None``.
    """
    if not isinstance(t.space, ExtensionSpace):
        raise SpaceMismatch(f"{t.space.label} is not a universal vector extension")
    plus, minus = _sign_split(t.coords)
    base = t.space.base
    u_plus = base.vector(plus) if any(plus) else None
    u_minus = base.vector(minus) if any(minus) else None
    return u_plus, u_minus


def extend_map(f: SemiToVecMap) -> LinearMap:
    """The unique linear ``f̄`` on ``R ⊗̀ U`` with ``f̄ ∘ embed = f``."""
    return LinearMap(extend_space(f.source), f.target, f.matrix)


# -- semi-tensor products -----------------------------------------------------


def semi_tensor_space(*factors: SemiSpace) -> SemiSpace:
    if not factors:
        return POSITIVE_REALS
    for f in factors:
        if not isinstance(f, SemiSpace):
            raise NotSemiFree(f"{f!r} is not a semi-free space")
    if len(factors) == 1:
        return factors[0]
    return SemiSpace(
        math.prod(f.sdim for f in factors),
        any(f.complete for f in factors),
        "⊗̂".join(f"({f.label})" if f.factors else f.label for f in factors),
        factors=tuple(factors),
    )


def semi_tensor(*vectors: SemiVector) -> SemiVector:
    """``u ⊗̂ v ⊗̂ ...`` with lexicographically flattened indices."""
    space = semi_tensor_space(*(v.space for v in vectors))
    coords = [Fraction(1)]
    for v in vectors:
        d = v.dense()
        coords = [a * b for a in coords for b in d]
    return space.vector(coords)


def semi_tensor_power(u: SemiVector, m: int) -> SemiVector:
    """``⊗̂ᵐ u``; the 0-th power is ``1 ∈ R+``."""
    if m < 0:
        raise ValueError("tensor powers need m >= 0")
    if m == 0:
        return POSITIVE_REALS.vector([1])
    return semi_tensor(*([u] * m))


def collapse_scalar(t: SemiVector) -> SemiVector:
    """``R+ ⊗̂ U -> U : r ⊗̂ u ↦ r u`` (and the mirror ``U ⊗̂ R+``)."""
    fs = t.space.factors
    if len(fs) != 2 or POSITIVE_REALS not in fs:
        raise SpaceMismatch(f"{t.space.label} has no R+ factor to collapse")
    other = fs[1] if fs[0] == POSITIVE_REALS else fs[0]
    return other.vector(t.dense())


def slin_as_semitensor(alpha: SemiVector, v: SemiVector) -> SemiLinearMap:
    """The rank-one map ``u ↦ alpha(u) v`` for ``alpha`` in a semi-dual."""
    source = alpha.space.dual()
    matrix = RatMatrix.from_rows(
        [[vj * ai for ai in alpha.dense()] for vj in v.dense()], cols=source.sdim
    )
    return SemiLinearMap(source, v.space, matrix)


def semitensor_to_slin(t: SemiVector) -> SemiLinearMap:
    """``U* ⊗̂ V -> Slin(U, V)``, bijective for finite semi-dimensions."""
    fs = t.space.factors
    if len(fs) != 2 or fs[0].dual_of is None:
        raise SpaceMismatch(f"{t.space.label} is not of the form U*⊗̂V")
    source, target = fs[0].dual(), fs[1]
    n = target.sdim
    d = t.dense()
    matrix = RatMatrix.from_rows(
        [[d[i * n + j] for i in range(source.sdim)] for j in range(n)], cols=source.sdim
    )
    return SemiLinearMap(source, target, matrix)


def slin_to_semitensor(f: SemiLinearMap) -> SemiVector:
    space = semi_tensor_space(f.source.dual(), f.target)
    n = f.target.sdim
    return space.vector([f.matrix[j, i] for i in range(f.source.sdim) for j in range(n)])


def rank_one_terms(f: SemiLinearMap) -> list[tuple[SemiVector, SemiVector]]:
    """``(alpha, v)`` pairs, one per nonzero matrix entry, whose maps sum to ``f``."""
    dual = f.source.dual()
    terms = []
    for j in range(f.matrix.rows):
        for i in range(f.matrix.cols):
            x = f.matrix[j, i]
            if x:
                terms.append((dual.vector({i: x}), f.target.vector({j: 1})))
    return terms
