"""Scales over the three basic positive spaces T (time), L (length), M (mass).

A scale is a positive coefficient times the unit ``u0^{d1} ℓ^{d2} m^{d3}`` of
its scale space; ``(d1, d2, d3)`` is its scale dimension.  Signed scales
(charges) live in the vector extension and may carry any real coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatch,
    FractionalPowerOfNegative,
    SingularBasis,
    SingularMatrix,
    ZeroToNonpositivePower,
)
from .exactla import (
    REL_TOL,
    RatMatrix,
    close,
    det3,
    format_rational,
    integer_form,
    nullspace,
    rat,
    rank,
    solve_linear,
)

BASE_NAMES = ("T", "L", "M")


@dataclass(frozen=True)
class DimVector:
    t: Fraction = Fraction(0)
    l: Fraction = Fraction(0)
    m: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("t", "l", "m"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, values: Sequence) -> DimVector:
        t, l, m = values
        return cls(t, l, m)

    def __iter__(self):
        return iter((self.t, self.l, self.m))

    def __add__(self, other: DimVector) -> DimVector:
        return DimVector(self.t + other.t, self.l + other.l, self.m + other.m)

    def __sub__(self, other: DimVector) -> DimVector:
        return DimVector(self.t - other.t, self.l - other.l, self.m - other.m)

    def __neg__(self) -> DimVector:
        return DimVector(-self.t, -self.l, -self.m)

    def __mul__(self, q) -> DimVector:
        q = rat(q)
        return DimVector(q * self.t, q * self.l, q * self.m)

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return not (self.t or self.l or self.m)

    def render(self, names: Sequence[str] = BASE_NAMES) -> str:
        """``"T^-1 L^3/2"`` style; zero exponents dropped, exponent 1 bare."""
        parts = []
        for name, e in zip(names, self):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{format_rational(e)}")
        return " ".join(parts) if parts else "1"

    def __str__(self):
        return self.render()


DIMENSIONLESS = DimVector()


@dataclass(frozen=True)
class SignedScale:
    dims: DimVector
    coeff: float = 1.0

    def __post_init__(self):
        if not isinstance(self.dims, DimVector):
            object.__setattr__(self, "dims", DimVector.of(self.dims))
        if not math.isfinite(self.coeff):
            raise ValueError(f"coefficient {self.coeff!r} is not finite")

    def __mul__(self, other):
        return scale_mul(self, other)

    def __truediv__(self, other):
        return scale_div(self, other)

    def __pow__(self, q):
        return scale_pow(self, q)

    def __str__(self):
        return f"{self.coeff!r} {self.dims}"


@dataclass(frozen=True)
class Scale(SignedScale):
    """A scale proper: the coefficient is strictly positive."""

    def __post_init__(self):
        super().__post_init__()
        if not self.coeff > 0:
            raise ValueError(f"scale coefficient {self.coeff!r} is not positive")


AnyScale = Union[Scale, SignedScale]


def _make(dims: DimVector, coeff: float, signed: bool) -> AnyScale:
    if signed or not coeff > 0:
        return SignedScale(dims, coeff)
    return Scale(dims, coeff)


def _signed(*ks: AnyScale) -> bool:
    return any(not isinstance(k, Scale) for k in ks)


def unit(dims) -> Scale:
    return Scale(dims if isinstance(dims, DimVector) else DimVector.of(dims), 1.0)


def sdi(k: AnyScale) -> DimVector:
    return k.dims


def scale_mul(k: AnyScale, k2: AnyScale) -> AnyScale:
    """``k ⊗̂ k2``."""
    return _make(k.dims + k2.dims, k.coeff * k2.coeff, _signed(k, k2))


def scale_inv(k: AnyScale) -> AnyScale:
    if k.coeff == 0:
        raise ZeroToNonpositivePower("inverse of a vanishing signed scale")
    return _make(-k.dims, 1.0 / k.coeff, _signed(k))


def scale_div(k: AnyScale, k2: AnyScale) -> AnyScale:
    return scale_mul(k, scale_inv(k2))


def scale_smul(r: float, k: AnyScale) -> AnyScale:
    """``r k`` for a positive real ``r``; dims unchanged."""
    if not r > 0:
        raise ValueError(f"scalar {r!r} is not positive")
    return _make(k.dims, r * k.coeff, _signed(k))


def _real_pow(x: float, q: Fraction) -> float:
    if q == 0:
        return 1.0
    if x > 0:
        return math.exp(float(q) * math.log(x))
    if x == 0:
        if q <= 0:
            raise ZeroToNonpositivePower(f"0 raised to {format_rational(q)}")
        return 0.0
    if q.denominator != 1:
        raise FractionalPowerOfNegative(
            f"negative coefficient raised to {format_rational(q)}"
        )
    return x ** int(q)


def scale_pow(k: AnyScale, q) -> AnyScale:
    """``k^q``: dims scale by ``q`` exactly, coefficient by a real power."""
    q = rat(q)
    return _make(k.dims * q, _real_pow(k.coeff, q), _signed(k))


def same_scale(k: AnyScale, k2: AnyScale, rel_tol: float = REL_TOL) -> bool:
    if k.dims != k2.dims:
        return False
    if k.coeff == 0 or k2.coeff == 0:
        return k.coeff == k2.coeff
    return close(k.coeff, k2.coeff, rel_tol)


def ratio(k: AnyScale, k2: AnyScale) -> float:
    """The pure number ``k / k2``; only defined inside one scale space."""
    if k.dims != k2.dims:
        raise DimensionMismatch(f"{k.dims} vs {k2.dims}")
    if k2.coeff == 0:
        raise ZeroToNonpositivePower("ratio by a vanishing signed scale")
    return k.coeff / k2.coeff


def dims_matrix(scales: Sequence[AnyScale | DimVector]) -> RatMatrix:
    """3 x n matrix whose column j is the scale dimension of ``scales[j]``."""
    cols = [list(s if isinstance(s, DimVector) else s.dims) for s in scales]
    return RatMatrix.from_columns(cols, rows=3)


def basis_det(e1: AnyScale, e2: AnyScale, e3: AnyScale) -> Fraction:
    return det3(dims_matrix([e1, e2, e3]))


def is_scale_basis(e1: AnyScale, e2: AnyScale, e3: AnyScale) -> bool:
    return basis_det(e1, e2, e3) != 0


@dataclass(frozen=True)
class ScaleBasis:
    e1: AnyScale
    e2: AnyScale
    e3: AnyScale
    names: tuple[str, str, str] = field(default=("e1", "e2", "e3"), compare=False)

    def __post_init__(self):
        if not is_scale_basis(self.e1, self.e2, self.e3):
            raise SingularBasis(f"({', '.join(self.names)}) is not a scale basis: det = 0")

    def __iter__(self):
        return iter((self.e1, self.e2, self.e3))

    @property
    def det(self) -> Fraction:
        return basis_det(*self)


def express_in_basis(k: AnyScale, basis: ScaleBasis | Sequence[AnyScale]):
    """Write ``k = r e1^c1 e2^c2 e3^c3``; returns ``(c1, c2, c3, r)``.

    The exponents are the exact solution of the 3 x 3 rational system on the
    scale dimensions.  ``r`` is a double; it is negative only when signed
    scales are involved.
    """
    if not isinstance(basis, ScaleBasis):
        basis = ScaleBasis(*basis)
    try:
        c = solve_linear(dims_matrix(list(basis)), list(k.dims))
    except SingularMatrix:
        raise SingularBasis("basis dimension matrix is singular") from None
    denom = 1.0
    for e, cj in zip(basis, c):
        denom *= _real_pow(e.coeff, cj)
    if denom == 0:
        raise ZeroToNonpositivePower("basis element with vanishing coefficient")
    return c[0], c[1], c[2], k.coeff / denom


def reassemble(c: Sequence[Fraction], r: float, basis: Iterable[AnyScale]) -> AnyScale:
    """``r e1^c1 e2^c2 e3^c3``."""
    out: AnyScale = _make(DIMENSIONLESS, r, r <= 0)
    for e, cj in zip(basis, c):
        out = scale_mul(out, scale_pow(e, cj))
    return out


def pi_groups(quantities: Sequence[AnyScale | DimVector]) -> list[tuple[Fraction, ...]]:
    """Dimensionless power products of ``quantities``.

    Canonical basis of the rational nullspace of the dims matrix: each vector
    is normalised to a leading 1 and then cleared to its smallest integer form.
    """
    if not quantities:
        raise ValueError("pi_groups needs at least one quantity")
    return [integer_form(v) for v in nullspace(dims_matrix(quantities))]


def dims_rank(quantities: Sequence[AnyScale | DimVector]) -> int:
    return rank(dims_matrix(quantities))


def product_dims(quantities: Sequence[AnyScale | DimVector], exponents: Sequence) -> DimVector:
    out = DIMENSIONLESS
    for q, x in zip(quantities, exponents):
        out = out + (q if isinstance(q, DimVector) else q.dims) * rat(x)
    return out


@dataclass
class Registry:
    """Named scales plus the names of the three basic spaces."""

    base_names: tuple[str, ...] = ()
    entries: dict[str, AnyScale] = field(default_factory=dict)

    def get(self, name: str) -> AnyScale | None:
        return self.entries.get(name)

    def __getitem__(self, name: str) -> AnyScale:
        return self.entries[name]

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def names(self) -> list[str]:
        return list(self.entries)

    def define(self, name: str, scale: AnyScale):
        if name in self.entries or name in self.base_names:
            raise KeyError(f"{name} is already defined")
        self.entries[name] = scale

    def copy(self) -> Registry:
        return Registry(tuple(self.base_names), dict(self.entries))

    def render(self, dims: DimVector) -> str:
        return dims.render(self.base_names or BASE_NAMES)


def default_registry(path=None) -> Registry:
    """Registry loaded from a definitions file (the bundled ``si.units`` by default)."""
    from .unitlang.loader import load_definitions

    return load_definitions(path)


def registry_from_dims(dims: Mapping[str, Sequence], signed: Iterable[str] = ()) -> Registry:
    """Registry with unit coefficients; handy when only dimensions matter."""
    signed = set(signed)
    reg = Registry(BASE_NAMES)
    for name, d in dims.items():
        k = SignedScale(DimVector.of(d), 1.0) if name in signed else unit(d)
        reg.define(name, k)
    return reg
