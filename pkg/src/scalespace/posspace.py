"""Positive spaces, q-rational maps and rational powers.

An element of the power space ``U^q`` is stored as a positive coefficient
relative to ``b^q``, where ``b`` is the distinguished unit of the atomic space
``U``.  Exponents stay exact; coefficients are doubles and are compared with a
relative tolerance (``REL_TOL``).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import BaseMismatch, NonPositiveScalar, SpaceMismatch
from .exactla import REL_TOL, close, format_rational, rat
from .semivec import SemiSpace

SCALARS = "R+"

_registry_lock = threading.Lock()
_atomic: dict[str, SemiSpace] = {}


def positive_space(label: str) -> SemiSpace:
    """Intern an atomic positive space by label."""
    with _registry_lock:
        space = _atomic.get(label)
        if space is None:
            space = _atomic[label] = SemiSpace(1, False, label)
        return space


def known_spaces() -> list[str]:
    with _registry_lock:
        return sorted(_atomic)


@dataclass(frozen=True)
class PowerSpace:
    base: str
    exponent: Fraction

    def __post_init__(self):
        exponent = rat(self.exponent)
        object.__setattr__(self, "exponent", exponent)
        if exponent == 0:
            # U^0 is R+ whatever U was
            object.__setattr__(self, "base", SCALARS)
        elif self.base == SCALARS:
            raise ValueError("R+ only appears as the 0-th power")
        else:
            positive_space(self.base)

    @classmethod
    def of(cls, label: str) -> PowerSpace:
        return cls(label, Fraction(1))

    @property
    def is_scalars(self) -> bool:
        return self.exponent == 0

    def dual(self) -> PowerSpace:
        return PowerSpace(self.base, -self.exponent)

    def power(self, q) -> PowerSpace:
        return PowerSpace(self.base, self.exponent * rat(q))

    def unit(self) -> PowerElement:
        return PowerElement(self, 1.0)

    def __str__(self):
        if self.is_scalars:
            return SCALARS
        if self.exponent == 1:
            return self.base
        return f"{self.base}^{format_rational(self.exponent)}"


@dataclass(frozen=True)
class PowerElement:
    space: PowerSpace
    coeff: float

    def __post_init__(self):
        if not (self.coeff > 0 and math.isfinite(self.coeff)):
            raise NonPositiveScalar(f"coefficient {self.coeff!r} is not a positive real")

    def isclose(self, other: PowerElement, rel_tol: float = REL_TOL) -> bool:
        return self.space == other.space and close(self.coeff, other.coeff, rel_tol)

    def __str__(self):
        return f"{self.coeff!r}·{self.space}"


def _pow(x: float, q: Fraction) -> float:
    # single rounding site: q stays exact until here
    if q == 0:
        return 1.0
    if q == 1:
        return x
    return math.exp(float(q) * math.log(x))


def smul(r: float, u: PowerElement) -> PowerElement:
    if not r > 0:
        raise NonPositiveScalar(f"scalar {r!r} is not positive")
    return PowerElement(u.space, r * u.coeff)


def ratio(u: PowerElement, v: PowerElement) -> float:
    """The positive number ``u / v`` of two elements of one space."""
    if u.space != v.space:
        raise SpaceMismatch(f"{u.space} vs {v.space}")
    return u.coeff / v.coeff


def inverse(u: PowerElement) -> PowerElement:
    """``1/u``, the element of the dual pairing to 1 with ``u``."""
    return PowerElement(u.space.dual(), 1.0 / u.coeff)


def pairing(alpha: PowerElement, u: PowerElement) -> float:
    if alpha.space != u.space.dual():
        raise SpaceMismatch(f"{alpha.space} does not pair with {u.space}")
    return alpha.coeff * u.coeff


def power(u: PowerElement, q) -> PowerElement:
    """``u ↦ u^q``, a q-rational map into the power space."""
    q = rat(q)
    return PowerElement(u.space.power(q), _pow(u.coeff, q))


def iterate_power(x: PowerElement, q) -> PowerElement:
    """``(U^p)^q -> U^{pq}``; on coordinates identical to :func:`power`."""
    return power(x, q)


def root(t: PowerElement, n: int) -> PowerElement:
    """The unique ``u`` with ``u^n = t``."""
    if n <= 0:
        raise ValueError("root order must be a positive integer")
    return power(t, Fraction(1, n))


def combine_powers(x: PowerElement, y: PowerElement) -> PowerElement:
    """``U^p ⊗̂ U^q -> U^{p+q}``; R+ factors combine with anything."""
    if x.space.is_scalars:
        return PowerElement(y.space, x.coeff * y.coeff)
    if y.space.is_scalars:
        return PowerElement(x.space, x.coeff * y.coeff)
    if x.space.base != y.space.base:
        raise BaseMismatch(f"{x.space} and {y.space} have different bases")
    return PowerElement(PowerSpace(x.space.base, x.space.exponent + y.space.exponent),
                        x.coeff * y.coeff)


@dataclass(frozen=True)
class RationalMap:
    """The q-rational map ``source -> target`` sending ``anchor·unit`` to ``image_coeff·unit``.

    With the default anchor 1 the map is pinned by its value on the unit.
    Keeping the anchor makes a map built through ``(u, v)`` return ``v``
    at ``u`` exactly, since ``(u/u)^q`` is exactly 1.
    """

    degree: Fraction
    source: PowerSpace
    target: PowerSpace
    image_coeff: float = 1.0
    anchor: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "degree", rat(self.degree))
        if not self.image_coeff > 0:
            raise NonPositiveScalar(f"image coefficient {self.image_coeff!r} is not positive")
        if not self.anchor > 0:
            raise NonPositiveScalar(f"anchor {self.anchor!r} is not positive")

    @classmethod
    def through(cls, u: PowerElement, v: PowerElement, degree) -> RationalMap:
        """The unique map of the given degree sending ``u`` to ``v``."""
        return cls(rat(degree), u.space, v.space, v.coeff, u.coeff)

    @classmethod
    def identity(cls, space: PowerSpace) -> RationalMap:
        return cls(Fraction(1), space, space, 1.0)

    def __call__(self, u: PowerElement) -> PowerElement:
        return apply_rational(self, u)


def apply_rational(f: RationalMap, u: PowerElement) -> PowerElement:
    if u.space != f.source:
        raise SpaceMismatch(f"argument in {u.space}, map from {f.source}")
    return PowerElement(f.target, _pow(u.coeff / f.anchor, f.degree) * f.image_coeff)


def compose_rational(g: RationalMap, f: RationalMap) -> RationalMap:
    """``g ∘ f``; degrees multiply."""
    if f.target != g.source:
        raise SpaceMismatch(f"f lands in {f.target}, g starts at {g.source}")
    # anchor at f's anchor: g∘f sends it to g(f(anchor))
    return RationalMap(g.degree * f.degree, f.source, g.target,
                       g(PowerElement(f.target, f.image_coeff)).coeff, f.anchor)


def invert_rational(f: RationalMap) -> RationalMap:
    """Inverse of a bijective (nonzero-degree) rational map; it has degree ``1/q``."""
    if f.degree == 0:
        raise ValueError("0-rational maps are constant and not invertible")
    return RationalMap(1 / f.degree, f.target, f.source, f.anchor, f.image_coeff)


def power_map(space: PowerSpace, q) -> RationalMap:
    """``π^q`` as a RationalMap from ``space`` to ``space^q``."""
    q = rat(q)
    return RationalMap(q, space, space.power(q), 1.0)
