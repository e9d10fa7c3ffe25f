import math
import threading
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scalespace import posspace as ps
from scalespace.errors import BaseMismatch, NonPositiveScalar, SpaceMismatch

U = ps.PowerSpace.of("U")
coeffs = st.floats(min_value=0.01, max_value=100.0)
exps = st.fractions(min_value=-6, max_value=6, max_denominator=6)
nonzero_exps = exps.filter(lambda q: q != 0)


def close(a, b):
    return a.space == b.space and math.isclose(a.coeff, b.coeff, rel_tol=1e-12)


def el(c, space=U):
    return ps.PowerElement(space, c)


def test_power_space_identities():
    assert U.power(0).is_scalars and str(U.power(0)) == "R+"
    assert U.power(0) == ps.PowerSpace.of("W").power(0)
    assert U.dual() == ps.PowerSpace("U", -1)
    assert U.power(F(3, 2)).dual() == U.dual().power(F(3, 2))
    assert str(U.power(F(-1, 2))) == "U^-1/2"


def test_inverse_examples():
    inv = ps.inverse(el(2.0))
    assert inv.space.exponent == -1 and inv.coeff == 0.5
    assert ps.pairing(inv, el(2.0)) == 1.0


def test_power_examples():
    assert close(ps.power(el(4.0), F(1, 2)), el(2.0, U.power(F(1, 2))))
    zero = ps.power(el(7.0), 0)
    assert zero.space.is_scalars and zero.coeff == 1.0


def test_combine_examples():
    half = U.power(F(1, 2))
    assert close(ps.combine_powers(el(2.0, half), el(3.0, half)), el(6.0))
    with pytest.raises(BaseMismatch):
        ps.combine_powers(el(1.0), el(1.0, ps.PowerSpace.of("W")))
    x = el(3.0, U.power(F(2, 3)))
    unit = ps.combine_powers(x, ps.inverse(x))
    assert unit.space.is_scalars and math.isclose(unit.coeff, 1.0, rel_tol=1e-12)


def test_coefficients_positive():
    with pytest.raises(NonPositiveScalar):
        el(0.0)
    with pytest.raises(NonPositiveScalar):
        el(float("inf"))
    with pytest.raises(NonPositiveScalar):
        ps.smul(-1.0, el(1.0))


def test_ratio_needs_same_space():
    assert ps.ratio(el(6.0), el(2.0)) == 3.0
    with pytest.raises(SpaceMismatch):
        ps.ratio(el(1.0), el(1.0, U.dual()))


def test_rational_map_examples():
    sq = ps.RationalMap(2, U, U.power(2))
    assert sq(el(3.0)).coeff == pytest.approx(9.0, rel=1e-12)
    const = ps.RationalMap(0, U, U, 5.0)
    assert const(el(3.0)).coeff == const(el(11.0)).coeff == 5.0
    f = ps.RationalMap(2, U, U.power(2))
    g = ps.RationalMap(3, U.power(2), U.power(6))
    assert ps.compose_rational(g, f).degree == 6
    assert ps.invert_rational(ps.RationalMap(F(3, 2), U, U)).degree == F(2, 3)
    with pytest.raises(SpaceMismatch):
        ps.compose_rational(f, f)


def test_interning_is_thread_safe():
    labels = [f"X{i % 7}" for i in range(200)]
    out = []
    threads = [threading.Thread(target=lambda l=l: out.append(ps.positive_space(l)))
               for l in labels]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for label in set(labels):
        assert len({id(s) for s in out if s.label == label}) == 1


@given(coeffs, coeffs)
def test_inverse_of_product(r, c):
    assert close(ps.inverse(ps.smul(r, el(c))), ps.smul(1 / r, ps.inverse(el(c))))


@given(coeffs)
def test_double_inverse(c):
    assert close(ps.inverse(ps.inverse(el(c))), el(c))


@given(coeffs, coeffs, exps)
def test_power_commutes_with_scaling(r, c, q):
    lhs = ps.power(ps.smul(r, el(c)), q)
    rhs = ps.smul(math.exp(float(q) * math.log(r)), ps.power(el(c), q))
    assert close(lhs, rhs)


@given(coeffs, exps, exps)
def test_power_addition(c, p, q):
    assert close(ps.power(el(c), p + q), ps.combine_powers(ps.power(el(c), p), ps.power(el(c), q)))


@given(coeffs, exps, exps)
def test_power_iteration(c, p, q):
    assert close(ps.power(el(c), p * q), ps.iterate_power(ps.power(el(c), p), q))


@given(coeffs, nonzero_exps)
def test_power_is_invertible(c, q):
    assert close(ps.power(ps.power(el(c), q), 1 / q), el(c))


@given(coeffs, st.integers(1, 8))
def test_roots_are_unique(c, n):
    r = ps.root(el(c, U.power(n)), n)
    assert r.space == U
    assert math.isclose(r.coeff ** n, c, rel_tol=1e-12)


@given(coeffs, coeffs, exps, coeffs)
def test_rational_map_homogeneity(img, c, q, r):
    f = ps.RationalMap(q, U, U.power(q), img)
    lhs = f(ps.smul(r, el(c)))
    rhs = ps.smul(math.exp(float(q) * math.log(r)), f(el(c)))
    assert close(lhs, rhs)


@given(coeffs, coeffs, exps)
def test_rational_map_through_point(a, b, q):
    f = ps.RationalMap.through(el(a), el(b, U.power(2)), q)
    assert f(el(a)) == el(b, U.power(2))


@given(coeffs, coeffs, nonzero_exps)
def test_inverse_map_undoes(img, c, q):
    f = ps.RationalMap(q, U, U.power(q), img)
    assert close(ps.invert_rational(f)(f(el(c))), el(c))


@given(coeffs, coeffs, exps, exps, coeffs)
def test_composition_chains(i1, i2, p, q, c):
    f = ps.RationalMap(p, U, U.power(2), i1)
    g = ps.RationalMap(q, U.power(2), U.power(3), i2)
    h = ps.compose_rational(g, f)
    x = el(c)
    expected = g(f(x))
    assert h(x).space == expected.space
    assert math.isclose(h(x).coeff, expected.coeff, rel_tol=1e-12)
