"""Univariate layer: polynomials in t, canonical quotients, gcd.

sympy is used as an independent oracle for the gcd, which has its own
hand-rolled pseudo-remainder implementation worth distrusting.
"""

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from arcinv.tseries import TPoly, TRational, t_gcd

T = sympy.Symbol("t")

coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=9)
nonzero_coeffs = coeffs.filter(bool)

tpolys = st.dictionaries(st.integers(0, 10), coeffs, max_size=6).map(TPoly)
nonzero_tpolys = tpolys.filter(lambda p: not p.is_zero)

# denominators must not vanish at t = 0
unit_tpolys = st.tuples(
    nonzero_coeffs, st.dictionaries(st.integers(1, 8), coeffs, max_size=4)
).map(lambda pair: TPoly({0: pair[0]}) + TPoly(pair[1]))

trationals = st.tuples(tpolys, unit_tpolys).map(lambda nd: TRational(nd[0], nd[1]))


def to_sympy(p: TPoly):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * T**e for e, c in p.items()),
        sympy.Integer(0),
    )


def test_zero_conventions():
    zero = TPoly.zero()
    assert zero.is_zero
    assert zero.degree == -1
    assert zero.order() == math.inf
    assert not zero


def test_basic_arithmetic():
    p = TPoly.from_coeffs([1, 2])
    q = TPoly.from_coeffs([0, 0, 3])
    assert (p * q) == TPoly({2: 3, 3: 6})
    assert (p + q).degree == 2
    assert (p - p).is_zero
    assert p.scale(Fraction(1, 2)) == TPoly({0: Fraction(1, 2), 1: 1})


def test_order_and_leading():
    p = TPoly({3: 5, 7: -1})
    assert p.order() == 3
    assert p.degree == 7
    assert p.leading_coefficient == -1
    assert p.monic().leading_coefficient == 1


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        TPoly({-1: 1})


def test_evaluate():
    p = TPoly.from_coeffs([1, 0, 2])
    assert p.evaluate(Fraction(1, 2)) == Fraction(3, 2)


def test_stretch_scales_orders():
    p = TPoly({1: 2, 3: 1})
    assert p.stretch(4) == TPoly({4: 2, 12: 1})


@given(tpolys, nonzero_tpolys)
def test_divrem_identity(a, b):
    q, r = a.divrem(b)
    assert a == q * b + r
    assert r.degree < b.degree


@given(tpolys, nonzero_tpolys)
def test_exact_div_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


@settings(deadline=None)
@given(tpolys, tpolys)
def test_gcd_matches_sympy(a, b):
    assume(not (a.is_zero and b.is_zero))
    got = t_gcd(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b), T)
    expected = sympy.Poly(expected, T).monic().as_expr()
    assert sympy.expand(to_sympy(got) - expected) == 0


@given(nonzero_tpolys, nonzero_tpolys)
def test_gcd_divides_both(a, b):
    g = t_gcd(a, b)
    assert a.divrem(g)[1].is_zero
    assert b.divrem(g)[1].is_zero


def test_gcd_pulls_out_t_powers():
    a = TPoly({4: 1, 6: 1})
    b = TPoly({2: 3})
    assert t_gcd(a, b) == TPoly.t(2)


def test_gcd_of_zeros_is_zero():
    assert t_gcd(TPoly.zero(), TPoly.zero()).is_zero


def test_trational_canonical_form():
    v = TRational(TPoly({1: 2, 2: 2}), TPoly({0: 2, 1: 2}))
    # (2t + 2t^2) / (2 + 2t) = t
    assert v.num == TPoly.t()
    assert v.den == TPoly.one()


def test_trational_rejects_vanishing_denominator():
    with pytest.raises(ValueError):
        TRational(TPoly.one(), TPoly.t())
    with pytest.raises(ZeroDivisionError):
        TRational(TPoly.one(), TPoly.zero())


@given(trationals)
def test_canonical_invariants(v):
    if v.is_zero:
        assert v.den == TPoly.one()
    else:
        assert v.den.constant_term != 0
        assert v.den.leading_coefficient == 1
        assert t_gcd(v.num, v.den) == TPoly.one()


@given(trationals, trationals, trationals)
def test_field_identities(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TRational.zero()


@given(trationals)
def test_division_inverts_multiplication(a):
    assume(not a.is_zero)
    assert (a * a) / a == a
    assert a / a == TRational.one()


@given(trationals, st.integers(0, 5))
def test_pow_is_repeated_multiplication(a, k):
    by_hand = TRational.one()
    for _ in range(k):
        by_hand = by_hand * a
    assert a**k == by_hand


@given(trationals, st.integers(2, 5))
def test_ramify_scales_order(v, n):
    assume(not v.is_zero)
    assert v.ramify(n).t_order() == n * v.t_order()


@given(trationals, trationals, st.integers(2, 4))
def test_ramify_is_a_homomorphism(a, b, n):
    assert (a * b).ramify(n) == a.ramify(n) * b.ramify(n)
    assert (a + b).ramify(n) == a.ramify(n) + b.ramify(n)


def test_value_at_zero():
    v = TRational(TPoly.from_coeffs([3, 1]), TPoly.from_coeffs([2, 5]))
    assert v.value_at_zero() == Fraction(3, 2)


def test_t_order_of_zero_is_infinite():
    assert TRational.zero().t_order() == math.inf
