"""Multivariate layer, checked against sympy where an oracle helps."""

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from arcinv.polynomials import Polynomial
from arcinv.tseries import TPoly, TRational

VARS = ("x", "y", "z")
SYMS = sympy.symbols(VARS)
T = sympy.Symbol("t")

coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
exponents = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exponents, coeffs, max_size=6).map(
    lambda terms: Polynomial(VARS, terms)
)

small_tpolys = st.dictionaries(st.integers(0, 4), coeffs, max_size=3).map(TPoly)


def to_sympy(p: Polynomial):
    total = sympy.Integer(0)
    for e, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(SYMS, e):
            term *= s**k
        total += term
    return sympy.expand(total)


def tpoly_to_sympy(p: TPoly):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * T**e for e, c in p.items()),
        sympy.Integer(0),
    )


def test_construction_normalizes_zero_coefficients():
    p = Polynomial(VARS, {(1, 0, 0): 0, (0, 1, 0): 2})
    assert p.items() == [((0, 1, 0), Fraction(2))]


def test_exponent_arity_checked():
    with pytest.raises(ValueError):
        Polynomial(VARS, {(1, 0): 1})


def test_mismatched_variables_rejected():
    p = Polynomial(("x", "y"), {(1, 0): 1})
    q = Polynomial(("y", "x"), {(1, 0): 1})
    with pytest.raises(ValueError):
        p + q


def test_order_at_origin():
    p = Polynomial(VARS, {(2, 3, 0): 1, (0, 0, 6): -1})
    assert p.order_at_origin() == 5
    assert Polynomial.zero(VARS).order_at_origin() == math.inf


def test_coordinate_and_monomial():
    x = Polynomial.coordinate(VARS, "x")
    assert x.items() == [((1, 0, 0), Fraction(1))]
    m = Polynomial.monomial(VARS, (1, 2, 0), Fraction(3))
    assert m.items() == [((1, 2, 0), Fraction(3))]


@given(polys, polys)
def test_product_matches_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))


@given(polys, st.sampled_from(VARS))
def test_partial_derivative_matches_sympy(p, var):
    got = p.partial_derivative(var)
    expected = sympy.diff(to_sympy(p), sympy.Symbol(var))
    assert to_sympy(got) == sympy.expand(expected)


@settings(deadline=None)
@given(polys, st.tuples(coeffs, coeffs, coeffs))
def test_translate_matches_sympy(p, point):
    got = p.translate(point)
    subs = {
        s: s + sympy.Rational(a.numerator, a.denominator)
        for s, a in zip(SYMS, point)
    }
    expected = sympy.expand(to_sympy(p).subs(subs, simultaneous=True))
    assert to_sympy(got) == expected


@given(polys, st.tuples(coeffs, coeffs, coeffs))
def test_evaluate_matches_translate_constant_term(p, point):
    assert p.evaluate(point) == p.translate(point).constant_term


@settings(deadline=None)
@given(polys, small_tpolys, small_tpolys, small_tpolys)
def test_compose_with_polynomials_matches_sympy(p, a, b, c):
    values = [TRational(a), TRational(b), TRational(c)]
    got = p.compose(values)
    assert got.den == TPoly.one()
    subs = {s: tpoly_to_sympy(q) for s, q in zip(SYMS, (a, b, c))}
    expected = sympy.expand(to_sympy(p).subs(subs, simultaneous=True))
    assert sympy.expand(tpoly_to_sympy(got.num)) == expected


@given(polys, small_tpolys, small_tpolys, small_tpolys)
def test_compose_order_agrees_with_compose(p, a, b, c):
    values = [TRational(a), TRational(b), TRational(c)]
    assert p.compose_order(values) == p.compose(values).t_order()


@given(polys, st.tuples(small_tpolys, small_tpolys, small_tpolys))
def test_compose_respects_evaluation(p, parts):
    """Composing then evaluating at a rational point equals evaluating first."""
    values = [TRational(q) for q in parts]
    point = Fraction(1, 3)
    composed = p.compose(values)
    direct = p.evaluate([q.evaluate(point) for q in parts])
    assert composed.num.evaluate(point) == direct * composed.den.evaluate(point)


def test_compose_arity_checked():
    p = Polynomial(VARS, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        p.compose([TRational.t()])


def test_extend_variables():
    p = Polynomial(("x", "y"), {(2, 1): 5})
    q = p.extend_variables(("s",))
    assert q.variables == ("x", "y", "s")
    assert q.items() == [((2, 1, 0), Fraction(5))]


def test_str_is_deterministic():
    p = Polynomial(VARS, {(2, 3, 0): 1, (0, 0, 6): -1})
    assert str(p) == str(Polynomial(VARS, {(0, 0, 6): -1, (2, 3, 0): 1}))
