from fractions import Fraction
import math

import pytest
from hypothesis import given, settings, strategies as st

from germlab.parsing import parse_poly
from germlab.polyring import (
    GLOBAL,
    LOCAL,
    DimensionMismatch,
    Polynomial,
    leading_term,
    order,
)

from conftest import polynomials

XY = ["x", "y"]


def P(src, variables=XY):
    return parse_poly(src, variables)


def test_add_cancels():
    assert P("x + y") + P("-x") == P("y")


def test_add_zero_identity():
    p = P("x^2 - 3*x*y")
    assert p + Polynomial.zero(2) == p


def test_add_doubles():
    assert P("x^2") + P("x^2") == P("2*x^2")


def test_mul_difference_of_squares():
    assert P("x + y") * P("x - y") == P("x^2 - y^2")


def test_mul_one_identity():
    p = P("1/2*x^3 + y")
    assert p * Polynomial.one(2) == p


def test_mul_monomial_square():
    assert P("x*y") * P("x*y") == P("x^2*y^2")


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        P("x") + parse_poly("x", ["x"])
    with pytest.raises(DimensionMismatch):
        P("x") * parse_poly("x", ["x", "y", "z"])


def test_partial_examples():
    assert P("x^2 + y^2").partial(0) == P("2*x")
    assert P("x^3").partial(1).is_zero()
    assert P("(x*y)^2 + x^6 + y^6").partial(0) == P("2*x*y^2 + 6*x^5")


def test_partial_index_out_of_range():
    with pytest.raises(IndexError):
        P("x").partial(2)


def test_order_examples():
    assert order(P("x^2*y + x^5")) == 3
    assert order(parse_poly("x^3 + y^3 + z^3", ["x", "y", "z"])) == 3
    assert order(Polynomial.zero(2)) == math.inf


def test_leading_term_examples():
    p = P("x^2 + x^3")
    assert leading_term(p, LOCAL) == (1, (2, 0))
    assert leading_term(p, GLOBAL) == (1, (3, 0))
    # x > y among monomials of equal degree
    assert leading_term(P("3*x + 5*y"), LOCAL) == (3, (1, 0))
    assert leading_term(P("3*x + 5*y"), GLOBAL) == (3, (1, 0))


def test_leading_term_of_zero():
    with pytest.raises(ValueError):
        Polynomial.zero(2).leading_term()


def test_tie_break_is_degrevlex():
    # among degree-2 monomials in three variables: x^2 > xy > y^2 > xz > yz > z^2
    expected = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    monos = sorted(expected, key=LOCAL.key, reverse=True)
    assert monos == expected
    # local: lower degree wins, global: higher degree wins
    assert LOCAL.key((1, 0, 0)) > LOCAL.key((2, 0, 0))
    assert GLOBAL.key((1, 0, 0)) < GLOBAL.key((2, 0, 0))


def test_terms_iterate_in_descending_global_order():
    p = P("y + x^3 + x*y + 1")
    assert [e for e, _ in p.items()] == [(3, 0), (1, 1), (0, 1), (0, 0)]


def test_no_zero_coefficients_stored():
    p = Polynomial({(1, 0): 1, (0, 1): 0, (2, 0): Fraction(0)}, 2)
    assert len(p) == 1


def test_substitute_composes():
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    f = P("x^2*y")
    assert f.substitute([x + y, x - y]) == (x + y) ** 2 * (x - y)


same_ring = st.integers(1, 3).flatmap(lambda n: st.tuples(polynomials(n), polynomials(n), polynomials(n)))


@settings(max_examples=60, deadline=None)
@given(same_ring)
def test_ring_axioms(triple):
    p, q, r = triple
    n = p.n
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + Polynomial.zero(n) == p
    assert p * Polynomial.one(n) == p
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(same_ring, st.data())
def test_leibniz_rule(triple, data):
    p, q, _ = triple
    i = data.draw(st.integers(0, p.n - 1))
    assert (p * q).partial(i) == p * q.partial(i) + q * p.partial(i)


@settings(max_examples=60, deadline=None)
@given(same_ring)
def test_order_is_additive(triple):
    p, q, _ = triple
    if p.is_zero() or q.is_zero():
        return
    assert order(p * q) == order(p) + order(q)


@settings(max_examples=60, deadline=None)
@given(same_ring)
def test_leading_term_is_multiplicative(triple):
    p, q, _ = triple
    if p.is_zero() or q.is_zero():
        return
    for ord_ in (LOCAL, GLOBAL):
        a, b, c = p.leading_term(ord_), q.leading_term(ord_), (p * q).leading_term(ord_)
        assert c.coeff == a.coeff * b.coeff
        assert c.exp == tuple(x + y for x, y in zip(a.exp, b.exp))
