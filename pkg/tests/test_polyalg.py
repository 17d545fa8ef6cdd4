from __future__ import annotations

import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qnewton.errors import DomainError, DuplicateNode, InexactDivision
from qnewton.polyalg import (
    BivarPoly,
    LaurentPoly,
    RatFunc,
    RatPolyX,
    ZPoly,
    content_q,
    exact_div,
    gcd_zpoly,
    lagrange_interpolate,
    q_binom,
    q_factorial,
    q_int,
)

Q = sympy.Symbol("q")


def zp(*coeffs):
    """ZPoly from ascending coefficients."""
    return ZPoly.from_dense(list(coeffs))


def to_sympy(p):
    return sympy.Poly(sum((v * Q ** e for e, v in p.items()), sympy.Integer(0)), Q)


small = st.integers(-6, 6)
zpolys = st.dictionaries(st.integers(0, 5), small, max_size=5).map(ZPoly)
laurents = st.dictionaries(st.integers(-3, 3), small, max_size=4).map(LaurentPoly)
bivars = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small,
                         max_size=5).map(BivarPoly)
nonzero = zpolys.filter(bool)
ratfuncs = st.tuples(zpolys, nonzero).map(lambda t: RatFunc(*t))


def test_q_int_examples():
    assert q_int(0) == 0
    assert q_int(3) == zp(1, 1, 1)
    assert q_int(-2) == LaurentPoly({-2: -1, -1: -1})


@given(st.integers(0, 8))
def test_q_int_negative_rule(n):
    assert q_int(-n) == -(q_int(n).shift(-n))
    assert q_int(n).evaluate(1) == n


def test_q_factorial_examples():
    assert q_factorial(0) == 1
    assert q_factorial(2) == zp(1, 1)
    assert q_factorial(3) == zp(1, 2, 2, 1)


def test_q_binom_examples():
    assert q_binom(4, 0) == 1
    assert q_binom(2, 1) == zp(1, 1)
    assert q_binom(4, 2) == zp(1, 1, 2, 1, 1)
    with pytest.raises(DomainError):
        q_binom(2, 3)
    with pytest.raises(DomainError):
        q_binom(-1, 0)


@pytest.mark.parametrize("n", range(0, 9))
def test_q_binom_properties(n):
    for k in range(n + 1):
        c = q_binom(n, k)
        top = k * (n - k)
        assert c.degree() == top
        assert all(c.coeff(i) >= 0 for i in range(top + 1))
        assert all(c.coeff(i) == c.coeff(top - i) for i in range(top + 1))
        assert c.evaluate(1) == math.comb(n, k)


def test_gcd_examples():
    assert gcd_zpoly(zp(-1, 0, 1), zp(-1, 1)) == zp(-1, 1)
    f = zp(4, 0, -2)
    assert gcd_zpoly(f, ZPoly()) == zp(-4, 0, 2)
    assert gcd_zpoly(zp(1, 1) ** 2, q_factorial(3)) == zp(1, 1)
    assert gcd_zpoly(zp(2, 2), zp(4)) == zp(2)


@settings(max_examples=150, deadline=None)
@given(a=zpolys, b=zpolys, c=nonzero)
def test_gcd_against_sympy(a, b, c):
    a, b = a * c, b * c
    if not a and not b:
        return
    g = gcd_zpoly(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b))
    expected_coeffs = {m[0]: int(v) for m, v in expected.terms()}
    e = ZPoly(expected_coeffs)
    if e.lc() < 0:
        e = -e
    assert g == e
    if a:
        a.exact_quotient(g)
    if b:
        b.exact_quotient(g)


@settings(max_examples=100, deadline=None)
@given(a=zpolys, b=zpolys, c=zpolys)
def test_ring_axioms_zpoly(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=80, deadline=None)
@given(a=laurents, b=laurents, c=laurents)
def test_ring_axioms_laurent(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.substitute_inverse().substitute_inverse() == a


@settings(max_examples=80, deadline=None)
@given(a=bivars, b=bivars, c=bivars)
def test_ring_axioms_bivar(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.evaluate(2, 3) * b.evaluate(2, 3) == (a * b).evaluate(2, 3)


@settings(max_examples=60, deadline=None)
@given(a=ratfuncs, b=ratfuncs, c=ratfuncs)
def test_field_axioms_ratfunc(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
    for r in (a, b, a * b, a + c):
        assert r.den.lc() > 0
        assert gcd_zpoly(r.num, r.den).degree() <= 0 or not r.num
        assert math.gcd(r.num.content(), r.den.content()) in (0, 1) or not r.num


def test_ratfunc_normalize_examples():
    r = RatFunc(zp(-1, 0, 1), zp(-1, 1))
    assert r.num == zp(1, 1) and r.den == 1
    inv = RatFunc(1, zp(1, 1))
    assert inv + RatFunc(zp(0, 1), zp(1, 1)) == 1
    assert RatFunc(2, 4) == RatFunc(1, 2)
    assert RatFunc(zp(1), zp(0, -2)) == RatFunc(-1, zp(0, 2))
    assert RatFunc(zp(2, 2), zp(0, 2)).den == zp(0, 1)
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


def test_ratpolyx_evaluate_example():
    e = RatPolyX({1: zp(0, 1), 0: 1})
    assert e.evaluate(q_int(2)) == zp(1, 1, 1)
    assert e(RatFunc(1, zp(0, 1))) == 2


def test_content_examples():
    f = BivarPoly.from_slices({0: zp(1, 1), 1: zp(1, 1).shift(1)})
    assert content_q(f) == zp(1, 1)
    anti = BivarPoly.from_slices({0: zp(1, 1), 1: zp(0, 2, 2), 2: zp(0, 0, 1, 1)})
    assert content_q(anti) == zp(1, 1)
    assert content_q(BivarPoly.from_slices({0: zp(1), 3: zp(5, 7)})) == 1


def test_exact_div_examples():
    anti = BivarPoly.from_slices({0: zp(1, 1), 1: zp(0, 2, 2), 2: zp(0, 0, 1, 1)})
    assert exact_div(anti, zp(1, 1)) == BivarPoly({(0, 0): 1, (1, 1): 2, (2, 2): 1})
    with pytest.raises(InexactDivision):
        exact_div(BivarPoly({(0, 1): 1, (0, 0): 1}), zp(0, 1))


@settings(max_examples=80, deadline=None)
@given(f=bivars, d=nonzero)
def test_exact_div_round_trip(f, d):
    assert exact_div(f * d, d) == f


def test_exact_quotient_rejects_remainder():
    with pytest.raises(InexactDivision):
        zp(1, 0, 1).exact_quotient(zp(1, 1))
    assert zp(-1, 0, 1) // zp(1, 1) == zp(-1, 1)


def test_lagrange_examples():
    e = lagrange_interpolate([(q_int(0), 1), (q_int(1), zp(1, 1))])
    assert e == RatPolyX({1: zp(0, 1), 0: 1})
    assert str(e) == "q*x + 1"
    const = lagrange_interpolate([(q_int(n), RatFunc(3, zp(1, 1))) for n in range(4)])
    assert const == RatPolyX({0: RatFunc(3, zp(1, 1))})
    with pytest.raises(DuplicateNode):
        lagrange_interpolate([(1, 1), (RatFunc(2, 2), 3)])


@settings(max_examples=25, deadline=None)
@given(ys=st.lists(ratfuncs, min_size=1, max_size=4))
def test_lagrange_reproduces_data(ys):
    pts = [(q_int(n), y) for n, y in enumerate(ys)]
    e = lagrange_interpolate(pts)
    assert e.degree() < len(ys)
    for x, y in pts:
        assert e.evaluate(x) == y


def test_zero_conventions():
    assert ZPoly().q_max() == -math.inf
    assert ZPoly().q_min() == math.inf
    assert ZPoly().degree() == -1


def test_text_rendering():
    assert str(zp(1, 2, 1)) == "q^2 + 2*q + 1"
    assert str(zp(1, -1)) == "-q + 1"
    anti = BivarPoly.from_slices({0: zp(1, 1), 1: zp(0, 2, 2), 2: zp(0, 0, 1, 1)})
    assert str(anti) == "(q^3+q^2)*x^2 + (2*q^2+2*q)*x + (q+1)"
    assert str(BivarPoly({(1, 1): 1, (0, 0): 1})) == "q*x + 1"
    assert str(RatFunc(1, zp(1, 1))) == "(1)/(q + 1)"
    assert str(RatPolyX({2: RatFunc(zp(1, 2), zp(1, 1)), 0: Fraction(-3, 2)})) == (
        "((2*q+1)/(q+1))*x^2 + (-3/2)")


def test_evaluate_exact():
    assert q_int(-2).evaluate(2) == Fraction(-3, 4)
    assert RatFunc(1, zp(1, 1)).evaluate(1) == Fraction(1, 2)
