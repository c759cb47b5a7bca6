from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessideals.poly import (
    GRLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    divide,
    mono_divides,
    mono_lcm,
    monomial,
    parse_polynomial,
    remainder,
)

N = 3

coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
monos = st.tuples(*[st.integers(0, 3)] * N)
polys = st.dictionaries(monos, coeffs, max_size=6).map(lambda d: Polynomial(d, N))
nonzero_polys = polys.filter(lambda p: not p.is_zero())
orders = st.sampled_from([LEX, GRLEX, MonomialOrder("lex", (2, 1, 0)), MonomialOrder("grlex", (1, 2, 0))])


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(N)
    assert a * Polynomial.one(N) == a


@settings(max_examples=60, deadline=None)
@given(polys, st.lists(nonzero_polys, min_size=1, max_size=3), orders)
def test_division_contract(f, divisors, order):
    qs, r = divide(f, divisors, order)
    total = r
    for q, g in zip(qs, divisors):
        total = total + q * g
    assert total == f
    lms = [g.leading_monomial(order) for g in divisors]
    for m in r.monomials():
        assert not any(mono_divides(lm, m) for lm in lms)
    assert remainder(f, divisors, order) == r


@settings(max_examples=100, deadline=None)
@given(monos, monos, monos, orders)
def test_order_is_monomial_order(a, b, c, order):
    ab = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    if order.greater(a, b):
        assert order.greater(ab, bc)
        assert not order.greater(b, a)
    assert order.compare(a, a) == 0
    # every monomial dominates 1
    assert not order.greater((0,) * N, a)


@settings(max_examples=60, deadline=None)
@given(polys)
def test_parse_roundtrip(p):
    assert parse_polynomial(p.to_text(), N) == p
    assert parse_polynomial(p.to_text(LEX), N) == p


def test_leading_term_lex_example():
    f = parse_polynomial("x3^4 + x1*x2^3 + x1^2*x2*x4 + x1*x2*x3*x4")
    assert f.leading_monomial(LEX) == monomial(4, {1: 2, 2: 1, 4: 1})
    assert f.leading_monomial(GRLEX) == monomial(4, {1: 2, 2: 1, 4: 1})


def test_lex_compares_leftmost_entry():
    assert LEX.greater(monomial(2, {1: 1, 2: 2}), monomial(2, {1: 1, 2: 1}))
    assert LEX.greater(monomial(3, {1: 1}), monomial(3, {2: 5, 3: 5}))
    assert GRLEX.greater(monomial(3, {2: 5, 3: 5}), monomial(3, {1: 1}))


def test_reversed_precedence():
    rev = MonomialOrder("lex", (3, 2, 1, 0))
    f = parse_polynomial("x1 + x2 + x3", 4)
    assert f.leading_monomial(rev) == monomial(4, {3: 1})
    assert MonomialOrder("lex", (0, 1, 2)) == LEX


def test_fraction_coefficients_normalize():
    p = Polynomial({(1, 0): Fraction(4, 2)}, 2)
    assert p.coefficient((1, 0)) == 2 and isinstance(p.coefficient((1, 0)), int)
    assert p.monic().coefficient((1, 0)) == 1
    half = parse_polynomial("1/2*x1 - 3/4", 1)
    assert half.coefficient((0,)) == Fraction(-3, 4)


def test_zero_and_text():
    z = Polynomial.zero(2)
    assert z.is_zero() and not z and z.to_text() == "0"
    assert parse_polynomial("-x1^2 + 2*x1*x2 - 1", 2).to_text() == "-x1^2 + 2*x1*x2 - 1"


def test_mismatched_rings_rejected():
    with pytest.raises(ValueError):
        Polynomial.var(1, 2) + Polynomial.var(1, 3)


def test_helpers():
    assert mono_lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)
    assert mono_divides((1, 0), (1, 1)) and not mono_divides((2, 0), (1, 1))
    with pytest.raises(ValueError):
        MonomialOrder("revlex")
    with pytest.raises(ValueError):
        MonomialOrder.from_name("deglex")
