import pytest
import sympy

from hessideals.groebner import (
    COPRIME,
    S_PAIRS,
    buchberger,
    ideal_membership,
    is_groebner,
    reduce_basis,
    s_polynomial,
)
from hessideals.hessenberg import enumerate_hessenberg
from hessideals.ideals import antidiagonal_generators, c_generators, j_generators
from hessideals.poly import GRLEX, LEX, MonomialOrder, Polynomial, parse_polynomial


def to_sympy(p: Polynomial, xs):
    return sympy.Add(*[sympy.Rational(str(c)) * sympy.Mul(*[x**e for x, e in zip(xs, m)]) for m, c in p.items()])


def sympy_reduced_basis(gens, order, n):
    xs = sympy.symbols(f"x1:{n + 1}")
    G = sympy.groebner([to_sympy(g, xs) for g in gens], *xs, order=order.name)
    # sympy scales to primitive integer polynomials; ours are monic
    return {sympy.expand(g / sympy.LC(g, *xs, order=order.name)) for g in G.exprs}, xs


def test_s_polynomial_textbook():
    f = parse_polynomial("x1^3*x2^2 - x1^2*x2^3 + x1", 2)
    g = parse_polynomial("3*x1^4*x2 + x2^2", 2)
    s = s_polynomial(f, g, GRLEX)
    assert s == parse_polynomial("-x1^3*x2^3 + x1^2 - 1/3*x2^3", 2)


def test_buchberger_textbook_example():
    f1 = parse_polynomial("x1^3 - 2*x1*x2", 2)
    f2 = parse_polynomial("x1^2*x2 - 2*x2^2 + x1", 2)
    gb = buchberger([f1, f2], GRLEX)
    assert [g.to_text(GRLEX) for g in gb.basis] == ["x1^2", "x1*x2", "x2^2 - 1/2*x1"]
    assert is_groebner(gb.basis, GRLEX)


@pytest.mark.parametrize("kind", ["C", "AD", "J"])
@pytest.mark.parametrize("order", [LEX, GRLEX], ids=["lex", "grlex"])
@pytest.mark.parametrize("n", [3, 4])
def test_buchberger_agrees_with_sympy(kind, order, n):
    builder = {"C": c_generators, "AD": antidiagonal_generators, "J": j_generators}[kind]
    for h in enumerate_hessenberg(n):
        gens = builder(h, order).distinct()
        ours = buchberger(gens, order)
        expected, xs = sympy_reduced_basis(gens, order, n)
        assert {sympy.expand(to_sympy(g, xs)) for g in ours.basis} == expected, h


def test_buchberger_random_cases_against_sympy():
    polys = [
        ["x1^2 + x2*x3 - 1", "x1*x2 - x3^2", "x2^2 - x1 + 2*x3"],
        ["x1*x2*x3 - 1", "x1 + x2 + x3", "x1*x2 + x2*x3 + x1*x3"],
        ["2*x1^2 - x2", "3*x2^2 - x3", "x3^2 - x1"],
    ]
    for order in (LEX, GRLEX):
        for texts in polys:
            gens = [parse_polynomial(t, 3) for t in texts]
            ours = buchberger(gens, order)
            expected, xs = sympy_reduced_basis(gens, order, 3)
            assert {sympy.expand(to_sympy(g, xs)) for g in ours.basis} == expected


def test_is_groebner_certificates():
    gens = j_generators((3, 3, 3, 4)).generators
    assert is_groebner(gens, LEX).certificate == COPRIME
    assert is_groebner(gens, LEX, method="s-pairs").certificate == S_PAIRS
    bad = is_groebner(antidiagonal_generators((3, 3, 3, 4)).generators, LEX)
    assert not bad and bad.witness is not None and bad.pair is not None
    with pytest.raises(ValueError):
        is_groebner(gens, LEX, method="fast")
    with pytest.raises(ValueError):
        is_groebner([Polynomial.zero(2)])


def test_reversed_order_breaks_groebner_property():
    rev = MonomialOrder("lex", (3, 2, 1, 0))
    J = j_generators((3, 3, 3, 4)).generators
    assert not is_groebner(J, rev)
    f = parse_polynomial("x1 + x2 + x3", 4)
    assert ideal_membership(f, buchberger(J, LEX))
    assert f.leading_monomial(rev) == (0, 0, 1, 0)
    assert all(g.leading_monomial(rev)[:3] == (0, 0, 0) for g in J)


def test_membership_witness():
    gb = buchberger(j_generators((3, 3, 3, 4)).generators, LEX)
    f = parse_polynomial("x1*x4 + x4^2", 4)
    res = ideal_membership(f, gb)
    assert res.member
    total = Polynomial.zero(4)
    for q, g in zip(res.witness, gb.basis):
        total = total + q * g
    assert total == f
    miss = ideal_membership(parse_polynomial("x3^2", 4), gb)
    assert not miss and miss.witness == parse_polynomial("x3^2", 4)


def test_reduce_basis_is_idempotent():
    gens = c_generators((2, 3, 3)).distinct()
    gb = buchberger(gens, LEX)
    assert reduce_basis(gb.basis, LEX) == list(gb.basis)
    assert all(g.leading_term(LEX)[0] == 1 for g in gb.basis)
