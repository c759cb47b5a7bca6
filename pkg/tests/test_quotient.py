from math import factorial

import pytest

from hessideals.hessenberg import HessenbergFunction, enumerate_hessenberg
from hessideals.ideals import j_generators
from hessideals.poly import GRLEX, LEX, mono_divides, parse_polynomial
from hessideals.quotient import (
    basis_degree_histogram,
    graded_dimensions,
    lt_ideal,
    monomial_basis,
    normal_form,
    quotient_record,
    rank,
)


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_is_product_of_beta(n):
    for h in enumerate_hessenberg(n):
        basis = monomial_basis(h)
        assert basis.rank == rank(h)
        assert graded_dimensions(h) == basis_degree_histogram(h)
        lts = lt_ideal(h)
        assert not any(mono_divides(lt, m) for m in basis.monomials for lt in lts)


@pytest.mark.parametrize("n", range(1, 7))
def test_maximal_rank_is_factorial(n):
    h = HessenbergFunction.maximal(n)
    dims = graded_dimensions(h)
    assert rank(h) == factorial(n)
    assert dims == dims[::-1]


def test_small_values():
    assert rank((3, 3, 3, 4)) == 6
    assert graded_dimensions((3, 3, 3)) == [1, 2, 2, 1]
    assert rank((1, 2, 3, 4)) == 1
    assert quotient_record((2, 3, 3)) == {"h": [2, 3, 3], "beta": [1, 2, 2], "rank": 4, "graded_dims": [1, 2, 1]}


def test_leading_terms_are_beta_powers():
    h = (3, 3, 3, 4)
    for order in (LEX, GRLEX):
        assert [g.leading_monomial(order) for g in j_generators(h, order).generators] == lt_ideal(h)


def test_normal_form_lands_in_basis():
    h = (3, 3, 3, 4)
    basis = set(monomial_basis(h).monomials)
    f = parse_polynomial("x1^3*x2 + x2^4*x3 - 7*x3^2*x4 + x1*x2*x3", 4)
    for order in (LEX, GRLEX):
        r = normal_form(f, h, order)
        assert set(r.monomials()) <= basis
        assert normal_form(r, h, order) == r
