from itertools import combinations, combinations_with_replacement
from math import comb

import pytest

from hessideals import symfun as sf
from hessideals.claims import identity_cases
from hessideals.poly import Polynomial, parse_polynomial

from golden import B_4, B_INV_4


def brute_e(d, S, n):
    total = Polynomial.zero(n)
    for idx in combinations(sorted(S), d):
        m = [0] * n
        for i in idx:
            m[i - 1] += 1
        total = total + Polynomial({tuple(m): 1}, n)
    return total if d >= 0 else Polynomial.zero(n)


def brute_h(d, S, n):
    total = Polynomial.zero(n)
    for idx in combinations_with_replacement(sorted(S), d):
        m = [0] * n
        for i in idx:
            m[i - 1] += 1
        total = total + Polynomial({tuple(m): 1}, n)
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_truncated_functions_match_brute_force(n):
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            S = range(lo, hi + 1)
            for d in range(0, n + 2):
                assert sf.e_range(d, lo, hi, n) == brute_e(d, S, n)
                assert sf.h_range(d, lo, hi, n) == brute_h(d, S, n)


def test_worked_values():
    assert sf.e_range(2, 1, 3, 4) == parse_polynomial("x1*x2 + x1*x3 + x2*x3", 4)
    assert sf.h_range(2, 3, 4, 4) == parse_polynomial("x3^2 + x3*x4 + x4^2", 4)


def test_conventions():
    n = 3
    one = Polynomial.one(n)
    assert sf.e_range(0, 1, 3, n) == one
    assert sf.h_range(0, 2, 1, n) == one  # empty set, degree zero
    assert sf.e_range(-1, 1, 3, n).is_zero()
    assert sf.h_range(-2, 1, 3, n).is_zero()
    assert sf.e_range(4, 1, 3, n).is_zero()
    assert sf.h_range(2, 2, 1, n).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_term_counts(n):
    for r in range(1, n + 1):
        for d in range(0, r + 1):
            assert len(sf.e_range(d, 1, r, n)) == comb(r, d)
            assert len(sf.h_range(d, 1, r, n)) == comb(r + d - 1, d)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_identity_families_hold(n):
    families = set()
    for name, params, lhs, rhs in identity_cases(n):
        families.add(name)
        assert lhs == rhs, (name, params)
    assert "base-case" in families and "crucial-identity" in families


def test_fixed_varset_rejects_bad_parameters():
    with pytest.raises(ValueError):
        sf.elem_fixed_varset_expansion(3, 3, 0, 4)
    with pytest.raises(ValueError):
        sf.elem_fixed_varset_expansion(1, 3, 3, 4)


def _entry(cell, i, j, n):
    if cell is None:
        return Polynomial.zero(n)
    sign, kind, lo = cell
    f = sf.e_range if kind == "e" else sf.h_range
    return f(i - j, lo, n, n).scale(sign)


def test_matrices_match_worked_example():
    n = 4
    B = sf.matrix_B(n)
    Binv = sf.matrix_B_inverse(n)
    for i in range(n):
        for j in range(n):
            assert B[i][j] == _entry(B_4[i][j], i + 1, j + 1, n), ("B", i, j)
            assert Binv[i][j] == _entry(B_INV_4[i][j], i + 1, j + 1, n), ("B^-1", i, j)


@pytest.mark.parametrize("n", range(1, 7))
def test_matrix_relations(n):
    B, Binv = sf.matrix_B(n), sf.matrix_B_inverse(n)
    assert sf.mat_vec(B, sf.h_vector(n)) == sf.e_vector(n)
    assert sf.mat_mul(B, Binv) == sf.identity_matrix(n)
    assert sf.mat_mul(Binv, B) == sf.identity_matrix(n)
    assert [B[i][i].coefficient((0,) * n) for i in range(n)] == [(-1) ** i for i in range(n)]
