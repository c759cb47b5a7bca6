"""Monomial bases, ranks and graded dimensions of ``Q[x_1..x_n] / J_h``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterator, List, Tuple

from .hessenberg import DegreeTuple, HessenbergFunction, to_degree_tuple
from .ideals import j_generators
from .poly import LEX, Monomial, MonomialOrder, Polynomial, monomial, remainder

__all__ = [
    "MonomialBasis",
    "lt_ideal",
    "iter_basis",
    "monomial_basis",
    "rank",
    "graded_dimensions",
    "basis_degree_histogram",
    "normal_form",
    "quotient_record",
]


def _as_h(h) -> HessenbergFunction:
    return h if isinstance(h, HessenbergFunction) else HessenbergFunction(h)


@dataclass(frozen=True)
class MonomialBasis:
    h: HessenbergFunction
    beta: DegreeTuple
    monomials: Tuple[Monomial, ...]

    @property
    def rank(self) -> int:
        return len(self.monomials)


def lt_ideal(h) -> List[Monomial]:
    """Generators ``x_i^{beta_i}`` of the leading-term ideal of ``J_h``."""
    h = _as_h(h)
    n = len(h)
    beta = to_degree_tuple(h)
    return [monomial(n, {i: beta[i - 1]}) for i in range(1, n + 1)]


def iter_basis(h) -> Iterator[Monomial]:
    """Stream ``x^alpha`` with ``0 <= alpha_i < beta_i`` in increasing lex order."""
    beta = to_degree_tuple(_as_h(h))
    return iter(product(*(range(b) for b in beta)))


def monomial_basis(h) -> MonomialBasis:
    h = _as_h(h)
    return MonomialBasis(h, to_degree_tuple(h), tuple(iter_basis(h)))


def rank(h) -> int:
    return prod(to_degree_tuple(_as_h(h)))


def graded_dimensions(h) -> List[int]:
    """Coefficients of ``prod_i (1 + t + ... + t^{beta_i - 1})``."""
    coeffs = [1]
    for b in to_degree_tuple(_as_h(h)):
        out = [0] * (len(coeffs) + b - 1)
        for k, c in enumerate(coeffs):
            for s in range(b):
                out[k + s] += c
        coeffs = out
    return coeffs


def basis_degree_histogram(h) -> List[int]:
    """Degree counts of the basis monomials, computed by enumeration."""
    counts = Counter(sum(m) for m in iter_basis(h))
    top = max(counts)
    return [counts.get(d, 0) for d in range(top + 1)]


def normal_form(f: Polynomial, h, order: MonomialOrder = LEX) -> Polynomial:
    """Remainder of ``f`` modulo the Gröbner basis ``J_h``; supported on the monomial basis."""
    return remainder(f, j_generators(h, order).generators, order)


def quotient_record(h) -> dict:
    h = _as_h(h)
    return {
        "h": list(h),
        "beta": list(to_degree_tuple(h)),
        "rank": rank(h),
        "graded_dims": graded_dimensions(h),
    }
