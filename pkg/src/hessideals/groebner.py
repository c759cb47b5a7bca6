"""Gröbner bases over the rationals: certification, Buchberger completion, membership."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .poly import (
    LEX,
    MonomialOrder,
    Polynomial,
    _remainder_prepared,
    divide,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    remainder,
)

__all__ = [
    "COPRIME",
    "S_PAIRS",
    "GroebnerBasis",
    "GroebnerCheck",
    "Membership",
    "s_polynomial",
    "is_groebner",
    "buchberger",
    "reduce_basis",
    "ideal_membership",
]

COPRIME = "coprime-leading-monomials"
S_PAIRS = "all-s-pairs-reduce-to-zero"


@dataclass(frozen=True)
class GroebnerBasis:
    """A generating set certified to be a Gröbner basis under ``order``."""

    basis: Tuple[Polynomial, ...]
    order: MonomialOrder
    certificate: str

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.basis]

    def reduce(self, f: Polynomial) -> Polynomial:
        return remainder(f, self.basis, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def to_text(self) -> List[str]:
        return [g.to_text(self.order) for g in self.basis]

    def to_dict(self) -> dict:
        return {"order": self.order.name, "certificate": self.certificate, "basis": self.to_text()}


@dataclass(frozen=True)
class GroebnerCheck:
    """Outcome of :func:`is_groebner`; falsy when the set is not a Gröbner basis."""

    certificate: Optional[str]
    witness: Optional[Polynomial] = None
    pair: Optional[Tuple[int, int]] = None

    def __bool__(self):
        return self.certificate is not None


@dataclass(frozen=True)
class Membership:
    member: bool
    quotients: Optional[List[Polynomial]]
    remainder: Polynomial

    def __bool__(self):
        return self.member

    @property
    def witness(self):
        return self.quotients if self.member else self.remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = LEX) -> Polynomial:
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    return f.shift(mono_div(lcm, mf), Fraction(1) / cf) - g.shift(mono_div(lcm, mg), Fraction(1) / cg)


def _nonzero(gens: Sequence[Polynomial]) -> List[Polynomial]:
    gens = list(gens)
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    return gens


def is_groebner(gens: Sequence[Polynomial], order: MonomialOrder = LEX, method: str = "auto") -> GroebnerCheck:
    """Certify that ``gens`` is a Gröbner basis of the ideal it generates.

    ``method="auto"`` returns the coprimality certificate when every pair of
    leading monomials is coprime and otherwise reduces every S-polynomial.
    ``method="s-pairs"`` always does the full S-pair reduction.
    """
    if method not in ("auto", "s-pairs"):
        raise ValueError(f"unknown method {method!r}")
    gens = _nonzero(gens)
    lms = [g.leading_monomial(order) for g in gens]
    if method == "auto" and all(mono_coprime(a, b) for a, b in combinations(lms, 2)):
        return GroebnerCheck(COPRIME)
    for i, j in combinations(range(len(gens)), 2):
        r = remainder(s_polynomial(gens[i], gens[j], order), gens, order)
        if r:
            return GroebnerCheck(None, witness=r, pair=(i, j))
    return GroebnerCheck(S_PAIRS)


def _prepared(g: Polynomial, order: MonomialOrder):
    c, m = g.leading_term(order)
    return (m, c, list(g.items()))


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = LEX) -> GroebnerBasis:
    """Reduced Gröbner basis of ``<gens>``.

    Pairs are processed by the normal strategy (smallest lcm degree first,
    ties by the order on the lcm); the coprime and chain criteria skip pairs.
    """
    gens = _nonzero(gens)
    G: List[Polynomial] = []
    prepared = []
    lms = []
    seen = set()
    for g in gens:
        g = g.monic(order)
        if g in seen:
            continue
        seen.add(g)
        G.append(g)
        prepared.append(_prepared(g, order))
        lms.append(prepared[-1][0])

    heap: List[tuple] = []
    pending = set()

    def push(i: int, j: int) -> None:
        lcm = mono_lcm(lms[i], lms[j])
        heapq.heappush(heap, (sum(lcm), order.key(lcm), i, j))
        pending.add((i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        if mono_coprime(lms[i], lms[j]):
            continue
        lcm = mono_lcm(lms[i], lms[j])
        if _chain_criterion(i, j, lcm, lms, pending):
            continue
        s = s_polynomial(G[i], G[j], order)
        r = _remainder_prepared(s, prepared, order)
        if r.is_zero():
            continue
        r = r.monic(order)
        G.append(r)
        prepared.append(_prepared(r, order))
        lms.append(prepared[-1][0])
        k = len(G) - 1
        for i2 in range(k):
            push(i2, k)

    return GroebnerBasis(tuple(reduce_basis(G, order)), order, S_PAIRS)


def _chain_criterion(i: int, j: int, lcm, lms, pending) -> bool:
    for k in range(len(lms)):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        if mono_divides(lms[k], lcm):
            return True
    return False


def reduce_basis(G: Sequence[Polynomial], order: MonomialOrder = LEX) -> List[Polynomial]:
    """Turn a Gröbner basis into the reduced one, sorted by descending leading monomial."""
    polys = [g.monic(order) for g in G if g]
    polys.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal: List[Polynomial] = []
    for idx, g in enumerate(polys):
        lm = g.leading_monomial(order)
        redundant = False
        for jdx, other in enumerate(polys):
            if jdx == idx:
                continue
            olm = other.leading_monomial(order)
            if mono_divides(olm, lm) and (olm != lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(g)
    for idx in range(len(minimal)):
        others = minimal[:idx] + minimal[idx + 1:]
        if others:
            minimal[idx] = remainder(minimal[idx], others, order).monic(order)
    minimal.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return minimal


def ideal_membership(f: Polynomial, basis: GroebnerBasis) -> Membership:
    """Decide ``f in <basis>``; the witness is the quotient list or the nonzero remainder."""
    quotients, r = divide(f, basis.basis, basis.order)
    if r.is_zero():
        return Membership(True, quotients, r)
    return Membership(False, None, r)
