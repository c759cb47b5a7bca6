"""The ideals I_h and J_h: generating sets, containment, and the checks relating them.

Three presentations are built from a Hessenberg function ``h``:

* ``C``: every box of the h-Ferrers diagram, ``e_{h_i - r}(1..h_i)`` for
  ``0 <= r <= i-1``;
* ``AD``: only the antidiagonal boxes, ``e_{h_i - i + 1}(1..h_i)``;
* ``J``: ``ẽ_{beta_i}(i..n)`` for the degree tuple ``beta`` of ``h``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from threading import Lock
from typing import Dict, Optional, Tuple

from .groebner import COPRIME, GroebnerBasis, buchberger, is_groebner, reduce_basis
from .hessenberg import (
    HasseDiagram,
    HessenbergFunction,
    hasse_diagram,
    to_degree_tuple,
)
from .poly import LEX, MonomialOrder, Polynomial, remainder
from .symfun import e_range, h_range

__all__ = [
    "HFerrersDiagram",
    "IdealPresentation",
    "VerificationReport",
    "h_ferrers",
    "c_generators",
    "antidiagonal_generators",
    "j_generators",
    "presentation",
    "groebner_basis",
    "clear_groebner_cache",
    "ideal_contains",
    "containment_witness",
    "verify_I_equals_J",
    "generator_containment_edges",
    "marked_hasse_diagram",
    "verify_reduced_generating_set",
    "verify_minimality",
]


def _as_h(h) -> HessenbergFunction:
    return h if isinstance(h, HessenbergFunction) else HessenbergFunction(h)


@dataclass(frozen=True)
class HFerrersDiagram:
    """Column ``i`` (1-based) reads bottom to top ``h_i, h_i - 1, ..., h_i - (i-1)``."""

    h: HessenbergFunction
    columns: Tuple[Tuple[int, ...], ...]

    def antidiagonal(self) -> Tuple[int, ...]:
        return tuple(col[-1] for col in self.columns)

    def render(self) -> str:
        """Staircase drawn flush right and bottom, top row first."""
        n = len(self.columns)
        width = max(len(str(v)) for col in self.columns for v in col)
        lines = []
        for height in range(n, 0, -1):
            cells = []
            for col in self.columns:
                cells.append(str(col[height - 1]).rjust(width) if len(col) >= height else " " * width)
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def h_ferrers(h) -> HFerrersDiagram:
    h = _as_h(h)
    return HFerrersDiagram(h, tuple(tuple(hi - r for r in range(i)) for i, hi in enumerate(h, start=1)))


@dataclass(frozen=True)
class IdealPresentation:
    """A named generating set for an ideal attached to ``h``.

    ``labels`` records where each generator comes from: ``(i, r)`` Ferrers
    boxes for ``C``/``AD``, the index ``i`` for ``J``.
    """

    name: str
    h: HessenbergFunction
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder = LEX
    labels: Tuple[tuple, ...] = ()

    @property
    def n(self) -> int:
        return len(self.h)

    def distinct(self) -> Tuple[Polynomial, ...]:
        """Generators with duplicates dropped, first occurrence kept."""
        seen = set()
        out = []
        for g in self.generators:
            if g not in seen:
                seen.add(g)
                out.append(g)
        return tuple(out)

    def generator_set(self) -> frozenset:
        return frozenset(self.generators)

    def to_dict(self) -> dict:
        return {
            "ideal": self.name,
            "h": list(self.h),
            "order": self.order.name,
            "generators": [g.to_text(self.order) for g in self.generators],
            "labels": [list(l) for l in self.labels],
        }


def c_generators(h, order: MonomialOrder = LEX) -> IdealPresentation:
    """All ``n(n+1)/2`` Ferrers-box generators, labelled ``(i, r)``."""
    h = _as_h(h)
    n = len(h)
    gens, labels = [], []
    for i, hi in enumerate(h, start=1):
        for r in range(i):
            gens.append(e_range(hi - r, 1, hi, n))
            labels.append((i, r))
    return IdealPresentation("C", h, tuple(gens), order, tuple(labels))


def antidiagonal_generators(h, order: MonomialOrder = LEX) -> IdealPresentation:
    h = _as_h(h)
    n = len(h)
    gens = tuple(e_range(hi - (i - 1), 1, hi, n) for i, hi in enumerate(h, start=1))
    labels = tuple((i, i - 1) for i in range(1, n + 1))
    return IdealPresentation("AD", h, gens, order, labels)


def j_generators(h, order: MonomialOrder = LEX) -> IdealPresentation:
    """``(ẽ_{beta_1}(1..n), ..., ẽ_{beta_n}(n))``, indexed ``i = 1..n``."""
    h = _as_h(h)
    n = len(h)
    beta = to_degree_tuple(h)
    gens = tuple(h_range(beta[i - 1], i, n, n) for i in range(1, n + 1))
    return IdealPresentation("J", h, gens, order, tuple((i,) for i in range(1, n + 1)))


_BUILDERS = {"C": c_generators, "AD": antidiagonal_generators, "J": j_generators}


def presentation(kind: str, h, order: MonomialOrder = LEX) -> IdealPresentation:
    try:
        return _BUILDERS[kind.upper()](h, order)
    except KeyError:
        raise ValueError(f"unknown ideal kind {kind!r} (expected C, AD or J)") from None


# -- Gröbner bases with memoization -------------------------------------------

_cache: Dict[tuple, GroebnerBasis] = {}
_cache_lock = Lock()


def clear_groebner_cache() -> None:
    with _cache_lock:
        _cache.clear()


def groebner_basis(p: IdealPresentation, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal, memoized by ``(name, h, order)``."""
    order = order or p.order
    key = (p.name, tuple(p.h), order)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    gb = buchberger(p.distinct(), order)
    with _cache_lock:
        _cache[key] = gb
    return gb


def containment_witness(A: IdealPresentation, B: IdealPresentation) -> Optional[Tuple[Polynomial, Polynomial]]:
    """First generator of ``A`` outside ``<B>``, with its nonzero remainder; ``None`` if ``<A> ⊆ <B>``."""
    if A.n != B.n:
        raise ValueError("presentations live in different polynomial rings")
    gb = groebner_basis(B, A.order)
    for g in A.distinct():
        r = gb.reduce(g)
        if r:
            return g, r
    return None


def ideal_contains(A: IdealPresentation, B: IdealPresentation) -> bool:
    """True iff ``<A> ⊆ <B>``."""
    return containment_witness(A, B) is None


# -- verification reports -----------------------------------------------------


@dataclass
class VerificationReport:
    h: Optional[Tuple[int, ...]]
    claim: str
    status: str
    witness: Optional[str] = None
    elapsed_ms: Optional[float] = None
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "h": list(self.h) if self.h is not None else None,
            "claim": self.claim,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
            "elapsed_ms": round(self.elapsed_ms, 3) if (timings and self.elapsed_ms is not None) else None,
        }


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = (time.perf_counter() - self.start) * 1000.0


def verify_I_equals_J(h, order: MonomialOrder = LEX) -> VerificationReport:
    """Check ``I_h = J_h`` both ways and compare reduced Gröbner bases."""
    h = _as_h(h)
    with _Timer() as t:
        J = j_generators(h, order)
        ad = antidiagonal_generators(h, order)
        check = is_groebner(J.generators, order)
        witness = None
        if check.certificate != COPRIME:
            witness = "J_h generators lack the coprimality certificate"
        else:
            G_J = reduce_basis(J.generators, order)
            G_I = groebner_basis(ad, order)
            for g in ad.distinct():
                r = remainder(g, J.generators, order)
                if r:
                    witness = f"{g} not in J_h (remainder {r})"
                    break
            if witness is None:
                for g in J.generators:
                    r = G_I.reduce(g)
                    if r:
                        witness = f"{g} not in I_h (remainder {r})"
                        break
            if witness is None and list(G_I.basis) != G_J:
                witness = "reduced Gröbner bases differ"
    return VerificationReport(tuple(h), "thm-6.8", "pass" if witness is None else "fail", witness, t.ms)


def generator_containment_edges(n: int, diagram: Optional[HasseDiagram] = None) -> Dict[tuple, bool]:
    """Mark each Hasse edge ``h -> h'`` by literal set inclusion of the C-generator sets."""
    diagram = diagram or hasse_diagram(n)
    sets = {h: c_generators(h).generator_set() for h in diagram.vertices}
    return {(a, b): sets[a] <= sets[b] for a, b in diagram.edges}


def marked_hasse_diagram(n: int) -> HasseDiagram:
    d = hasse_diagram(n)
    d.marked = generator_containment_edges(n, d)
    return d


def verify_reduced_generating_set(h, order: MonomialOrder = LEX) -> VerificationReport:
    """Every Ferrers-box generator lies in the antidiagonal ideal."""
    h = _as_h(h)
    with _Timer() as t:
        gb = groebner_basis(antidiagonal_generators(h, order), order)
        witness = None
        for g in c_generators(h, order).distinct():
            r = gb.reduce(g)
            if r:
                witness = f"{g} (remainder {r})"
                break
    return VerificationReport(tuple(h), "reduced-gens", "pass" if witness is None else "fail", witness, t.ms)


def verify_minimality(h, order: MonomialOrder = LEX) -> VerificationReport:
    """No antidiagonal generator lies in the ideal of the other ``n - 1``."""
    h = _as_h(h)
    with _Timer() as t:
        gens = antidiagonal_generators(h, order).generators
        witness = None
        for i, g in enumerate(gens):
            others = gens[:i] + gens[i + 1:]
            if not others:
                continue
            if not buchberger(others, order).reduce(g):
                witness = f"generator {i + 1} ({g}) is redundant"
                break
    return VerificationReport(tuple(h), "minimality", "pass" if witness is None else "fail", witness, t.ms)
