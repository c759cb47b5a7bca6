"""Hessenberg functions, degree tuples, Dyck paths and the poset they form.

A Hessenberg function is a non-decreasing tuple ``h`` with ``i <= h_i <= n``.
The degree tuple ``F(h)`` has entries ``beta_i = i - #{k : h_k < i}``.  This
module stores degree tuples in ascending order ``(beta_1, ..., beta_n)``;
:meth:`DegreeTuple.descending` gives the descending display
``(beta_n, ..., beta_1)`` that the literature uses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

__all__ = [
    "InvalidHessenbergFunction",
    "InvalidDegreeTuple",
    "HessenbergFunction",
    "DegreeTuple",
    "Partition",
    "validate_hessenberg",
    "parse_hessenberg",
    "to_degree_tuple",
    "from_degree_tuple",
    "degree_tuple_via_partitions",
    "conjugate",
    "to_ample_partition",
    "from_ample_partition",
    "to_dyck_path",
    "from_dyck_path",
    "is_dyck_path",
    "enumerate_hessenberg",
    "enumerate_degree_tuples",
    "catalan",
    "HasseDiagram",
    "hasse_diagram",
    "ChainCount",
    "count_maximal_chains",
    "count_chains_dfs",
    "maximal_chains_formula",
    "hessenberg_diagram",
    "hessenberg_diagram_rows",
    "enumeration_records",
]


class InvalidHessenbergFunction(ValueError):
    pass


class InvalidDegreeTuple(ValueError):
    pass


class HessenbergFunction(tuple):
    """A validated Hessenberg function, stored as the tuple ``(h_1, ..., h_n)``."""

    def __new__(cls, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        n = len(values)
        if n == 0:
            raise InvalidHessenbergFunction("a Hessenberg function needs n >= 1 entries")
        for i, hi in enumerate(values, start=1):
            if not i <= hi <= n:
                raise InvalidHessenbergFunction(
                    f"rule (a) violated at i={i}: need {i} <= h_{i} <= {n}, got h_{i}={hi}"
                )
        for i in range(1, n):
            if values[i - 1] > values[i]:
                raise InvalidHessenbergFunction(
                    f"rule (b) violated at i={i}: h_{i}={values[i - 1]} > h_{i + 1}={values[i]}"
                )
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self):
        return f"HessenbergFunction({tuple(self)})"

    def label(self) -> str:
        """Compact label, e.g. ``3334``; comma separated once ``n >= 10``."""
        if len(self) < 10:
            return "".join(str(v) for v in self)
        return ",".join(str(v) for v in self)

    def text(self) -> str:
        return ",".join(str(v) for v in self)

    def dominates(self, other: Sequence[int]) -> bool:
        """``self >= other`` in the entrywise partial order."""
        return all(a >= b for a, b in zip(self, other))

    def covers(self, other: Sequence[int]) -> bool:
        """True iff ``other`` lowers exactly one entry of ``self`` by one."""
        diffs = [a - b for a, b in zip(self, other)]
        return sorted(diffs)[-1:] == [1] and sum(1 for d in diffs if d) == 1

    @classmethod
    def maximal(cls, n: int) -> "HessenbergFunction":
        return cls([n] * n)

    @classmethod
    def minimal(cls, n: int) -> "HessenbergFunction":
        return cls(range(1, n + 1))


class DegreeTuple(tuple):
    """A validated degree tuple, stored ascending as ``(beta_1, ..., beta_n)``."""

    def __new__(cls, values: Iterable[int]):
        values = tuple(int(v) for v in values)
        n = len(values)
        if n == 0:
            raise InvalidDegreeTuple("a degree tuple needs n >= 1 entries")
        for i, b in enumerate(values, start=1):
            if not 1 <= b <= i:
                raise InvalidDegreeTuple(f"rule (a') violated at i={i}: need 1 <= beta_{i} <= {i}, got {b}")
        for i in range(2, n + 1):
            if values[i - 1] - values[i - 2] > 1:
                raise InvalidDegreeTuple(
                    f"rule (b') violated at i={i}: beta_{i} - beta_{i - 1} = {values[i - 1] - values[i - 2]} > 1"
                )
        return super().__new__(cls, values)

    @classmethod
    def from_descending(cls, values: Sequence[int]) -> "DegreeTuple":
        """Build from the descending display ``(beta_n, ..., beta_1)``."""
        return cls(reversed(tuple(values)))

    def descending(self) -> Tuple[int, ...]:
        return tuple(reversed(self))

    def beta(self, i: int) -> int:
        """``beta_i`` with 1-based ``i``."""
        return self[i - 1]

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self):
        return f"DegreeTuple(ascending={tuple(self)})"

    def dominates(self, other: Sequence[int]) -> bool:
        return all(a >= b for a, b in zip(self, other))



def validate_hessenberg(t: Iterable[int]) -> HessenbergFunction:
    return HessenbergFunction(t)


def parse_hessenberg(text: str, n: Optional[int] = None) -> HessenbergFunction:
    """Parse ``"3,3,3,4"``."""
    try:
        values = [int(part) for part in text.replace(" ", "").split(",") if part != ""]
    except ValueError:
        raise InvalidHessenbergFunction(f"not a comma-separated integer list: {text!r}") from None
    if n is not None and len(values) != n:
        raise InvalidHessenbergFunction(f"expected {n} entries, got {len(values)}")
    return HessenbergFunction(values)


# -- partitions ---------------------------------------------------------------


class Partition(tuple):
    """A partition ``n >= lambda_1 >= ... >= lambda_n >= 0`` padded to length ``n``."""

    def __new__(cls, values: Iterable[int], n: Optional[int] = None):
        values = tuple(int(v) for v in values)
        if n is None:
            n = len(values)
        if len(values) > n:
            if any(values[n:]):
                raise ValueError("partition has more than n non-zero parts")
            values = values[:n]
        values = values + (0,) * (n - len(values))
        if any(v < 0 or v > n for v in values):
            raise ValueError(f"parts must lie in 0..{n}")
        if any(values[i] < values[i + 1] for i in range(n - 1)):
            raise ValueError("parts must be weakly decreasing")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def is_ample(self) -> bool:
        n = len(self)
        return all(lam >= n - i for i, lam in enumerate(self))

    @classmethod
    def staircase(cls, n: int) -> "Partition":
        return cls(range(n, 0, -1))


def conjugate(p: Partition) -> Partition:
    """``lambda'_i = #{k : lambda_k >= i}``."""
    n = len(p)
    return Partition([sum(1 for lam in p if lam >= i) for i in range(1, n + 1)], n)


def to_ample_partition(h: HessenbergFunction) -> Partition:
    """``h^rev``, which is an ample partition."""
    return Partition(reversed(h))


def from_ample_partition(p: Partition) -> HessenbergFunction:
    if not p.is_ample:
        raise ValueError(f"{tuple(p)} is not ample")
    return HessenbergFunction(reversed(p))


# -- degree tuples ------------------------------------------------------------


def to_degree_tuple(h: Iterable[int]) -> DegreeTuple:
    """``beta_i = i - #{k : h_k < i}`` (returned ascending)."""
    h = HessenbergFunction(h) if not isinstance(h, HessenbergFunction) else h
    n = len(h)
    return DegreeTuple(i - sum(1 for hk in h if hk < i) for i in range(1, n + 1))


def degree_tuple_via_partitions(h: HessenbergFunction) -> DegreeTuple:
    """``F(h)`` through the composition ``h -> h^rev -> (h^rev)' -> (h^rev)' - rho + 1 -> reverse``.

    The tuple ``(h^rev)' - rho + 1`` is already ``(beta_1, ..., beta_n)``;
    the final reversal only produces the descending display order.
    """
    n = len(h)
    lam = conjugate(to_ample_partition(h))
    rho = Partition.staircase(n)
    shifted = [lam[i] - rho[i] + 1 for i in range(n)]
    return DegreeTuple(shifted)


def from_degree_tuple(b: Iterable[int]) -> HessenbergFunction:
    """Inverse of :func:`to_degree_tuple`, undoing the partition composition step by step."""
    b = DegreeTuple(b) if not isinstance(b, DegreeTuple) else b
    n = len(b)
    rho = Partition.staircase(n)
    lam = Partition([b[i] + rho[i] - 1 for i in range(n)], n)
    return from_ample_partition(conjugate(lam))


# -- Dyck paths ---------------------------------------------------------------


def to_dyck_path(h: HessenbergFunction) -> str:
    """Boundary path from ``(0, n)`` to ``(n, 0)`` as a string over ``D`` (down) and ``R`` (right).

    Column ``i`` of the ``n x n`` square has ``h_i`` boxes above the path.
    """
    steps = []
    prev = 0
    for hi in h:
        steps.append("D" * (hi - prev))
        steps.append("R")
        prev = hi
    return "".join(steps)


def is_dyck_path(path: str, n: int) -> bool:
    if len(path) != 2 * n or set(path) - {"D", "R"}:
        return False
    downs = rights = 0
    for s in path:
        if s == "D":
            downs += 1
        else:
            rights += 1
            if downs < rights:
                return False
    return downs == rights == n


def from_dyck_path(path: str) -> HessenbergFunction:
    n = len(path) // 2
    if not is_dyck_path(path, n):
        raise ValueError(f"{path!r} is not a Dyck path")
    h = []
    downs = 0
    for s in path:
        if s == "D":
            downs += 1
        else:
            h.append(downs)
    return HessenbergFunction(h)


# -- enumeration --------------------------------------------------------------


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Tuple[HessenbergFunction, ...]:
    out: List[HessenbergFunction] = []

    def extend(prefix: List[int]) -> None:
        i = len(prefix) + 1
        if i > n:
            out.append(HessenbergFunction(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return tuple(out)


def enumerate_hessenberg(n: int) -> List[HessenbergFunction]:
    """All Hessenberg functions for ``n``, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(_enumerate(n))


def enumerate_degree_tuples(n: int) -> List[DegreeTuple]:
    """All degree tuples by backtracking over rules (a') and (b'), ascending storage order."""
    out: List[DegreeTuple] = []

    def extend(prefix: List[int]) -> None:
        i = len(prefix) + 1
        if i > n:
            out.append(DegreeTuple(prefix))
            return
        hi = i if not prefix else min(i, prefix[-1] + 1)
        for v in range(1, hi + 1):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def enumeration_records(n: int) -> List[dict]:
    """JSON-ready records ``{h, beta, beta_desc, dyck, catalan_index}``.

    ``beta`` is ascending ``(beta_1..beta_n)``; ``beta_desc`` is
    ``(beta_n..beta_1)``.  ``catalan_index`` is the 0-based position in
    lexicographic order.
    """
    records = []
    for idx, h in enumerate(enumerate_hessenberg(n)):
        beta = to_degree_tuple(h)
        records.append(
            {
                "h": list(h),
                "beta": list(beta),
                "beta_desc": list(beta.descending()),
                "dyck": to_dyck_path(h),
                "catalan_index": idx,
            }
        )
    return records


# -- Hasse diagram ------------------------------------------------------------


@dataclass
class HasseDiagram:
    """Cover graph of the Hessenberg poset; edges point from larger to smaller."""

    n: int
    vertices: List[HessenbergFunction]
    edges: List[Tuple[HessenbergFunction, HessenbergFunction]]
    marked: Dict[Tuple[HessenbergFunction, HessenbergFunction], bool] = field(default_factory=dict)

    def __post_init__(self):
        self._down: Dict[HessenbergFunction, List[HessenbergFunction]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            self._down[a].append(b)

    def successors(self, h) -> List[HessenbergFunction]:
        return list(self._down[HessenbergFunction(h)])

    def is_adjacent(self, h, h2) -> bool:
        return HessenbergFunction(h2) in self._down.get(HessenbergFunction(h), ())

    @property
    def top(self) -> HessenbergFunction:
        return HessenbergFunction.maximal(self.n)

    @property
    def bottom(self) -> HessenbergFunction:
        return HessenbergFunction.minimal(self.n)

    def sources(self) -> List[HessenbergFunction]:
        targets = {b for _, b in self.edges}
        return [v for v in self.vertices if v not in targets]

    def sinks(self) -> List[HessenbergFunction]:
        return [v for v in self.vertices if not self._down[v]]

    def reachable(self, start, edge_filter=None) -> Set[HessenbergFunction]:
        start = HessenbergFunction(start)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self._down[v]:
                if edge_filter is not None and not edge_filter(v, w):
                    continue
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def to_dot(self, name: str = "hessenberg") -> str:
        """DOT text; generator-containment edges are dashed and doubled."""
        lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
        for v in self.vertices:
            lines.append(f'  "{v.label()}";')
        for a, b in self.edges:
            if self.marked.get((a, b)):
                lines.append(f'  "{a.label()}" -> "{b.label()}" [style=dashed, color="black:black"];')
            else:
                lines.append(f'  "{a.label()}" -> "{b.label()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "n": self.n,
            "vertices": [list(v) for v in self.vertices],
            "edges": [
                {"from": list(a), "to": list(b), "generator_containment": self.marked.get((a, b))}
                for a, b in self.edges
            ],
        }
        return json.dumps(data, indent=2)


def hasse_diagram(n: int) -> HasseDiagram:
    """Edges ``h -> h'`` where ``h'`` lowers exactly one entry of ``h`` by one."""
    vertices = enumerate_hessenberg(n)
    vset = set(vertices)
    edges = []
    for h in vertices:
        for i in range(n):
            lowered = list(h)
            lowered[i] -= 1
            t = tuple(lowered)
            if t in vset:
                edges.append((h, HessenbergFunction(t)))
    return HasseDiagram(n, vertices, edges)


# -- maximal chains -----------------------------------------------------------


def count_chains_dfs(diagram: HasseDiagram) -> int:
    """Number of top-to-bottom paths, by memoized depth-first search."""
    memo: Dict[HessenbergFunction, int] = {}
    bottom = diagram.bottom

    def walk(v: HessenbergFunction) -> int:
        if v == bottom:
            return 1
        if v not in memo:
            memo[v] = sum(walk(w) for w in diagram.successors(v))
        return memo[v]

    return walk(diagram.top)


def maximal_chains_formula(n: int, printed: bool = False) -> Fraction:
    """Closed form ``C(n,2)! / prod_{i=1}^{n-1} (2i-1)^{n-i}``.

    With ``printed=True`` the exponent is ``n-1`` for every factor instead,
    which generally does not give an integer.
    """
    num = factorial(comb(n, 2))
    den = prod((2 * i - 1) ** ((n - 1) if printed else (n - i)) for i in range(1, n))
    return Fraction(num, den)


@dataclass(frozen=True)
class ChainCount:
    n: int
    dfs: int
    formula: Fraction
    printed_formula: Fraction

    @property
    def formula_agrees(self) -> bool:
        return self.formula == self.dfs

    @property
    def printed_formula_agrees(self) -> bool:
        return self.printed_formula == self.dfs

    def warnings(self) -> List[str]:
        out = []
        if not self.formula_agrees:
            out.append(f"closed form gives {self.formula}, DFS gives {self.dfs}")
        if not self.printed_formula_agrees:
            out.append(
                f"formula with exponent (n-1) gives {self.printed_formula}, DFS gives {self.dfs}"
            )
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dfs": self.dfs,
            "formula": str(self.formula),
            "printed_formula": str(self.printed_formula),
            "formula_agrees": self.formula_agrees,
            "printed_formula_agrees": self.printed_formula_agrees,
        }


def count_maximal_chains(n: int) -> ChainCount:
    """Count maximal chains; the DFS count is authoritative."""
    return ChainCount(
        n=n,
        dfs=count_chains_dfs(hasse_diagram(n)),
        formula=maximal_chains_formula(n),
        printed_formula=maximal_chains_formula(n, printed=True),
    )


# -- Hessenberg diagram -------------------------------------------------------


def hessenberg_diagram_rows(h: HessenbergFunction) -> List[List[Optional[bool]]]:
    """Cell grid, rows top to bottom: ``True`` shaded, ``False`` unshaded, ``None`` removed.

    Column ``c`` is shaded in its top ``h_c`` rows; cells strictly above the
    diagonal belong to the removed partition ``(n-1, ..., 1, 0)``.
    """
    n = len(h)
    grid = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            if c > r:
                row.append(None)
            else:
                row.append(r <= h[c - 1])
        grid.append(row)
    return grid


def hessenberg_diagram(h: HessenbergFunction) -> str:
    """Text rendering: ``#`` shaded, ``.`` unshaded, blank for removed cells."""
    glyph = {True: "#", False: ".", None: " "}
    return "\n".join("".join(glyph[c] for c in row).rstrip() for row in hessenberg_diagram_rows(h))
