"""Truncated elementary and complete symmetric functions, and their identities.

``e(d, S, n)`` is the sum of the squarefree degree-``d`` monomials in the
variables indexed by ``S``; ``h(d, S, n)`` (written with a tilde in the
literature) sums all degree-``d`` monomials in those variables.  Both are
built by direct enumeration so they can serve as an oracle for the
decomposition identities, which are exposed as ``*_rhs`` builders.

Conventions for degenerate degrees:

* ``d == 0`` gives ``1``, even when ``S`` is empty;
* ``d < 0`` gives ``0``;
* ``d > |S|`` gives ``0`` for the elementary function.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, List, Sequence, Tuple

from .poly import Polynomial

__all__ = [
    "variable_set",
    "elementary_truncated",
    "complete_truncated",
    "e_range",
    "h_range",
    "elem_decomposition_rhs",
    "complete_decomposition_rhs",
    "elem_fixed_varset_expansion",
    "complete_two_degree_expansion",
    "cvms_presentation",
    "crucial_identity_rhs",
    "base_case_rhs",
    "matrix_B",
    "matrix_B_inverse",
    "mat_mul",
    "mat_vec",
    "identity_matrix",
    "e_vector",
    "h_vector",
]

Matrix = List[List[Polynomial]]


def variable_set(S: Iterable[int], n: int) -> Tuple[int, ...]:
    """Validate and sort a set of 1-based variable indices."""
    out = tuple(sorted(set(S)))
    for i in out:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
    return out


@lru_cache(maxsize=None)
def _elementary(d: int, S: Tuple[int, ...], n: int) -> Polynomial:
    if d == 0:
        return Polynomial.one(n)
    if d < 0 or d > len(S):
        return Polynomial.zero(n)
    terms = {}
    for combo in combinations(S, d):
        m = [0] * n
        for i in combo:
            m[i - 1] = 1
        terms[tuple(m)] = 1
    return Polynomial._raw(terms, n)


@lru_cache(maxsize=None)
def _complete(d: int, S: Tuple[int, ...], n: int) -> Polynomial:
    if d == 0:
        return Polynomial.one(n)
    if d < 0 or not S:
        return Polynomial.zero(n)
    terms = {}
    for combo in combinations_with_replacement(S, d):
        m = [0] * n
        for i in combo:
            m[i - 1] += 1
        terms[tuple(m)] = 1
    return Polynomial._raw(terms, n)


def elementary_truncated(d: int, S: Iterable[int], n: int) -> Polynomial:
    """``e_d(S)``: sum of squarefree degree-``d`` monomials in ``{x_i : i in S}``."""
    return _elementary(d, variable_set(S, n), n)


def complete_truncated(d: int, S: Iterable[int], n: int) -> Polynomial:
    """``ẽ_d(S)``: sum of all degree-``d`` monomials in ``{x_i : i in S}``."""
    return _complete(d, variable_set(S, n), n)


def e_range(d: int, lo: int, hi: int, n: int) -> Polynomial:
    """``e_d(lo, lo+1, ..., hi)``; the range is empty when ``lo > hi``."""
    return elementary_truncated(d, range(lo, hi + 1), n)


def h_range(d: int, lo: int, hi: int, n: int) -> Polynomial:
    """``ẽ_d(lo, lo+1, ..., hi)``; the range is empty when ``lo > hi``."""
    return complete_truncated(d, range(lo, hi + 1), n)


def _x(i: int, n: int, power: int = 1) -> Polynomial:
    return Polynomial.var(i, n, power)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# -- decomposition identities --------------------------------------------------


def elem_decomposition_rhs(d: int, r: int, n: int) -> Polynomial:
    """``x_r e_{d-1}(1..r-1) + e_d(1..r-1)``, which equals ``e_d(1..r)``."""
    if not 1 <= r <= n:
        raise ValueError(f"r={r} out of range 1..{n}")
    return _x(r, n) * e_range(d - 1, 1, r - 1, n) + e_range(d, 1, r - 1, n)


def complete_decomposition_rhs(d: int, r: int, n: int) -> Polynomial:
    """``x_r ẽ_{d-1}(r..n) + ẽ_d(r+1..n)``, which equals ``ẽ_d(r..n)``."""
    if not 1 <= r <= n:
        raise ValueError(f"r={r} out of range 1..{n}")
    return _x(r, n) * h_range(d - 1, r, n, n) + h_range(d, r + 1, n, n)


def elem_fixed_varset_expansion(d: int, r: int, j: int, n: int) -> Polynomial:
    """``sum_{t=0}^{j} e_t(r-j+1..r) e_{d-t}(1..r-j)``, which equals ``e_d(1..r)``.

    Summands with ``d - t > r - j`` vanish and are skipped.
    """
    if not (d < r <= n and 0 <= j < r):
        raise ValueError(f"need d < r <= n and 0 <= j < r, got d={d}, r={r}, j={j}, n={n}")
    total = Polynomial.zero(n)
    for t in range(max(0, d - (r - j)), j + 1):
        total = total + e_range(t, r - j + 1, r, n) * e_range(d - t, 1, r - j, n)
    return total


def complete_two_degree_expansion(d: int, d_prime: int, r: int, n: int) -> Polynomial:
    """``x_r^{d-d'} ẽ_{d'}(r..n) + sum_{t=1}^{d-d'} x_r^{d-d'-t} ẽ_{d'+t}(r+1..n)``."""
    if not (0 <= d_prime <= d <= n and 1 <= r <= n):
        raise ValueError(f"need 0 <= d' <= d <= n and 1 <= r <= n, got d={d}, d'={d_prime}, r={r}")
    total = _x(r, n, d - d_prime) * h_range(d_prime, r, n, n)
    for t in range(1, d - d_prime + 1):
        total = total + _x(r, n, d - d_prime - t) * h_range(d_prime + t, r + 1, n, n)
    return total


def cvms_presentation(d: int, n: int) -> Polynomial:
    """``sum_{t=1}^{d} (-1)^{t+1} e_{d-t}(t+1..n) ẽ_t(t..n)``, which equals ``e_d``."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    total = Polynomial.zero(n)
    for t in range(1, d + 1):
        term = e_range(d - t, t + 1, n, n) * h_range(t, t, n, n)
        total = total + term.scale(_sign(t + 1))
    return total


def crucial_identity_rhs(d: int, r: int, n: int) -> Polynomial:
    """Complete-function expansion of ``e_d(1..r)``:

    ``(-1)^d ẽ_d(r+1..n) + sum_{t=1}^{d} (-1)^{t+1} e_{d-t}(t+1..r) ẽ_t(t..n)``.
    """
    if not 0 < d <= r <= n:
        raise ValueError(f"need 0 < d <= r <= n, got d={d}, r={r}, n={n}")
    total = h_range(d, r + 1, n, n).scale(_sign(d))
    for t in range(1, d + 1):
        term = e_range(d - t, t + 1, r, n) * h_range(t, t, n, n)
        total = total + term.scale(_sign(t + 1))
    return total


def base_case_rhs(r: int, n: int) -> Polynomial:
    """The ``d == r`` case of :func:`crucial_identity_rhs`; equals ``x_1 ... x_r``."""
    return crucial_identity_rhs(r, r, n)


# -- the matrix B and its inverse ---------------------------------------------


def matrix_B(n: int) -> Matrix:
    """Lower-triangular ``B`` with ``b_ij = (-1)^{j+1} e_{i-j}(j+1..n)`` (1-based)."""
    if n < 1:
        raise ValueError("n must be positive")
    zero = Polynomial.zero(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j <= i:
                row.append(e_range(i - j, j + 1, n, n).scale(_sign(j + 1)))
            else:
                row.append(zero)
        rows.append(row)
    return rows


def matrix_B_inverse(n: int) -> Matrix:
    """Exact inverse of :func:`matrix_B` by forward substitution.

    Diagonal entries of ``B`` are ``±1``, so every step stays in ``Z[x]``.
    """
    B = matrix_B(n)
    zero = Polynomial.zero(n)
    X = [[zero] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            acc = Polynomial.one(n) if i == j else zero
            for k in range(i):
                if B[i][k] and X[k][j]:
                    acc = acc - B[i][k] * X[k][j]
            diag = B[i][i].coefficient((0,) * n)
            if len(B[i][i]) != 1 or diag not in (1, -1):
                raise ArithmeticError("B is not unitriangular up to sign")
            X[i][j] = acc.scale(diag)  # 1/diag == diag for diag in {1, -1}
    return X


def identity_matrix(n: int) -> Matrix:
    return [[Polynomial.one(n) if i == j else Polynomial.zero(n) for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n = A[0][0].n
    zero = Polynomial.zero(n)
    out = []
    for i in range(len(A)):
        row = []
        for j in range(len(B[0])):
            acc = zero
            for k in range(len(B)):
                if A[i][k] and B[k][j]:
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(A: Matrix, v: Sequence[Polynomial]) -> List[Polynomial]:
    n = v[0].n
    out = []
    for row in A:
        acc = Polynomial.zero(n)
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out


def e_vector(n: int) -> List[Polynomial]:
    """``(e_1, ..., e_n)`` in all ``n`` variables."""
    return [e_range(d, 1, n, n) for d in range(1, n + 1)]


def h_vector(n: int) -> List[Polynomial]:
    """``(ẽ_1(1..n), ẽ_2(2..n), ..., ẽ_n(n))``."""
    return [h_range(i, i, n, n) for i in range(1, n + 1)]
