"""Sparse multivariate polynomials with exact rational coefficients.

A monomial is a tuple of ``n`` non-negative exponents, ``m[0]`` being the
exponent of ``x1``.  A :class:`Polynomial` maps monomials to non-zero
coefficients.  Integral coefficients are stored as ``int`` and everything
else as :class:`fractions.Fraction`, so equal polynomials always compare
equal and hash alike.

Variables are 1-based in text I/O (``x1 .. xn``) and 0-based internally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]

__all__ = [
    "Monomial",
    "Coefficient",
    "MonomialOrder",
    "LEX",
    "GRLEX",
    "Polynomial",
    "monomial",
    "mono_mul",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_coprime",
    "total_degree",
    "divide",
    "remainder",
    "leading_term",
    "parse_polynomial",
    "format_monomial",
]


def _norm(c: Coefficient) -> Coefficient:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# -- monomial helpers --------------------------------------------------------


def monomial(n: int, powers: Optional[Mapping[int, int]] = None) -> Monomial:
    """Build an exponent tuple from a ``{variable (1-based): exponent}`` map."""
    exps = [0] * n
    for var, e in (powers or {}).items():
        if not 1 <= var <= n:
            raise ValueError(f"variable x{var} out of range for n={n}")
        if e < 0:
            raise ValueError("exponents must be non-negative")
        exps[var - 1] += e
    return tuple(exps)


def total_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient ``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    """True iff ``b`` divides ``a``."""
    for x, y in zip(b, a):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


# -- monomial orders ---------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """Lex or graded lex with a variable precedence.

    ``precedence`` lists 0-based variable indices from most to least
    significant.  ``None`` means the standard ``x1 > x2 > ... > xn``.
    """

    kind: str = "lex"
    precedence: Optional[Tuple[int, ...]] = None
    key: Callable[[Monomial], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        prec = self.precedence
        if prec is not None:
            prec = tuple(prec)
            if sorted(prec) != list(range(len(prec))):
                raise ValueError("precedence must be a permutation of 0..n-1")
            if prec == tuple(range(len(prec))):
                prec = None
            object.__setattr__(self, "precedence", prec)

        if prec is None:
            if self.kind == "lex":
                key = _identity_key
            else:
                key = _grlex_key
        else:
            if self.kind == "lex":
                def key(m, _p=prec):
                    return tuple(m[i] for i in _p)
            else:
                def key(m, _p=prec):
                    return (sum(m),) + tuple(m[i] for i in _p)
        object.__setattr__(self, "key", key)

    @property
    def name(self) -> str:
        if self.precedence is None:
            return self.kind
        return self.kind + "[" + ">".join(f"x{i + 1}" for i in self.precedence) + "]"

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        if self.key is _identity_key:
            return max(monomials)
        return max(monomials, key=self.key)

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        name = name.lower()
        if name == "lex":
            return LEX
        if name == "grlex":
            return GRLEX
        raise ValueError(f"unknown monomial order {name!r} (expected lex or grlex)")


def _identity_key(m):
    return m


def _grlex_key(m):
    return (sum(m), m)


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")


# -- polynomials -------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables over the rationals."""

    __slots__ = ("_terms", "_n", "_hash", "_sorted")

    def __init__(self, terms: Optional[Mapping[Monomial, Coefficient]] = None, n: int = 0):
        clean: Dict[Monomial, Coefficient] = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n:
                raise ValueError(f"monomial {m} does not have {n} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if not isinstance(c, (int, Fraction)):
                c = Fraction(c)
            c = _norm(c)
            if c:
                s = _norm(clean.get(m, 0) + c)
                if s:
                    clean[m] = s
                else:
                    clean.pop(m, None)
        self._terms = clean
        self._n = n
        self._hash = None
        self._sorted = {}

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coefficient], n: int) -> "Polynomial":
        # terms must already be clean: exact tuples, no zeros, normalized coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._n = n
        p._hash = None
        p._sorted = {}
        return p

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw({}, n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls.constant(1, n)

    @classmethod
    def constant(cls, c: Coefficient, n: int) -> "Polynomial":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls._raw({(0,) * n: c} if c else {}, n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Polynomial":
        """The monomial ``x_i ** power`` (``i`` is 1-based)."""
        return cls._raw({monomial(n, {i: power}): 1}, n)

    @classmethod
    def from_monomial(cls, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        return cls({tuple(m): c}, len(m))

    # accessors
    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Monomial, Coefficient]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, m: Monomial) -> Coefficient:
        return self._terms.get(tuple(m), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def sorted_terms(self, order: MonomialOrder = GRLEX) -> List[Tuple[Monomial, Coefficient]]:
        """Terms in descending order (cached per order)."""
        cached = self._sorted.get(order)
        if cached is None:
            cached = sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)
            self._sorted[order] = cached
        return list(cached)

    def leading_term(self, order: MonomialOrder = LEX) -> Tuple[Coefficient, Monomial]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        m = order.max(self._terms)
        return self._terms[m], m

    def leading_monomial(self, order: MonomialOrder = LEX) -> Monomial:
        return self.leading_term(order)[1]

    def monic(self, order: MonomialOrder = LEX) -> "Polynomial":
        if not self._terms:
            return self
        c, _ = self.leading_term(order)
        if c == 1:
            return self
        return self.scale(Fraction(1) / c)

    # arithmetic
    def _check(self, other: "Polynomial") -> None:
        if self._n != other._n:
            raise ValueError(f"ambient variable counts differ ({self._n} vs {other._n})")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self._n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out, self._n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self._n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: Coefficient) -> "Polynomial":
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw({m: _norm(v * c) for m, v in self._terms.items()}, self._n)

    def shift(self, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        """Multiply by the term ``c * x^m``."""
        if not c:
            return Polynomial.zero(self._n)
        return Polynomial._raw(
            {mono_mul(k, m): _norm(v * c) for k, v in self._terms.items()}, self._n
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: Dict[Monomial, Coefficient] = {}
        items = list(other._terms.items())
        for m1, c1 in self._terms.items():
            for m2, c2 in items:
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: _norm(c) for m, c in out.items() if c}, self._n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one(self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point: Sequence[Coefficient]) -> Coefficient:
        total: Coefficient = 0
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Substitute ``x_{i+1} -> x_{perm[i]+1}`` (0-based permutation)."""
        out = {}
        for m, c in self._terms.items():
            new = [0] * self._n
            for i, e in enumerate(m):
                new[perm[i]] += e
            out[tuple(new)] = c
        return Polynomial._raw(out, self._n)

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self._n)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r}, n={self._n})"

    def __str__(self):
        return self.to_text()

    def to_text(self, order: MonomialOrder = GRLEX) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for m, c in self.sorted_terms(order):
            neg = c < 0
            a = -c if neg else c
            mono = format_monomial(m)
            if mono == "1":
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Polynomial":
        return parse_polynomial(text, n)


def format_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<body>
            (?:\d+(?:\s*/\s*\d+)?|x\d+(?:\s*\^\s*\d+)?)
            (?:\s*\*\s*(?:\d+(?:\s*/\s*\d+)?|x\d+(?:\s*\^\s*\d+)?))*
        )\s*""",
    re.VERBOSE,
)
_FACTOR = re.compile(r"(\d+)\s*/\s*(\d+)|(\d+)|x(\d+)(?:\s*\^\s*(\d+))?")


def parse_polynomial(text: str, n: Optional[int] = None) -> Polynomial:
    """Parse ``"x1*x2 - 2*x3^2 + 1/3"``.  ``n`` defaults to the largest index seen."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    raw: List[Tuple[Dict[int, int], Fraction]] = []
    pos = 0
    first = True
    while pos < len(text):
        mt = _TERM.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        if mt.group("sign") is None and not first:
            raise ValueError(f"missing operator near {text[pos:]!r}")
        coeff = Fraction(-1 if mt.group("sign") == "-" else 1)
        powers: Dict[int, int] = {}
        for f in _FACTOR.finditer(mt.group("body")):
            num, den, integer, var, exp = f.groups()
            if num is not None:
                coeff *= Fraction(int(num), int(den))
            elif integer is not None:
                coeff *= int(integer)
            else:
                v = int(var)
                if v < 1:
                    raise ValueError("variables are numbered from x1")
                powers[v] = powers.get(v, 0) + (int(exp) if exp is not None else 1)
        raw.append((powers, coeff))
        pos = mt.end()
        first = False
    top = max((v for powers, _ in raw for v in powers), default=0)
    if n is None:
        n = max(top, 1)
    elif top > n:
        raise ValueError(f"x{top} exceeds n={n}")
    terms: Dict[Monomial, Coefficient] = {}
    for powers, c in raw:
        m = monomial(n, powers)
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms, n)


# -- division ----------------------------------------------------------------


def leading_term(p: Polynomial, order: MonomialOrder = LEX) -> Tuple[Coefficient, Monomial]:
    return p.leading_term(order)


def _prepare(divisors: Sequence[Polynomial], order: MonomialOrder, n: int):
    prepared = []
    for g in divisors:
        if g.n != n:
            raise ValueError("divisor ambient variable count differs from dividend")
        if g.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
        c, m = g.leading_term(order)
        prepared.append((m, c, list(g.items())))
    return prepared


def divide(
    f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = LEX
) -> Tuple[List[Polynomial], Polynomial]:
    """Multivariate division of ``f`` by an ordered list of divisors.

    Each step reduces the current leading term by the first divisor whose
    leading monomial divides it; otherwise the term moves to the remainder.
    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + r``.
    """
    n = f.n
    prepared = _prepare(divisors, order, n)
    quotients: List[Dict[Monomial, Coefficient]] = [{} for _ in prepared]
    p = dict(f.items())
    r: Dict[Monomial, Coefficient] = {}
    while p:
        m = order.max(p)
        c = p[m]
        for idx, (lm, lc, gterms) in enumerate(prepared):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                factor = _norm(Fraction(c) / lc) if lc != 1 else c
                qd = quotients[idx]
                qd[q] = qd.get(q, 0) + factor
                _sub_shifted(p, gterms, q, factor)
                break
        else:
            r[m] = c
            del p[m]
    quots = [Polynomial._raw({m: _norm(c) for m, c in qd.items() if c}, n) for qd in quotients]
    return quots, Polynomial._raw({m: _norm(c) for m, c in r.items()}, n)


def remainder(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = LEX) -> Polynomial:
    """Remainder of :func:`divide` without tracking quotients."""
    if not divisors:
        return f
    return _remainder_prepared(f, _prepare(divisors, order, f.n), order)


def _remainder_prepared(f: Polynomial, prepared, order: MonomialOrder) -> Polynomial:
    p = dict(f.items())
    r: Dict[Monomial, Coefficient] = {}
    maxfn = order.max
    while p:
        m = maxfn(p)
        c = p[m]
        for lm, lc, gterms in prepared:
            if mono_divides(lm, m):
                _sub_shifted(p, gterms, mono_div(m, lm), _norm(Fraction(c) / lc) if lc != 1 else c)
                break
        else:
            r[m] = c
            del p[m]
    return Polynomial._raw({m: _norm(c) for m, c in r.items()}, f.n)


def _sub_shifted(p: Dict[Monomial, Coefficient], gterms, shift: Monomial, factor: Coefficient) -> None:
    # p -= factor * x^shift * g, in place
    for gm, gc in gterms:
        m = tuple(a + b for a, b in zip(gm, shift))
        v = p.get(m, 0) - factor * gc
        if v:
            p[m] = v
        else:
            p.pop(m, None)
