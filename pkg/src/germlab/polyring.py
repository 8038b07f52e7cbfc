"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients, tied to a :class:`Ring` that fixes
the number and names of the variables.  Every germ handled by the library is
represented by a polynomial of this kind.

Besides ring arithmetic the module provides formal partial derivatives,
composition with polynomial maps, order at the origin, exact division, and a
multivariate gcd (recursive content/primitive-part reduction with
subresultant pseudo-remainder sequences) used to extract squarefree parts.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Tuple, Union

from .errors import (
    ArityMismatch,
    ConstantInput,
    DivisionByZero,
    IndexOutOfRange,
    NotDivisible,
    RingMismatch,
)

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


class Infinity:
    """Sentinel for +infinity (order of 0, colength of a non-finite ideal).

    Compares greater than every integer; never equal to one.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("germlab.INF")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


def grevlex_key(m: Monomial):
    """Sort key for graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[x_1, ..., x_n] identified by its variable names."""

    names: Tuple[str, ...]

    def __init__(self, names: Union[str, Iterable[str]]):
        if isinstance(names, str):
            names = [s.strip() for s in names.replace(",", " ").split()]
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: c})

    def var(self, which: Union[int, str]) -> "Polynomial":
        i = self.names.index(which) if isinstance(which, str) else which
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"variable index {i} out of range for {self.n} variables")
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.n))

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_polynomial

        return parse_polynomial(text, self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial over Q in canonical form (no zero coefficients)."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Scalar]):
        clean = {}
        n = ring.n
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {ring}")
            c = _as_fraction(c)
            if c:
                clean[m] = c
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical and owned by the result
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.n, Fraction(0))

    def total_degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self._terms), default=-1)

    def variables(self) -> Tuple[int, ...]:
        """Indices of the variables that actually occur."""
        return tuple(i for i in range(self.ring.n) if any(m[i] for m in self._terms))

    def coefficient(self, m: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def leading_term_grevlex(self) -> Tuple[Monomial, Fraction]:
        m = max(self._terms, key=grevlex_key)
        return m, self._terms[m]

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.ring.n:
            raise ArityMismatch(f"expected {self.ring.n} coordinates, got {len(point)}")
        point = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in zip(point, m):
                if e:
                    t *= v**e
            total += t
        return total

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

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

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            c = _as_fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: v * c for m, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(a + b for a, b in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            c = _as_fraction(other)
            if not c:
                raise DivisionByZero("division by the zero scalar")
            return self * (1 / c)
        return divide_exact(self, self._coerce(other))

    def __pow__(self, k):
        return pow_(self, k)

    def mul_term(self, m: Monomial, c: Fraction) -> "Polynomial":
        """Multiply by the single term c * x^m."""
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(k, m)): v * c for k, v in self._terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == self.ring.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.ring.names!r}, {format_polynomial(self)!r})"


# ---------------------------------------------------------------------------
# printing


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: grevlex-descending terms, '*' between factors, '^' for powers."""
    if not p._terms:
        return "0"
    names = p.ring.names
    parts = []
    for m in sorted(p._terms, key=grevlex_key, reverse=True):
        c = p._terms[m]
        factors = [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e]
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# module-level operations


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + p._coerce(q)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * p._coerce(q)


def pow_(p: Polynomial, k: int) -> Polynomial:
    """p**k by repeated squaring; p**0 == 1 (including 0**0)."""
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    result = p.ring.one()
    base = p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    n = p.ring.n
    if not 0 <= i < n:
        raise IndexOutOfRange(f"variable index {i} out of range for {n} variables")
    out = {}
    for m, c in p._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._raw(p.ring, out)


def substitute(g: Polynomial, F: Sequence[Polynomial]) -> Polynomial:
    """Composition g o F: replace x_i by F[i] and expand.

    ``F`` is any sequence of polynomials over a common ring (for instance a
    :class:`germlab.germmap.MapGerm`); the result lives in that ring.
    """
    comps = list(F)
    if len(comps) != g.ring.n:
        raise ArityMismatch(f"map has {len(comps)} components, polynomial has {g.ring.n} variables")
    if not comps:
        raise ArityMismatch("empty map")
    target = comps[0].ring
    for c in comps:
        if c.ring != target:
            raise RingMismatch("map components live in different rings")
    powers = [[target.one()] for _ in comps]

    def power(i, e):
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * comps[i])
        return cache[e]

    out: dict = {}
    for m, c in g._terms.items():
        t = target.const(c)
        for i, e in enumerate(m):
            if e:
                t = t * power(i, e)
        for k, v in t._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return Polynomial._raw(target, out)


def order_at_origin(p: Polynomial):
    """Lowest total degree of a term, or INF for the zero polynomial."""
    if not p._terms:
        return INF
    return min(sum(m) for m in p._terms)


def normalize(p: Polynomial) -> Polynomial:
    """Scale so the grevlex-largest term has coefficient 1 (0 stays 0)."""
    if not p._terms:
        return p
    _, c = p.leading_term_grevlex()
    return p if c == 1 else p * (1 / c)


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Return s with q*s == p, raising NotDivisible if no such polynomial exists."""
    q = p._coerce(q)
    if not q._terms:
        raise DivisionByZero("division by the zero polynomial")
    if q.is_constant():
        return p * (1 / q.constant_term)
    lm, lc = q.leading_term_grevlex()
    rem = dict(p._terms)
    quot: dict = {}
    qterms = list(q._terms.items())
    while rem:
        m = max(rem, key=grevlex_key)
        if any(a < b for a, b in zip(m, lm)):
            raise NotDivisible(f"{format_polynomial(q)} does not divide {format_polynomial(p)}")
        shift = tuple(a - b for a, b in zip(m, lm))
        c = rem[m] / lc
        quot[shift] = c
        for k, v in qterms:
            t = tuple(a + b for a, b in zip(k, shift))
            s = rem.get(t, 0) - c * v
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return Polynomial._raw(p.ring, quot)


# -- gcd --------------------------------------------------------------------


def _main_variable(*polys: Polynomial):
    best = -1
    for p in polys:
        for m in p._terms:
            for i in range(len(m) - 1, best, -1):
                if m[i]:
                    best = i
                    break
    return None if best < 0 else best


def _to_univariate(p: Polynomial, i: int) -> list:
    """Coefficient list (index = degree in x_i) of polynomials free of x_i."""
    buckets: dict = {}
    for m, c in p._terms.items():
        buckets.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1:]] = c
    deg = max(buckets, default=-1)
    zero = p.ring.zero()
    return [Polynomial._raw(p.ring, buckets[d]) if d in buckets else zero for d in range(deg + 1)]


def _from_univariate(coeffs: list, i: int, ring: Ring) -> Polynomial:
    out = {}
    for d, c in enumerate(coeffs):
        for m, v in c._terms.items():
            out[m[:i] + (d,) + m[i + 1:]] = v
    return Polynomial._raw(ring, out)


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _content(coeffs: list) -> Polynomial:
    c = coeffs[0].ring.zero()
    for a in coeffs:
        if a:
            c = gcd(c, a)
            if c.is_constant():
                break
    return c


def _prem(A: list, B: list) -> list:
    """Pseudo-remainder lc(B)^(deg A - deg B + 1) * A mod B."""
    dB = len(B) - 1
    lcB = B[-1]
    R = list(A)
    e = len(A) - len(B) + 1
    while len(R) - 1 >= dB and R:
        k = len(R) - 1 - dB
        lcR = R[-1]
        R = [lcB * c for c in R]
        for j, c in enumerate(B):
            R[j + k] = R[j + k] - lcR * c
        R.pop()
        _trim(R)
        e -= 1
    if e:
        f = pow_(lcB, e)
        R = [f * c for c in R]
    return R


def _primitive(coeffs: list) -> list:
    c = _content(coeffs)
    return [divide_exact(a, c) for a in coeffs]


def _uni_gcd_degree(a: list, b: list) -> int:
    """Degree of gcd of two dense univariate polynomials over Q (coefficient lists)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        while len(a) >= len(b) and a:
            c = a[-1] / b[-1]
            k = len(a) - len(b)
            for j, v in enumerate(b):
                a[j + k] -= c * v
            a.pop()
            _trim(a)
        a, b = b, a
    return len(a) - 1


_PROBE_SEEDS = (0x5EED, 0xC0FFEE, 0xBEEF)


def _coprime_by_specialization(A: list, B: list, n: int) -> bool:
    """Sound certificate that primitive A, B (in x_v) share no factor involving x_v.

    At a point where both leading coefficients are nonzero, a common factor of
    positive x_v-degree survives specialization, so a constant univariate gcd
    there rules it out.  A False answer proves nothing.
    """
    for s in _PROBE_SEEDS:
        rnd = random.Random(s)
        point = [Fraction(rnd.randint(-97, 97)) for _ in range(n)]
        if not (A[-1].evaluate(point) and B[-1].evaluate(point)):
            continue
        a = [c.evaluate(point) for c in A]
        b = [c.evaluate(point) for c in B]
        if _uni_gcd_degree(a, b) == 0:
            return True
    return False


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Greatest common divisor, normalized (grevlex-leading coefficient 1)."""
    q = p._coerce(q)
    if not q._terms:
        return normalize(p)
    if not p._terms:
        return normalize(q)
    v = _main_variable(p, q)
    if v is None:
        return p.ring.one()
    A = _to_univariate(p, v)
    B = _to_univariate(q, v)
    if len(A) == 1 or len(B) == 1:
        # one argument is free of x_v: the gcd divides its content too
        c = gcd(_content(A), _content(B))
        return normalize(c)
    if len(A) < len(B):
        A, B = B, A
    a, b = _content(A), _content(B)
    d = gcd(a, b)
    A = [divide_exact(x, a) for x in A]
    B = [divide_exact(x, b) for x in B]
    if _coprime_by_specialization(A, B, p.ring.n):
        return normalize(d)
    g = h = p.ring.one()
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B)
        if not R:
            result = _from_univariate(_primitive(B), v, p.ring) * d
            return normalize(result)
        if len(R) == 1:
            return normalize(d)
        A = B
        div = g * pow_(h, delta)
        B = [divide_exact(x, div) for x in R]
        g = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divide_exact(pow_(g, delta), pow_(h, delta - 1))


def _squarefree(p: Polynomial) -> Polynomial:
    if p.is_constant():
        return p.ring.one()
    v = _main_variable(p)
    c = _content(_to_univariate(p, v))
    pp = divide_exact(p, c)
    # pp has no factor free of x_v, so gcd(pp, d pp/d x_v) collects exactly the repeated ones
    repeated = gcd(pp, partial_derivative(pp, v))
    return _squarefree(c) * divide_exact(pp, repeated)


def squarefree_part(p: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of p, normalized.

    Splits p into its content and primitive part with respect to the last
    occurring variable and divides the primitive part by its gcd with its
    derivative; the content is treated recursively.
    """
    if p.is_constant():
        raise ConstantInput("squarefree part of a constant is undefined")
    return normalize(_squarefree(p))
