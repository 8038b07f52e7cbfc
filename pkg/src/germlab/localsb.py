"""Standard bases in the local ring at the origin.

Uses the negative-degree reverse-lexicographic order ("ds" in Singular's
naming), where lower total degree means larger and 1 is the largest
monomial.  Reduction is Mora's tangent-cone normal form.  The leading ideal
of a standard basis determines the colength of the ideal in the local ring,
and that is how the Milnor number and the local multiplicity of a map
are computed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DegreeCapExceeded, EmptyIdeal, ReductionBudgetExceeded, RingMismatch, ZeroPolynomial
from .polyring import INF, Monomial, Polynomial

DEFAULT_DEGREE_CAP = 60
# reduction steps allowed per normal form; isolated cases stay far below this
MAX_REDUCTION_STEPS = 2000


class Cmp(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class LocalOrder:
    """Negative-degree reverse lexicographic order on monomials of n variables."""

    n: int
    kind: str = "ds"

    def key(self, m: Monomial):
        # larger key = larger monomial
        return (-sum(m), tuple(-e for e in reversed(m)))

    def leading_monomial(self, p: Polynomial) -> Monomial:
        if p.is_zero():
            raise ZeroPolynomial("the zero polynomial has no leading monomial")
        return max(p.terms, key=self.key)


def compare(a: Monomial, b: Monomial, order: LocalOrder) -> Cmp:
    if len(a) != len(b) or len(a) != order.n:
        raise RingMismatch(f"monomials {a} and {b} do not both have {order.n} variables")
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Cmp.EQUAL
    return Cmp.GREATER if ka > kb else Cmp.LESS


def ecart(p: Polynomial, order: LocalOrder) -> int:
    if p.is_zero():
        raise ZeroPolynomial("ecart of the zero polynomial")
    return p.total_degree() - sum(order.leading_monomial(p))


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class _Entry:
    """Polynomial with cached leading term and ecart, used inside reductions."""

    __slots__ = ("poly", "lm", "lc", "ecart")

    def __init__(self, poly: Polynomial, order: LocalOrder):
        self.poly = poly
        self.lm = order.leading_monomial(poly)
        self.lc = poly.terms[self.lm]
        self.ecart = poly.total_degree() - sum(self.lm)


def _reduce_step(h: _Entry, g: _Entry, order: LocalOrder) -> Polynomial:
    shift = tuple(a - b for a, b in zip(h.lm, g.lm))
    return h.poly - g.poly.mul_term(shift, h.lc / g.lc)


def _truncate(p: Polynomial, bound) -> Polynomial:
    if bound is None:
        return p
    return Polynomial._raw(p.ring, {m: c for m, c in p.terms.items() if sum(m) < bound})


def _mora(
    p: Polynomial,
    reducers: List[_Entry],
    order: LocalOrder,
    degree_cap: int,
    corner=None,
) -> Polynomial:
    # corner = d means m^d lies in the ideal: terms of degree >= d are dropped,
    # and plain reduction terminates because only finitely many monomials remain
    p = _truncate(p, corner)
    if p.is_zero():
        return p
    T = list(reducers)
    h = _Entry(p, order)
    steps = 0
    while True:
        steps += 1
        if steps > MAX_REDUCTION_STEPS:
            raise ReductionBudgetExceeded(h.poly.total_degree(), degree_cap, MAX_REDUCTION_STEPS)
        best = None
        for g in T:
            if _divides(g.lm, h.lm) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            return h.poly
        if corner is None and best.ecart > h.ecart:
            T.append(h)
        r = _truncate(_reduce_step(h, best, order), corner)
        if r.is_zero():
            return r
        deg = r.total_degree()
        if deg > degree_cap:
            raise DegreeCapExceeded(deg, degree_cap)
        h = _Entry(r, order)


def mora_normal_form(
    p: Polynomial,
    G: Sequence[Polynomial],
    order: LocalOrder | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Polynomial:
    """Weak normal form of p with respect to G in the local ring.

    The result NF satisfies u*p - NF in <G> for some unit u (nonzero constant
    term), and NF is 0 or its leading monomial is divisible by no leading
    monomial of G.  Reducers of minimal ecart are preferred, ties going to the
    earliest one; partial remainders of larger ecart are recycled as
    reducers as in Mora's algorithm.
    """
    order = order or LocalOrder(p.ring.n)
    entries = []
    for g in G:
        if g.is_zero():
            raise ZeroPolynomial("normal form generators must be nonzero")
        if g.ring != p.ring:
            raise RingMismatch(f"{g.ring} vs {p.ring}")
        entries.append(_Entry(g, order))
    return _mora(p, entries, order, degree_cap)


def s_polynomial(f: Polynomial, g: Polynomial, order: LocalOrder) -> Polynomial:
    ef, eg = _Entry(f, order), _Entry(g, order)
    lcm = _lcm(ef.lm, eg.lm)
    a = f.mul_term(tuple(x - y for x, y in zip(lcm, ef.lm)), 1 / ef.lc)
    b = g.mul_term(tuple(x - y for x, y in zip(lcm, eg.lm)), 1 / eg.lc)
    return a - b


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators."""

    generators: Tuple[Monomial, ...]
    n: int

    def __init__(self, monomials: Iterable[Monomial], n: int | None = None):
        mons = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
        if n is None:
            if not mons:
                raise ValueError("cannot infer the variable count of an empty monomial ideal")
            n = len(mons[0])
        minimal: List[Monomial] = []
        for m in mons:
            if len(m) != n:
                raise RingMismatch(f"monomial {m} does not have {n} variables")
            if not any(_divides(k, m) for k in minimal):
                minimal.append(m)
        object.__setattr__(self, "generators", tuple(minimal))
        object.__setattr__(self, "n", n)

    def contains(self, m: Monomial) -> bool:
        return any(_divides(g, m) for g in self.generators)

    def pure_powers(self):
        """Smallest k with x_i^k in the ideal, per variable (INF if none)."""
        out = []
        for i in range(self.n):
            ks = [g[i] for g in self.generators if all(e == 0 for j, e in enumerate(g) if j != i)]
            out.append(min(ks) if ks else INF)
        return out


@dataclass(frozen=True)
class StandardBasis:
    generators: Tuple[Polynomial, ...]
    order: LocalOrder
    leading_monomials: Tuple[Monomial, ...] = field(repr=False)

    @property
    def ring(self):
        return self.generators[0].ring

    def normal_form(self, p: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP) -> Polynomial:
        return mora_normal_form(p, self.generators, self.order, degree_cap)

    def is_complete(self, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
        """True iff every S-polynomial of two generators has normal form 0."""
        for f, g in itertools.combinations(self.generators, 2):
            if not self.normal_form(s_polynomial(f, g, self.order), degree_cap).is_zero():
                return False
        return True


def standard_basis(
    gens: Sequence[Polynomial],
    order: LocalOrder | None = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> StandardBasis:
    """Standard basis of the ideal generated by ``gens`` in the local ring.

    Buchberger pair loop over Mora normal forms, skipping pairs with coprime
    leading monomials.  As soon as the leading monomials found so far contain
    all monomials of some degree d, that power of the maximal ideal lies in
    the ideal (Nakayama), so terms of degree >= d are discarded from then on
    and the degree-d monomials join the basis.  Generators whose leading
    monomial is a multiple of another's are removed at the end.
    """
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        raise EmptyIdeal("all generators are zero")
    ring = nonzero[0].ring
    for g in nonzero:
        if g.ring != ring:
            raise RingMismatch(f"{g.ring} vs {ring}")
    order = order or LocalOrder(ring.n)

    # a unit generator makes the ideal the whole ring
    for g in nonzero:
        if g.constant_term:
            one = ring.one()
            return StandardBasis((one,), order, ((0,) * ring.n,))

    S: List[_Entry] = []
    pairs = []
    corner = None

    def update_corner():
        nonlocal corner
        d = _corner_degree([e.lm for e in S if e is not None], ring.n)
        if d is None or (corner is not None and d >= corner):
            return
        corner = d
        for k, e in enumerate(S):
            if e is not None:
                t = _truncate(e.poly, corner)
                S[k] = _Entry(t, order) if not t.is_zero() else None

    def push(h: Polynomial):
        e = _Entry(h, order)
        j = len(S)
        for i, f in enumerate(S):
            if f is not None:
                pairs.append((sum(_lcm(f.lm, e.lm)), i, j))
        S.append(e)
        update_corner()

    def reducers():
        return [e for e in S if e is not None]

    for g in nonzero:
        h = _mora(g, reducers(), order, degree_cap, corner)
        if not h.is_zero():
            push(h)

    while pairs:
        pairs.sort(reverse=True)
        _, i, j = pairs.pop()
        f, g = S[i], S[j]
        if f is None or g is None:
            continue
        if all(a == 0 or b == 0 for a, b in zip(f.lm, g.lm)):
            continue
        h = _mora(s_polynomial(f.poly, g.poly, order), reducers(), order, degree_cap, corner)
        if not h.is_zero():
            push(h)

    entries = reducers()
    if corner is not None:
        # the monomials of degree `corner` lie in the ideal; keep those still needed
        for m in _monomials_of_degree(ring.n, corner):
            if not any(_divides(e.lm, m) for e in entries):
                entries.append(_Entry(ring.monomial(m), order))
    kept: List[_Entry] = []
    for idx, e in enumerate(entries):
        redundant = False
        for jdx, f in enumerate(entries):
            if jdx == idx or not _divides(f.lm, e.lm):
                continue
            # keep the first of equal leading monomials
            if f.lm != e.lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            kept.append(e)
    return StandardBasis(
        tuple(e.poly for e in kept), order, tuple(e.lm for e in kept)
    )


def _monomials_of_degree(n: int, d: int):
    for c in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in c:
            e[i] += 1
        yield tuple(e)


def _max_outside_degree(gens: List[Monomial], n: int) -> int:
    # largest degree of a monomial outside the ideal (finite case), -1 if none
    if any(not any(g) for g in gens):
        return -1
    if n == 1:
        return min(g[0] for g in gens) - 1
    bound = min(g[-1] for g in gens if all(e == 0 for e in g[:-1]))
    best = -1
    for e in range(bound):
        sub = _max_outside_degree([g[:-1] for g in gens if g[-1] <= e], n - 1)
        if sub >= 0:
            best = max(best, sub + e)
    return best


def _corner_degree(lms: List[Monomial], n: int):
    """Least d with every monomial of degree d among the multiples of ``lms``, or None."""
    M = MonomialIdeal(lms, n) if lms else None
    if M is None or any(k is INF for k in M.pure_powers()):
        return None
    return _max_outside_degree(list(M.generators), n) + 1


def leading_ideal(B: StandardBasis) -> MonomialIdeal:
    return MonomialIdeal(B.leading_monomials, B.order.n)


def _count_outside(gens: List[Monomial], n: int) -> int:
    # monomials in n variables outside the ideal spanned by gens; finite case only
    if n == 0:
        return 0 if gens else 1
    if n == 1:
        return min(g[0] for g in gens)
    last = [g[-1] for g in gens if all(e == 0 for e in g[:-1])]
    bound = min(last)
    total = 0
    for e in range(bound):
        sliced = [g[:-1] for g in gens if g[-1] <= e]
        total += _count_outside(sliced, n - 1)
    return total


def colength(M: MonomialIdeal):
    """Number of monomials outside M, or INF when some variable has no pure power in M."""
    if any(k is INF for k in M.pure_powers()):
        return INF
    return _count_outside(list(M.generators), M.n)
