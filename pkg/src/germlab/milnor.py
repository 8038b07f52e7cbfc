"""Milnor numbers of hypersurface germs at the origin.

Two independent engines compute the Milnor number:

* :func:`milnor_number` takes a local standard basis of the Jacobian ideal
  and counts the standard monomials.
* :func:`milnor_oracle` does exact linear algebra on truncations
  Q[x]/(J + m^D) for growing D.  This is slow but shares no code with the
  standard-basis path beyond polynomial arithmetic.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .errors import CapExceededWithoutStabilization, ConstantInput, ZeroPolynomial
from .localsb import DEFAULT_DEGREE_CAP, colength, leading_ideal, standard_basis
from .polyring import INF, Polynomial, partial_derivative

DEFAULT_ORACLE_CAP = 24


class MilnorKind(enum.Enum):
    NOT_THROUGH_ORIGIN = "not_through_origin"
    SMOOTH_POINT = "smooth_point"
    FINITE = "finite"
    NON_ISOLATED = "non_isolated"


@dataclass(frozen=True)
class MilnorResult:
    kind: MilnorKind
    mu: Optional[int] = None

    @classmethod
    def finite(cls, mu: int) -> "MilnorResult":
        if mu < 1:
            raise ValueError("a singular point has Milnor number at least 1")
        return cls(MilnorKind.FINITE, mu)

    @classmethod
    def smooth(cls) -> "MilnorResult":
        return cls(MilnorKind.SMOOTH_POINT, 0)

    @classmethod
    def non_isolated(cls) -> "MilnorResult":
        return cls(MilnorKind.NON_ISOLATED)

    @classmethod
    def not_through_origin(cls) -> "MilnorResult":
        return cls(MilnorKind.NOT_THROUGH_ORIGIN)

    @property
    def is_defined(self) -> bool:
        """True when mu is a number (smooth points count as mu = 0)."""
        return self.kind in (MilnorKind.FINITE, MilnorKind.SMOOTH_POINT)

    def __str__(self):
        if self.kind is MilnorKind.FINITE:
            return f"Finite({self.mu})"
        return {
            MilnorKind.SMOOTH_POINT: "SmoothPoint",
            MilnorKind.NON_ISOLATED: "NonIsolated",
            MilnorKind.NOT_THROUGH_ORIGIN: "NotThroughOrigin",
        }[self.kind]


def jacobian_ideal(f: Polynomial) -> List[Polynomial]:
    """All n partial derivatives of f, zeros kept in place."""
    if f.is_constant():
        raise ConstantInput("the Jacobian ideal of a constant is not a hypersurface datum")
    return [partial_derivative(f, i) for i in range(f.ring.n)]


def milnor_number(f: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP) -> MilnorResult:
    """Classify the germ of {f = 0} at the origin and compute its Milnor number.

    f is expected to be reduced; pass ``squarefree_part(f)`` otherwise.
    Raises DegreeCapExceeded if the standard basis computation runs away.
    """
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a hypersurface")
    if f.constant_term:
        return MilnorResult.not_through_origin()
    J = jacobian_ideal(f)
    if any(g.constant_term for g in J):
        return MilnorResult.smooth()
    mu = colength(leading_ideal(standard_basis(J, degree_cap=degree_cap)))
    if mu is INF:
        return MilnorResult.non_isolated()
    return MilnorResult.finite(mu)


def _monomials_below(n: int, D: int):
    for total in range(D):
        for c in itertools.combinations_with_replacement(range(n), total):
            e = [0] * n
            for i in c:
                e[i] += 1
            yield tuple(e)


def truncated_colength(gens: List[Polynomial], D: int) -> int:
    """dim_Q Q[x]/(<gens> + m^D), by row reduction on the monomials of degree < D."""
    n = gens[0].ring.n
    monomials = list(_monomials_below(n, D))
    pivots: dict = {}
    for g in gens:
        if g.is_zero():
            continue
        low = min(sum(m) for m in g.terms)
        for m in monomials:
            if sum(m) + low >= D:
                continue
            row = {}
            for k, c in g.terms.items():
                t = tuple(a + b for a, b in zip(k, m))
                if sum(t) < D:
                    row[t] = c
            _insert_row(pivots, row)
    return len(monomials) - len(pivots)


def _row_key(m):
    return (sum(m), m)


def _insert_row(pivots: dict, row: dict) -> None:
    # pivot = lowest-degree monomial of the row
    while row:
        lead = min(row, key=_row_key)
        piv = pivots.get(lead)
        if piv is None:
            inv = 1 / row[lead]
            pivots[lead] = {k: v * inv for k, v in row.items()}
            return
        c = row[lead]
        for k, v in piv.items():
            s = row.get(k, 0) - c * v
            if s:
                row[k] = s
            else:
                row.pop(k, None)


def milnor_oracle(f: Polynomial, degree_cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Milnor number via truncated quotients Q[x]/(J + m^D), D = 1, 2, ...

    The truncated dimension is nondecreasing in D, and once two consecutive
    values agree the associated graded ring has vanished in that degree, so
    the value is final.  Raises CapExceededWithoutStabilization if D reaches
    ``degree_cap`` first, which happens for non-isolated singularities but
    also for isolated ones of very high determinacy.
    """
    J = [g for g in jacobian_ideal(f) if not g.is_zero()]
    prev = truncated_colength(J, 1)
    for D in range(2, degree_cap + 1):
        cur = truncated_colength(J, D)
        if cur == prev:
            return cur
        prev = cur
    raise CapExceededWithoutStabilization(
        f"truncated colength still growing at degree {degree_cap} (last value {prev})"
    )
