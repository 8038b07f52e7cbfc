"""Finite map germs (C^n, 0) -> (C^n, 0), pullbacks, and theorem verification.

The checked statement: for a finite map germ F and a hypersurface germ V
with isolated singularity, the preimage W = F^{-1}(V) satisfies
mu(W) >= mu(V), and consequently W smooth (with reduced structure) forces V
smooth.  The inequality is proved only when V and W are irreducible.  Then
g o F = h^r for the reduced equation h of W, so a failing pure-power test
shows W is reducible and the case falls outside the hypotheses.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from .errors import (
    ArityMismatch,
    DegreeCapExceeded,
    NotDivisible,
    NotThroughOrigin,
    RingMismatch,
    ZeroPullback,
)
from .localsb import DEFAULT_DEGREE_CAP, colength, leading_ideal, standard_basis
from .milnor import MilnorKind, MilnorResult, milnor_number
from .polyring import INF, Polynomial, Ring, divide_exact, order_at_origin, pow_, squarefree_part, substitute

NOT_FINITE = INF


class MapGerm(Sequence[Polynomial]):
    """Origin-preserving polynomial map germ F = (F_1, ..., F_n) with n = source dimension."""

    def __init__(self, components: Sequence[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ArityMismatch("a map germ needs at least one component")
        ring = comps[0].ring
        if len(comps) != ring.n:
            raise ArityMismatch(f"{len(comps)} components for a ring with {ring.n} variables")
        for c in comps:
            if c.ring != ring:
                raise RingMismatch("map components live in different rings")
            if c.constant_term:
                raise NotThroughOrigin(f"component {c} does not vanish at the origin")
        self.components = comps
        self.ring = ring

    @classmethod
    def identity(cls, ring: Ring) -> "MapGerm":
        return cls(ring.gens())

    def __getitem__(self, i):
        return self.components[i]

    def __len__(self):
        return len(self.components)

    def __eq__(self, other):
        return isinstance(other, MapGerm) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def compose(self, inner: "MapGerm") -> "MapGerm":
        """self o inner, componentwise substitution."""
        return MapGerm([substitute(c, inner) for c in self.components])

    def __str__(self):
        return "; ".join(str(c) for c in self.components)

    def __repr__(self):
        return f"MapGerm({str(self)!r})"


def local_multiplicity(F: MapGerm, degree_cap: int = DEFAULT_DEGREE_CAP):
    """Colength of (F_1, ..., F_n) in the local ring; NOT_FINITE if infinite."""
    return colength(leading_ideal(standard_basis(list(F), degree_cap=degree_cap)))


def pullback(g: Polynomial, F: MapGerm) -> Polynomial:
    if g.constant_term:
        raise NotThroughOrigin(f"{g} does not vanish at the origin")
    return substitute(g, F)


@dataclass(frozen=True)
class ReducedPreimage:
    pullback: Polynomial
    h: Polynomial
    r: int
    pure: bool


def reduced_preimage(g: Polynomial, F: MapGerm) -> ReducedPreimage:
    """Reduced equation h of F^{-1}(V) and the exponent r with g o F = c * h^r.

    ``pure`` is False when g o F is not a constant times a power of h; r is
    then 1 by convention.
    """
    gF = pullback(g, F)
    if gF.is_zero():
        raise ZeroPullback("g o F vanishes identically")
    h = squarefree_part(gF)
    # r * ord(h) <= ord(g o F) bounds the search
    bound = order_at_origin(gF) // max(order_at_origin(h), 1)
    r, quotient = 0, gF
    while r < bound:
        try:
            quotient = divide_exact(quotient, h)
        except NotDivisible:
            break
        r += 1
    if r >= 1 and quotient.is_constant():
        return ReducedPreimage(gF, h, r, True)
    return ReducedPreimage(gF, h, 1, False)


class VerdictStatus(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    SKIPPED = "skipped"


class SkipReason(enum.Enum):
    MAP_NOT_FINITE = "map_not_finite"
    NON_ISOLATED_V = "non_isolated_v"
    NON_ISOLATED_W = "non_isolated_w"
    NOT_THROUGH_ORIGIN = "not_through_origin"
    DEGREE_CAP_EXCEEDED = "degree_cap_exceeded"
    ZERO_PULLBACK = "zero_pullback"
    GENERATION_EXHAUSTED = "generation_exhausted"


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    reason: Optional[SkipReason] = None

    @classmethod
    def skipped(cls, reason: SkipReason) -> "Verdict":
        return cls(VerdictStatus.SKIPPED, reason)

    def __str__(self):
        if self.reason is None:
            return self.status.value
        return f"{self.status.value}({self.reason.value})"


HOLDS = Verdict(VerdictStatus.HOLDS)
VIOLATED = Verdict(VerdictStatus.VIOLATED)


@dataclass(frozen=True)
class VerificationReport:
    g: Polynomial
    F: MapGerm
    mu_V: Optional[MilnorResult]
    mu_W: Optional[MilnorResult]
    r: Optional[int]
    pure: Optional[bool]
    inequality_verdict: Verdict
    corollary_verdict: Verdict
    multiplicity: object = None
    h: Optional[Polynomial] = None
    seed: Optional[int] = field(default=None, compare=False)

    @property
    def equality(self) -> bool:
        return (
            self.inequality_verdict == HOLDS
            and self.mu_V.mu == self.mu_W.mu
        )

    @property
    def outside_hypotheses(self) -> bool:
        """W detected reducible (g o F is not a pure power of h)."""
        return self.pure is False


def _skip_both(g, F, reason, **kw) -> VerificationReport:
    v = Verdict.skipped(reason)
    fields = dict(mu_V=None, mu_W=None, r=None, pure=None)
    fields.update(kw)
    return VerificationReport(g=g, F=F, inequality_verdict=v, corollary_verdict=v, **fields)


def verify_theorem(
    g: Polynomial,
    F: MapGerm,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    seed: Optional[int] = None,
) -> VerificationReport:
    """Check mu(F^{-1}(V)) >= mu(V) and the smoothness corollary for V = {g = 0}.

    Never raises for mathematical reasons: every obstacle becomes a skipped
    verdict with a machine-readable reason.
    """
    if g.constant_term or g.is_zero():
        return _skip_both(g, F, SkipReason.NOT_THROUGH_ORIGIN, seed=seed)
    try:
        mult = local_multiplicity(F, degree_cap)
        if mult is NOT_FINITE:
            return _skip_both(g, F, SkipReason.MAP_NOT_FINITE, multiplicity=mult, seed=seed)
        g_red = squarefree_part(g)
        mu_V = milnor_number(g_red, degree_cap)
        pre = reduced_preimage(g_red, F)
        mu_W = milnor_number(pre.h, degree_cap)
    except DegreeCapExceeded:
        return _skip_both(g, F, SkipReason.DEGREE_CAP_EXCEEDED, seed=seed)
    except ZeroPullback:
        return _skip_both(g, F, SkipReason.ZERO_PULLBACK, seed=seed)

    common = dict(
        g=g, F=F, mu_V=mu_V, mu_W=mu_W, r=pre.r, pure=pre.pure,
        multiplicity=mult, h=pre.h, seed=seed,
    )
    # the corollary needs no isolatedness: W smooth must force V smooth
    if mu_W.kind is MilnorKind.SMOOTH_POINT:
        corollary = HOLDS if mu_V.kind is MilnorKind.SMOOTH_POINT else VIOLATED
    else:
        corollary = HOLDS

    if mu_V.kind is MilnorKind.NON_ISOLATED:
        inequality = Verdict.skipped(SkipReason.NON_ISOLATED_V)
    elif mu_W.kind is MilnorKind.NON_ISOLATED:
        inequality = Verdict.skipped(SkipReason.NON_ISOLATED_W)
    elif not (mu_V.is_defined and mu_W.is_defined):
        inequality = Verdict.skipped(SkipReason.NOT_THROUGH_ORIGIN)
    else:
        inequality = HOLDS if mu_W.mu >= mu_V.mu else VIOLATED
    return VerificationReport(inequality_verdict=inequality, corollary_verdict=corollary, **common)
