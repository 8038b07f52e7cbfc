"""Curated singularity germs, seeded random generators, and the verification suite.

Seed contract (stable across releases): case ``i`` of a suite with seed ``s``
draws from ``numpy.random.default_rng(case_seed(s, i))`` where
``case_seed(s, i)`` is the first 64-bit word of ``SeedSequence([s, i])``.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from .errors import DegreeCapExceeded, GenerationExhausted, InvalidParameter
from .germmap import (
    NOT_FINITE,
    MapGerm,
    SkipReason,
    VerdictStatus,
    VerificationReport,
    Verdict,
    local_multiplicity,
    verify_theorem,
)
from .localsb import DEFAULT_DEGREE_CAP
from .milnor import MilnorKind, milnor_number
from .polyring import Polynomial, Ring

MAX_ATTEMPTS = 20
DEFAULT_NAMES = ("x", "y", "z", "w")


def default_ring(n: int) -> Ring:
    if n <= len(DEFAULT_NAMES):
        return Ring(DEFAULT_NAMES[:n])
    return Ring([f"x{i + 1}" for i in range(n)])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    germ: Polynomial
    expected_mu: int
    irreducible: Optional[bool]  # None = not known from classical theory


def _stabilize(ring: Ring, base: Polynomial) -> Polynomial:
    # add squares of the variables beyond the first two
    return base + sum((v**2 for v in ring.gens()[2:]), ring.zero())


def ade(family: str, k: Optional[int] = None, n: int = 2) -> CatalogEntry:
    """Simple singularity normal forms, stabilized by squares when n > 2.

    A_k: x^(k+1) + y^2, D_k: x^(k-1) + x*y^2, E6: x^3 + y^4, E7: x^3 + x*y^3,
    E8: x^3 + y^5.
    """
    if n < 2:
        raise InvalidParameter("ADE normal forms need at least two variables")
    ring = default_ring(n)
    x, y = ring.gens()[:2]
    fam = family.upper()
    if fam == "A":
        if k is None or k < 1:
            raise InvalidParameter("A_k needs k >= 1")
        base, mu, name = x ** (k + 1) + y**2, k, f"A{k}"
        irreducible = k % 2 == 0
    elif fam == "D":
        if k is None or k < 4:
            raise InvalidParameter("D_k needs k >= 4")
        base, mu, name = x ** (k - 1) + x * y**2, k, f"D{k}"
        irreducible = False
    elif fam in ("E6", "E7", "E8"):
        if k is not None:
            raise InvalidParameter(f"{fam} takes no parameter")
        base = {"E6": x**3 + y**4, "E7": x**3 + x * y**3, "E8": x**3 + y**5}[fam]
        mu, name = int(fam[1]), fam
        irreducible = fam != "E7"
    else:
        raise InvalidParameter(f"unknown ADE family {family!r}")
    if n > 2:
        irreducible = None
    return CatalogEntry(name, _stabilize(ring, base), mu, irreducible)


def brieskorn(exponents: Sequence[int]) -> CatalogEntry:
    """Brieskorn-Pham germ x_1^a_1 + ... + x_n^a_n with mu = prod(a_i - 1)."""
    exps = [int(a) for a in exponents]
    if not exps or any(a < 2 for a in exps):
        raise InvalidParameter(f"Brieskorn exponents must all be >= 2, got {exponents}")
    ring = default_ring(len(exps))
    germ = sum((v**a for v, a in zip(ring.gens(), exps)), ring.zero())
    mu = math.prod(a - 1 for a in exps)
    irreducible = math.gcd(*exps) == 1 if len(exps) == 2 else None
    return CatalogEntry(f"Brieskorn{exps}", germ, mu, irreducible)


def standard_catalog() -> List[CatalogEntry]:
    """ADE germs of acceptance scope, checked against their expected Milnor numbers."""
    entries = [ade("A", k) for k in range(1, 11)]
    entries += [ade("D", k) for k in range(4, 9)]
    entries += [ade(e) for e in ("E6", "E7", "E8")]
    for e in entries:
        got = milnor_number(e.germ)
        if got.kind is not MilnorKind.FINITE or got.mu != e.expected_mu:
            raise AssertionError(f"catalog entry {e.name}: expected mu={e.expected_mu}, got {got}")
    return entries


def suite_germs(n: int) -> List[CatalogEntry]:
    """Germ pool for the theorem suite.

    For n = 2 only germs that are irreducible by classical theory are used.
    For n = 3 stabilized ADE germs and small Brieskorn germs are used.
    """
    if n == 2:
        pool = [ade("A", k) for k in (2, 4, 6)] + [ade("E6"), ade("E8")]
        pool += [brieskorn(a) for a in ([2, 9], [3, 7], [4, 5])]
        return [e for e in pool if e.irreducible]
    if n == 3:
        pool = [ade("A", k, n=3) for k in (1, 2, 3)] + [ade("D", 4, n=3), ade("E6", n=3)]
        pool += [brieskorn(a) for a in ([2, 3, 3], [3, 3, 3])]
        return pool
    raise InvalidParameter(f"suite germ pool only defined for n in (2, 3), got {n}")


# -- random generators --------------------------------------------------------


def case_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, index]).generate_state(1, dtype=np.uint64)[0])


def _random_monomial(rng, n: int, degree: int, allowed: Sequence[int]):
    e = [0] * n
    for _ in range(degree):
        e[allowed[int(rng.integers(len(allowed)))]] += 1
    return tuple(e)


def _random_coeff(rng) -> int:
    c = int(rng.integers(1, 4))
    return c if rng.integers(2) else -c


def random_finite_map(
    n: int,
    max_degree: int,
    seed: int,
    ring: Optional[Ring] = None,
    exponents: Optional[Sequence[int]] = None,
    perturb: bool = True,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> MapGerm:
    """F_i = x_i^a_i + p_i with p_i a random polynomial in the other variables.

    Each a_i lies in [1, max_degree] and p_i has zero constant term and at
    most two terms.  Candidates are redrawn (up to 20 times) until the local
    multiplicity is finite.  ``exponents``/``perturb`` pin the shape, e.g.
    ``exponents=(1, 1), perturb=False`` gives the identity map.
    """
    if n < 1 or max_degree < 1:
        raise InvalidParameter("need n >= 1 and max_degree >= 1")
    ring = ring or default_ring(n)
    rng = np.random.default_rng(seed)
    gens = ring.gens()
    for _ in range(MAX_ATTEMPTS):
        comps = []
        for i in range(n):
            a = exponents[i] if exponents is not None else int(rng.integers(1, max_degree + 1))
            comp = gens[i] ** a
            others = [j for j in range(n) if j != i]
            if perturb and others:
                for _ in range(int(rng.integers(0, 3))):
                    deg = int(rng.integers(1, max_degree + 1))
                    m = _random_monomial(rng, n, deg, others)
                    comp = comp + ring.monomial(m, _random_coeff(rng))
            comps.append(comp)
        F = MapGerm(comps)
        try:
            if local_multiplicity(F, degree_cap) is not NOT_FINITE:
                return F
        except DegreeCapExceeded:
            pass
    raise GenerationExhausted(f"no finite map found in {MAX_ATTEMPTS} attempts (seed {seed})")


def random_germ(
    n: int,
    max_degree: int,
    seed: int,
    ring: Optional[Ring] = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Polynomial:
    """Brieskorn germ perturbed by random terms of degree 2..max_degree, with isolated singularity.

    Redrawn up to 20 times until the singularity at the origin is isolated.
    """
    if max_degree < 2:
        raise InvalidParameter("random germs need max_degree >= 2")
    ring = ring or default_ring(n)
    rng = np.random.default_rng(seed)
    gens = ring.gens()
    for _ in range(MAX_ATTEMPTS):
        g = ring.zero()
        for v in gens:
            g = g + _random_coeff(rng) * v ** int(rng.integers(2, max_degree + 1))
        for _ in range(int(rng.integers(1, 4))):
            deg = int(rng.integers(2, max_degree + 1))
            g = g + ring.monomial(_random_monomial(rng, n, deg, range(n)), _random_coeff(rng))
        if g.is_zero():
            continue
        try:
            res = milnor_number(g, degree_cap)
        except DegreeCapExceeded:
            continue
        if res.kind is MilnorKind.FINITE:
            return g
    raise GenerationExhausted(f"no isolated germ found in {MAX_ATTEMPTS} attempts (seed {seed})")


# -- suite ----------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 7
    num_cases: int = 200
    n: int = 2
    max_degree: Optional[int] = None  # None: 3 for n = 2, 2 for n = 3
    degree_cap: int = DEFAULT_DEGREE_CAP
    random_germs: bool = False
    identity_maps: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.num_cases < 1:
            raise InvalidParameter("num_cases must be >= 1")
        if self.n not in (2, 3):
            raise InvalidParameter("n must be 2 or 3")
        if self.max_degree is not None and self.max_degree < 2:
            raise InvalidParameter("max_degree must be >= 2")

    @property
    def effective_max_degree(self) -> int:
        if self.max_degree is not None:
            return self.max_degree
        return 3 if self.n == 2 else 2


@dataclass
class SuiteReport:
    config: SuiteConfig
    cases: List[VerificationReport]
    case_names: List[str]
    counters: Dict[str, object]
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def violated(self) -> int:
        return self.counters["violated"] + self.counters["corollary_violated"]

    @property
    def success(self) -> bool:
        return self.violated == 0


def suite_case(cfg: SuiteConfig, index: int):
    """The (name, g, F, seed) of case ``index``; F is None if generation failed."""
    s = case_seed(cfg.seed, index)
    n, d = cfg.n, cfg.effective_max_degree
    ring = default_ring(n)
    if cfg.random_germs:
        name, g = "random", random_germ(n, max(d, 2) + 1, s, ring, cfg.degree_cap)
    else:
        pool = suite_germs(n)
        entry = pool[index % len(pool)]
        name, g = entry.name, entry.germ
    if cfg.identity_maps:
        return name, g, MapGerm.identity(ring), s
    try:
        F = random_finite_map(n, d, s, ring, degree_cap=cfg.degree_cap)
    except GenerationExhausted:
        F = None
    return name, g, F, s


def _run_case(args):
    cfg, index = args
    name, g, F, s = suite_case(cfg, index)
    if F is None:
        v = Verdict.skipped(SkipReason.GENERATION_EXHAUSTED)
        return name, VerificationReport(
            g=g, F=None, mu_V=None, mu_W=None, r=None, pure=None,
            inequality_verdict=v, corollary_verdict=v, seed=s,
        )
    return name, verify_theorem(g, F, cfg.degree_cap, seed=s)


def tally(cases: Sequence[VerificationReport]) -> Dict[str, object]:
    """Counters; holds + violated + outside_hypotheses + skipped == number of cases."""
    counters = {
        "holds": 0,
        "violated": 0,
        "equality_cases": 0,
        "outside_hypotheses": 0,
        "skipped": 0,
        "skipped_by_reason": {},
        "corollary_holds": 0,
        "corollary_violated": 0,
    }
    for rep in cases:
        status = rep.inequality_verdict.status
        if status is VerdictStatus.SKIPPED:
            counters["skipped"] += 1
            key = rep.inequality_verdict.reason.value
            counters["skipped_by_reason"][key] = counters["skipped_by_reason"].get(key, 0) + 1
        elif rep.outside_hypotheses:
            counters["outside_hypotheses"] += 1
        elif status is VerdictStatus.HOLDS:
            counters["holds"] += 1
            if rep.equality:
                counters["equality_cases"] += 1
        else:
            counters["violated"] += 1
        if rep.corollary_verdict.status is VerdictStatus.HOLDS:
            counters["corollary_holds"] += 1
        elif rep.corollary_verdict.status is VerdictStatus.VIOLATED:
            counters["corollary_violated"] += 1
    counters["skipped_by_reason"] = dict(sorted(counters["skipped_by_reason"].items()))
    return counters


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Verify the inequality on ``cfg.num_cases`` (germ, map) pairs.

    Cases run in index order; with ``workers > 1`` they are spread over
    processes and merged back in index order.
    """
    start = time.perf_counter()
    jobs = [(cfg, i) for i in range(cfg.num_cases)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            results = list(pool.map(_run_case, jobs, chunksize=4))
    else:
        results = [_run_case(j) for j in jobs]
    names = [r[0] for r in results]
    cases = [r[1] for r in results]
    return SuiteReport(cfg, cases, names, tally(cases), time.perf_counter() - start)
