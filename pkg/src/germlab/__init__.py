"""germ-lab: exact Milnor numbers, finite map germs and pullback checks.

Polynomials have exact rational coefficients.  Milnor numbers and local
multiplicities come from local standard bases (Mora's normal form), with an
independent linear-algebra oracle for cross-checking.
"""
from .catalog import (
    CatalogEntry,
    SuiteConfig,
    SuiteReport,
    ade,
    brieskorn,
    case_seed,
    random_finite_map,
    random_germ,
    run_suite,
    standard_catalog,
)
from .errors import *  # noqa: F401,F403
from .germmap import (
    NOT_FINITE,
    MapGerm,
    ReducedPreimage,
    SkipReason,
    Verdict,
    VerdictStatus,
    VerificationReport,
    local_multiplicity,
    pullback,
    reduced_preimage,
    verify_theorem,
)
from .localsb import LocalOrder, colength, leading_ideal, mora_normal_form, standard_basis
from .milnor import MilnorKind, MilnorResult, jacobian_ideal, milnor_number, milnor_oracle
from .parser import parse_map, parse_polynomial
from .polyring import (
    INF,
    Polynomial,
    Ring,
    divide_exact,
    gcd,
    normalize,
    order_at_origin,
    partial_derivative,
    squarefree_part,
    substitute,
)

__version__ = "0.1.0"
