from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from germlab import Polynomial, Ring

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


R2 = Ring("x,y")
R3 = Ring("x,y,z")


@pytest.fixture
def R():
    return R2


def polynomials(ring, max_terms=5, max_exp=3, coeff_range=4):
    """Hypothesis strategy for small sparse polynomials with rational coefficients."""
    mono = st.tuples(*[st.integers(0, max_exp)] * ring.n)
    coeff = st.fractions(min_value=-coeff_range, max_value=coeff_range, max_denominator=3)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: Polynomial(ring, d))


def germs(ring, max_terms=4, max_exp=4):
    """Polynomials with zero constant term."""
    return polynomials(ring, max_terms, max_exp).map(lambda p: p - p.constant_term)


def points(n):
    return st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=4)] * n)


__all__ = ["R2", "R3", "polynomials", "germs", "points", "Fraction"]
