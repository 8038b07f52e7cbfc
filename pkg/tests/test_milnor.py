import pytest
from hypothesis import given

from conftest import R2, R3, germs
from germlab import MilnorKind, MilnorResult, jacobian_ideal, milnor_number, milnor_oracle
from germlab.errors import CapExceededWithoutStabilization, ConstantInput, ZeroPolynomial

x, y = R2.gens()


@pytest.mark.parametrize(
    "text, mu",
    [("x^2 + y^2", 1), ("x^3 - y^2", 2), ("x^3 + y^3", 4), ("x^3 + x*y^3", 7), ("x^3 + y^5", 8),
     ("x^8 + y^8 + x^3*y^3", 33), ("x^2*y + y^4", 5)],
)
def test_known_milnor_numbers(text, mu):
    f = R2.parse(text)
    assert milnor_number(f) == MilnorResult.finite(mu)
    assert milnor_oracle(f) == mu


def test_classification():
    assert milnor_number(x).kind is MilnorKind.SMOOTH_POINT
    assert milnor_number(x).mu == 0
    assert milnor_number(x + y**2 + x * y).kind is MilnorKind.SMOOTH_POINT
    assert milnor_number(1 + x).kind is MilnorKind.NOT_THROUGH_ORIGIN
    assert milnor_number(x**2 * y**2).kind is MilnorKind.NON_ISOLATED
    assert milnor_number((x**2 - y**3) ** 2).kind is MilnorKind.NON_ISOLATED
    with pytest.raises(ZeroPolynomial):
        milnor_number(R2.zero())


def test_result_text():
    assert str(MilnorResult.finite(2)) == "Finite(2)"
    assert str(MilnorResult.non_isolated()) == "NonIsolated"
    assert not MilnorResult.non_isolated().is_defined
    with pytest.raises(ValueError):
        MilnorResult.finite(0)


def test_jacobian_ideal():
    assert jacobian_ideal(x**3 - y**2) == [3 * x**2, -2 * y]
    with pytest.raises(ConstantInput):
        jacobian_ideal(R2.const(3))


def test_oracle_gives_up_on_non_isolated():
    with pytest.raises(CapExceededWithoutStabilization):
        milnor_oracle(x**2 * y**2, degree_cap=10)


def test_three_variables():
    X, Y, Z = R3.gens()
    f = X**3 + Y**4 + Z**2
    assert milnor_number(f).mu == 6
    assert milnor_oracle(f) == 6


@given(germs(R2, max_exp=5, max_terms=4))
def test_engines_agree_on_random_germs(g):
    f = g + x**5 + y**6
    res = milnor_number(f)
    if res.kind is MilnorKind.FINITE:
        assert milnor_oracle(f, degree_cap=40) == res.mu
