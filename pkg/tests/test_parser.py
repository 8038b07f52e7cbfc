from fractions import Fraction

import pytest
from hypothesis import given

from conftest import R2, R3, polynomials
from germlab import parse_map, parse_polynomial
from germlab.errors import NegativeExponent, ParseError, UnknownVariable

x, y = R2.gens()


def test_basic_expressions():
    assert parse_polynomial("x^3 - y^2", ["x", "y"]) == x**3 - y**2
    assert parse_polynomial("3/2*x*y + y^3", R2) == Fraction(3, 2) * x * y + y**3
    assert parse_polynomial("(x + y)^2", R2) == x**2 + 2 * x * y + y**2
    assert parse_polynomial("-x + 2", R2) == 2 - x
    assert parse_polynomial("x -\n  y", R2) == x - y


def test_map_parsing():
    assert parse_map("x; y^2", R2) == [x, y**2]


@pytest.mark.parametrize(
    "text, error, column",
    [("x^-1", NegativeExponent, 3), ("x + w", UnknownVariable, 5), ("2x", ParseError, 2),
     ("x +", ParseError, 4), ("1/0", ParseError, 3), ("x $ y", ParseError, 3), ("", ParseError, 1),
     ("(x + y", ParseError, 7)],
)
def test_errors_carry_positions(text, error, column):
    with pytest.raises(error) as info:
        parse_polynomial(text, R2)
    assert info.value.column == column
    assert info.value.line == 1


def test_error_line_numbers():
    with pytest.raises(UnknownVariable) as info:
        parse_polynomial("x +\n  q", R2)
    assert (info.value.line, info.value.column) == (2, 3)


@given(polynomials(R2))
def test_round_trip(p):
    assert parse_polynomial(str(p), R2) == p


@given(polynomials(R3, max_exp=2))
def test_round_trip_three_variables(p):
    assert R3.parse(str(p)) == p
