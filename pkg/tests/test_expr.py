from fractions import Fraction

import pytest
from hypothesis import given

from conftest import goldens
from grand_antiprism.expr import ExpressionError, parse_golden
from grand_antiprism.golden import SIGMA, SQRT5, TAU, GoldenNumber


@pytest.mark.parametrize("text, value", [
    ("tau/2", TAU / 2),
    ("-1/2", GoldenNumber(Fraction(-1, 2))),
    ("sigma", SIGMA),
    ("(1 + sqrt5) / 2", TAU),
    ("tau * tau - tau", GoldenNumber(1)),
    ("+3", GoldenNumber(3)),
    ("-(sigma)/2", -SIGMA / 2),
    ("0", GoldenNumber(0)),
])
def test_values(text, value):
    assert parse_golden(text) == value


@pytest.mark.parametrize("text", [
    "", "tau**2", "1.5", "pi", "tau/0", "__import__('os')", "f(1)", "1 +", "[1]", "2 // 1",
])
def test_rejected(text):
    with pytest.raises(ExpressionError):
        parse_golden(text)


@given(goldens)
def test_roundtrip_through_text(x):
    a, b = x.a, x.b
    text = f"({a.numerator})/({a.denominator}) + ({b.numerator})/({b.denominator}) * sqrt5"
    assert parse_golden(text) == x
    assert parse_golden(text) - SQRT5 * b == a
