from fractions import Fraction
from math import factorial

import pytest
import sympy

from winfinity.series import PowerSeries, e_x_minus_one, exp_quotient


def sympy_coeffs(expr, order):
    x = sympy.Symbol("x")
    poly = sympy.series(expr(x), x, 0, order + 1).removeO()
    return [Fraction(str(poly.coeff(x, n))) for n in range(order + 1)]


def test_exp_linear():
    assert PowerSeries.exp_linear(2, 4).coeffs == [Fraction(2**n, factorial(n)) for n in range(5)]


@pytest.mark.parametrize("s", [Fraction(1, 2), -3, 0, Fraction(-7, 4), 5])
def test_exp_quotient_matches_sympy(s):
    want = sympy_coeffs(lambda x: (sympy.exp(sympy.Rational(str(s)) * x) - 1) / (sympy.exp(x) - 1), 8)
    assert exp_quotient(s, 8).coeffs == want


def test_division_and_exp_roundtrip():
    a = PowerSeries([0, 1, Fraction(1, 3), -2], 6)
    e = a.exp()
    assert (e / e).coeffs == [1] + [0] * 6
    assert e_x_minus_one(5).coeffs == [0] + [Fraction(1, factorial(n)) for n in range(1, 6)]


def test_errors():
    with pytest.raises(ZeroDivisionError):
        PowerSeries([1, 2]) / PowerSeries([0, 1])
    with pytest.raises(ValueError):
        PowerSeries([1, 1]).exp()
    with pytest.raises(ValueError):
        PowerSeries([1, 1]).shift_down()
    with pytest.raises(ValueError):
        PowerSeries([1, 1]).truncate(3)
