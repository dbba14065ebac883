from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from winfinity.scalars import (
    Rational,
    as_rational,
    falling_factorial_coeffs,
    format_rational,
    gen_binomial,
    int_binomial,
    stirling2_coeffs,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_binomial_examples():
    assert gen_binomial(Fraction(7, 3), 0) == 1
    assert all(gen_binomial(-1, k) == (-1) ** k for k in range(10))
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_binomial_rejects_negative_r():
    with pytest.raises(ValueError):
        gen_binomial(1, -1)


@given(rationals, st.integers(0, 9))
def test_binomial_matches_sympy(x, r):
    assert gen_binomial(x, r) == Fraction(str(sympy.binomial(sympy.Rational(x.numerator, x.denominator), r)))


@given(st.integers(-30, 30), st.integers(0, 8))
def test_integer_binomial(x, r):
    assert int_binomial(x, r) == gen_binomial(x, r)


def test_falling_factorial_examples():
    assert falling_factorial_coeffs(0) == [1]
    assert falling_factorial_coeffs(2) == [0, -1, 1]
    assert falling_factorial_coeffs(3) == [0, 2, -3, 1]


@given(st.integers(0, 9), st.integers(-15, 15))
def test_falling_and_stirling_are_inverse(l, d):
    value = 1
    for j in range(l):
        value *= d - j
    assert sum(c * d**j for j, c in enumerate(falling_factorial_coeffs(l))) == value
    # D^l = sum_j S(l, j) D(D-1)...(D-j+1)
    total = 0
    for j, s in enumerate(stirling2_coeffs(l)):
        total += s * sum(c * d**i for i, c in enumerate(falling_factorial_coeffs(j)))
    assert total == d**l


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_parsing_and_formatting():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(Fraction(-4, 6)) == Rational(-2, 3)
    assert format_rational(Rational(-2, 3)) == "-2/3"
    assert format_rational(Rational(4)) == "4"
