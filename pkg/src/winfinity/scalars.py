"""Exact rational scalars and the combinatorial coefficients used everywhere."""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from gmpy2 import mpq

# gmpy2 rationals: exact, hash/compare equal to Fraction, roughly 10x faster
Rational = mpq


def as_rational(x) -> Rational:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact rational.

    Floats are rejected: every identity in this package is exact.
    """
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use a Fraction or 'p/q'")
    if isinstance(x, str):
        return Rational(Fraction(x.strip()))
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    return Rational(x)


def format_rational(x) -> str:
    """Serialize as ``"p/q"``, dropping ``/1``."""
    return str(Rational(x))


def gen_binomial(x, r: int) -> Rational:
    """Generalized binomial coefficient x(x-1)...(x-r+1)/r! for rational x."""
    if r < 0:
        raise ValueError("r must be non-negative")
    x = as_rational(x)
    num = Rational(1)
    for j in range(r):
        num *= x - j
    return num / factorial(r)


def int_binomial(x: int, r: int) -> int:
    """Binomial C(x, r) for any integer x (negative allowed) and r >= 0."""
    if r < 0:
        return 0
    num = 1
    for j in range(r):
        num *= x - j
    return num // factorial(r)


@lru_cache(maxsize=None)
def _falling(l: int) -> tuple:
    coeffs = [1]
    for j in range(l):
        # multiply by (D - j)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return tuple(coeffs)


def falling_factorial_coeffs(l: int) -> list:
    """Coefficients c_0..c_l with D(D-1)...(D-l+1) = sum_j c_j D^j."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return [Rational(c) for c in _falling(l)]


@lru_cache(maxsize=None)
def _stirling2(l: int) -> tuple:
    row = [1]
    for n in range(l):
        nxt = [0] * (len(row) + 1)
        for k, c in enumerate(row):
            nxt[k] += k * c
            nxt[k + 1] += c
        row = nxt
    return tuple(row)


def stirling2_coeffs(l: int) -> list:
    """S(l, 0..l): D^l = sum_j S(l, j) D(D-1)...(D-j+1)."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return [Rational(c) for c in _stirling2(l)]
