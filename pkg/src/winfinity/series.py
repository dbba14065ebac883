"""Truncated formal power series in one variable x with exact coefficients.

Coefficients default to exact rationals but any commutative ring element that
supports +, -, * and division by an integer works (the tests use sympy
expressions to expand exp with formal variables).
"""

from math import factorial
from typing import List, Sequence

from .scalars import Rational, as_rational


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int = None):
        coeffs = list(coeffs)
        if order is not None:
            coeffs = (coeffs + [0] * (order + 1))[: order + 1]
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = [_coerce(c) for c in coeffs]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        return cls([c] + [0] * order)

    @classmethod
    def exp_linear(cls, s, order: int) -> "PowerSeries":
        """e^{s x}."""
        s = _coerce(s)
        return cls([s**n / factorial(n) for n in range(order + 1)])

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} up to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def _align(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        a, b = self._align(other)
        return PowerSeries([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -_coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = _coerce(other)
            return PowerSeries([c * x for x in self.coeffs])
        a, b = self._align(other)
        n = len(a)
        out = [0] * n
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(n - i):
                out[i + j] = out[i + j] + x * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            c = _coerce(other)
            return PowerSeries([x / c for x in self.coeffs])
        a, b = self._align(other)
        if b[0] == 0:
            raise ZeroDivisionError("divisor has zero constant term; factor out x first")
        out: List = []
        for n in range(len(a)):
            acc = a[n]
            for j in range(1, n + 1):
                acc = acc - b[j] * out[n - j]
            out.append(acc / b[0])
        return PowerSeries(out)

    def __pow__(self, k: int):
        result = PowerSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift_down(self, k: int = 1) -> "PowerSeries":
        """Divide by x^k; the first k coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("series is not divisible by x^%d" % k)
        return PowerSeries(self.coeffs[k:])

    def exp(self) -> "PowerSeries":
        """exp of a series with zero constant term, truncated at the same order."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a series without constant term")
        result = PowerSeries.constant(1, self.order)
        power = PowerSeries.constant(1, self.order)
        for k in range(1, self.order + 1):
            power = power * self
            result = result + power / factorial(k)
        return result

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return "PowerSeries(%s)" % ", ".join(str(c) for c in self.coeffs)


def _coerce(c):
    if isinstance(c, (int, Rational)) or type(c).__name__ == "Fraction" or isinstance(c, str):
        return as_rational(c)
    return c


def e_x_minus_one(order: int) -> PowerSeries:
    """e^x - 1."""
    return PowerSeries.exp_linear(1, order) - 1


def exp_quotient(s, order: int) -> PowerSeries:
    """(e^{s x} - 1) / (e^x - 1) as an exact series, after cancelling the common x."""
    num = (PowerSeries.exp_linear(s, order + 1) - 1).shift_down()
    den = e_x_minus_one(order + 1).shift_down()
    return num / den
