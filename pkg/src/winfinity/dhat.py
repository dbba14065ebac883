"""The central extension D-hat of the differential operators on C^*.

Bases: J^l(k) = -t^{l+k} d_t^l and L^l(k) = -t^k D^l with D = t d_t.  The
central cocycle is

    Psi(f d^m, g d^n) = m! n! / (m+n+1)! Res_{t=0} f^{(n+1)} g^{(m)} dt.

This module also produces the generating series Delta_lambda(x) of the
highest weights of V(lambda, -N) by two routes (J^k(0) eigenvalues resummed,
and the closed exponential form) together with its exponent/multiplicity data.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Tuple

from .fock import Monomial, State, Weight
from .lattice import Lattice
from .scalars import Rational, as_rational, falling_factorial_coeffs, int_binomial, stirling2_coeffs
from .series import PowerSeries, e_x_minus_one, exp_quotient
from .weylw import check_rank, hw_eigenvalue, j_mode

Key = Tuple[str, int, int]


def _falling(x: int, j: int) -> int:
    out = 1
    for i in range(j):
        out *= x - i
    return out


class InconsistentDecomposition(ArithmeticError):
    pass


@dataclass
class DiffOpElement:
    """Finite combination of J^l(k) / L^l(k) plus a central coefficient."""

    terms: Dict[Key, Rational] = field(default_factory=dict)
    central: Rational = Rational(0)

    def __post_init__(self):
        clean = {}
        for (kind, l, k), c in self.terms.items():
            if kind not in ("J", "L"):
                raise ValueError(f"unknown basis kind {kind!r}")
            if l < 0:
                raise ValueError("derivative order must be non-negative")
            c = as_rational(c)
            if c:
                clean[(kind, l, k)] = clean.get((kind, l, k), 0) + c
        self.terms = {key: c for key, c in clean.items() if c}
        self.central = as_rational(self.central)

    @classmethod
    def J(cls, l: int, k: int, coeff=1) -> "DiffOpElement":
        return cls({("J", l, k): coeff})

    @classmethod
    def L(cls, l: int, k: int, coeff=1) -> "DiffOpElement":
        return cls({("L", l, k): coeff})

    def __add__(self, other: "DiffOpElement") -> "DiffOpElement":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return DiffOpElement(terms, self.central + other.central)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = as_rational(c)
        return DiffOpElement({key: c * v for key, v in self.terms.items()}, c * self.central)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffOpElement):
            return NotImplemented
        a, b = self.to_j(), other.to_j()
        return a.terms == b.terms and a.central == b.central

    def is_zero(self) -> bool:
        return self == DiffOpElement()

    def operator_form(self) -> Dict[Tuple[int, int], Rational]:
        """Coefficients of t^a d^m."""
        ops: Dict[Tuple[int, int], Rational] = {}
        for (kind, l, k), c in self.terms.items():
            if kind == "J":
                _acc(ops, (l + k, l), -c)
            else:
                for j, s in enumerate(stirling2_coeffs(l)):
                    if s:
                        _acc(ops, (k + j, j), -c * s)
        return ops

    @classmethod
    def from_operator(cls, ops: Dict[Tuple[int, int], Rational], central=0) -> "DiffOpElement":
        """t^a d^m = -J^m(a - m)."""
        return cls({("J", m, a - m): -c for (a, m), c in ops.items()}, central)

    def to_j(self) -> "DiffOpElement":
        return DiffOpElement.from_operator(self.operator_form(), self.central)

    def __repr__(self):
        parts = [f"({c})*{kind}^{l}({k})" for (kind, l, k), c in sorted(self.terms.items())]
        if self.central:
            parts.append(f"({self.central})*C")
        return " + ".join(parts) or "0"


def _acc(d, key, c):
    new = d.get(key, 0) + c
    if new:
        d[key] = new
    else:
        d.pop(key, None)


def j_to_l(elem: DiffOpElement) -> DiffOpElement:
    """Rewrite every J^l(k) as sum_j c_j L^j(k) with D(D-1)...(D-l+1) = sum_j c_j D^j."""
    terms: Dict[Key, Rational] = {}
    for (kind, l, k), c in elem.terms.items():
        if kind == "L":
            _acc(terms, ("L", l, k), c)
            continue
        for j, cj in enumerate(falling_factorial_coeffs(l)):
            if cj:
                _acc(terms, ("L", j, k), c * cj)
    return DiffOpElement(terms, elem.central)


def psi_monomial(a: int, m: int, b: int, n: int) -> Rational:
    """Psi(t^a d^m, t^b d^n)."""
    if a + b != m + n:
        return Rational(0)
    res = _falling(a, n + 1) * _falling(b, m)
    return Rational(factorial(m) * factorial(n) * res, factorial(m + n + 1))


def psi(x: DiffOpElement, y: DiffOpElement) -> Rational:
    total = Rational(0)
    for (a, m), c in x.operator_form().items():
        for (b, n), d in y.operator_form().items():
            total += c * d * psi_monomial(a, m, b, n)
    return total


def compose_monomials(a: int, m: int, b: int, n: int) -> Dict[Tuple[int, int], int]:
    """t^a d^m t^b d^n = sum_j C(m, j) b(b-1)...(b-j+1) t^{a+b-j} d^{m+n-j}."""
    out: Dict[Tuple[int, int], int] = {}
    for j in range(m + 1):
        c = int_binomial(m, j) * _falling(b, j)
        if c:
            _acc(out, (a + b - j, m + n - j), c)
    return out


def operator_commutator(x: DiffOpElement, y: DiffOpElement) -> Dict[Tuple[int, int], Rational]:
    ops: Dict[Tuple[int, int], Rational] = {}
    xo, yo = x.operator_form(), y.operator_form()
    for (a, m), c in xo.items():
        for (b, n), d in yo.items():
            for key, v in compose_monomials(a, m, b, n).items():
                _acc(ops, key, c * d * v)
            for key, v in compose_monomials(b, n, a, m).items():
                _acc(ops, key, -c * d * v)
    return ops


def dhat_bracket(x: DiffOpElement, y: DiffOpElement, c=1) -> DiffOpElement:
    """[x, y] in D-hat with the central element C acting as the scalar c."""
    return DiffOpElement.from_operator(operator_commutator(x, y), as_rational(c) * psi(x, y))


# highest weights and generating series


def delta_series(weight: Weight, order: int, N: Optional[int] = None) -> PowerSeries:
    """sum_k J^k(0)-eigenvalue (e^x - 1)^k / k!, truncated at x^order."""
    check_rank(weight, N)
    y = e_x_minus_one(order)
    total = PowerSeries.zero(order)
    power = PowerSeries.constant(1, order)
    for k in range(order + 1):
        total = total + power * (hw_eigenvalue(k, weight) / factorial(k))
        power = power * y
    return total


def delta_closed_form(weight: Weight, order: int, N: Optional[int] = None) -> PowerSeries:
    """-sum_i ((e^{s_i x} - 1)/(e^x - 1) + t_i e^{s_i x})."""
    check_rank(weight, N)
    total = PowerSeries.zero(order)
    for s, t in zip(weight.s, weight.t):
        total = total - exp_quotient(s, order) - PowerSeries.exp_linear(s, order) * t
    return total


@dataclass
class QuasifiniteDecomposition:
    """phi(x) + c = sum_i p_i(x) e^{r_i x} with Delta = phi / (e^x - 1)."""

    central_charge: Rational
    terms: List[Tuple[Rational, List[Rational]]]

    def multiplicity_sum_at_zero(self) -> Rational:
        return sum((p[0] if p else Rational(0) for _, p in self.terms), Rational(0))

    def exponents(self) -> List[Rational]:
        return [r for r, _ in self.terms]

    def phi_plus_c(self, order: int) -> PowerSeries:
        total = PowerSeries.zero(order)
        x = PowerSeries([0, 1], order)
        for r, poly in self.terms:
            p = PowerSeries.zero(order)
            xp = PowerSeries.constant(1, order)
            for c in poly:
                p = p + xp * c
                xp = xp * x
            total = total + p * PowerSeries.exp_linear(r, order)
        return total

    def delta(self, order: int) -> PowerSeries:
        """Rebuild Delta(x) = (phi + c - c) / (e^x - 1)."""
        num = (self.phi_plus_c(order + 1) - self.central_charge).shift_down()
        den = e_x_minus_one(order + 1).shift_down()
        return num / den


def quasifinite_decompose(weight: Weight, check_order: int = 10, N: Optional[int] = None) -> QuasifiniteDecomposition:
    """Exponents s_i (multiplicity t_i - 1) and s_i + 1 (multiplicity -t_i), merged.

    Exponents whose merged multiplicity vanishes are dropped.  The result is
    checked against Delta's closed form and against sum_i p_i(0) = -N.
    """
    check_rank(weight, N)
    N = weight.N
    merged: Dict[Rational, Rational] = {}
    order: List[Rational] = []
    for s, t in zip(weight.s, weight.t):
        for r, c in ((s, t - 1), (s + 1, -t)):
            if r not in merged:
                merged[r] = Rational(0)
                order.append(r)
            merged[r] += c
    terms = [(r, [merged[r]]) for r in sorted(order) if merged[r]]
    dec = QuasifiniteDecomposition(Rational(-N), terms)
    if dec.multiplicity_sum_at_zero() != dec.central_charge:
        raise InconsistentDecomposition(f"sum p_i(0) = {dec.multiplicity_sum_at_zero()} != {-N}")
    if dec.delta(check_order) != delta_closed_form(weight, check_order):
        raise InconsistentDecomposition("decomposition does not reproduce Delta_lambda")
    return dec


@dataclass
class WeightSeries:
    """lambda_n = n! [x^n] Delta_lambda(x): the L^n(0) eigenvalues on v_lambda."""

    components: List[Rational]


def weight_components(weight: Weight, order: int, N: Optional[int] = None) -> WeightSeries:
    check_rank(weight, N)
    delta = delta_closed_form(weight, order)
    return WeightSeries([delta[n] * factorial(n) for n in range(order + 1)])


def l_weights_from_j(j_values: List[Rational]) -> List[Rational]:
    """Solve J^l(0) = sum_j c^{(l)}_j L^j(0) for the L^j(0) eigenvalues."""
    out: List[Rational] = []
    for l, jl in enumerate(j_values):
        cs = falling_factorial_coeffs(l)
        acc = as_rational(jl) - sum((cs[j] * out[j] for j in range(l)), Rational(0))
        out.append(acc / cs[l])
    return out


def measured_j_eigenvalues(weight: Weight, kmax: int) -> List[Rational]:
    """J^k(0) on v_lambda read off from the free-field action, k = 0..kmax."""
    lattice = Lattice(weight.N)
    v = State.highest_weight(lattice, weight)
    vac = Monomial(lattice.zero())
    out = []
    for k in range(kmax + 1):
        res = j_mode(k, 0, v)
        if set(res.terms) - {vac}:
            raise InconsistentDecomposition(f"J^{k}(0) v_lambda is not proportional to v_lambda")
        out.append(res.coefficient(vac))
    return out


# realization of the bracket on M(1)


def m1_basis(lattice: Lattice, max_degree: int, weight: Optional[Weight] = None) -> List[State]:
    """All monomials of M(1) (or M(1, lambda)) of degree <= max_degree."""
    out = []
    for d in range(max_degree + 1):
        for modes in _colored_partitions(d, lattice.rank):
            out.append(State(lattice, {Monomial(lattice.zero(), modes): 1}, weight))
    return out


def _colored_partitions(d: int, colors: int, max_part=None):
    """Sorted tuples of (color, part) with parts summing to d."""
    if d == 0:
        yield ()
        return
    if max_part is None:
        max_part = (colors - 1, d)
    # enumerate in descending (color, part) order then sort for canonical form
    for c in range(colors):
        for n in range(1, d + 1):
            if (c, n) > max_part:
                continue
            for rest in _colored_partitions(d - n, colors, (c, n)):
                yield tuple(sorted(rest + ((c, n),)))


def j_operator(elem: DiffOpElement, w: State) -> State:
    """Act with an element of D-hat (with central value already in ``elem.central``)."""
    total = w * elem.central
    for (kind, l, k), c in elem.to_j().terms.items():
        total = total + j_mode(l, k, w) * c
    return total


def realization_bracket_check(a: int, m: int, b: int, n: int, N: int, deg: int, weight: Optional[Weight] = None) -> bool:
    """Compare [J^a(m), J^b(n)] on the free-field side against the D-hat bracket at c = -N."""
    lattice = Lattice(N)
    expected = dhat_bracket(DiffOpElement.J(a, m), DiffOpElement.J(b, n), -N)
    for w in m1_basis(lattice, deg, weight):
        lhs = j_mode(a, m, j_mode(b, n, w)) - j_mode(b, n, j_mode(a, m, w))
        if lhs != j_operator(expected, w):
            return False
    return True
