"""Fock states for V_L, M(1) and M(1, lambda), and the raw Heisenberg action.

A monomial is ``iota(label) (x) b_{k1}(-n1) ... b_{kr}(-nr)`` where ``b_k`` runs
over the lattice basis (0-based index ``k``) and every mode ``n`` is positive.
Creations are stored as a sorted tuple of ``(k, n)`` pairs, repeats allowed.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, NamedTuple, Optional, Sequence, Tuple

from .lattice import Lattice, LatticeVector, add, is_zero
from .scalars import Rational, as_rational, format_rational


class Monomial(NamedTuple):
    label: LatticeVector
    modes: Tuple[Tuple[int, int], ...] = ()

    @property
    def mode_sum(self) -> int:
        return sum(n for _, n in self.modes)

    def with_creation(self, k: int, n: int) -> "Monomial":
        return Monomial(self.label, _insert(self.modes, (k, n)))


def _insert(modes, item):
    lst = list(modes)
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] < item:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, item)
    return tuple(lst)


def merge_modes(a, b):
    """Canonical product of two creation tuples."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


@dataclass(frozen=True)
class Weight:
    """lambda, given by its pairings with alpha_1..alpha_N and beta_1..beta_N."""

    alpha: Tuple[Rational, ...]
    beta: Tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(as_rational(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(as_rational(b) for b in self.beta))
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta pairings must have equal length")

    @property
    def N(self) -> int:
        return len(self.alpha)

    @property
    def pairings(self) -> tuple:
        """<lambda, b_k> for every basis vector b_k."""
        return self.alpha + self.beta

    def pair(self, h: Sequence) -> Rational:
        """<lambda, h> for h given in basis coordinates."""
        return sum((Rational(c) * p for c, p in zip(h, self.pairings)), Rational(0))

    def is_zero(self) -> bool:
        return not any(self.alpha) and not any(self.beta)

    @property
    def s(self) -> tuple:
        """s_i = -<lambda, alpha_i + beta_i>."""
        return tuple(-(a + b) for a, b in zip(self.alpha, self.beta))

    @property
    def t(self) -> tuple:
        """t_i = <lambda, alpha_i>."""
        return self.alpha

    @classmethod
    def zero(cls, N: int) -> "Weight":
        return cls((0,) * N, (0,) * N)


Terms = Dict[Monomial, Rational]


def add_term(acc: Terms, mono: Monomial, c) -> None:
    if not c:
        return
    new = acc.get(mono, 0) + c
    if new:
        acc[mono] = new
    else:
        acc.pop(mono, None)


def l0_degree(mono: Monomial, lattice: Lattice, weighted: bool = False) -> Rational:
    """L_0 eigenvalue of a monomial.

    In M(1, lambda) (``weighted=True``) the degree is measured from v_lambda, so the
    <lambda, lambda>/2 shift is dropped.
    """
    if weighted:
        return Rational(mono.mode_sum)
    return Rational(lattice.norm(mono.label), 2) + mono.mode_sum


class State:
    """Finite rational combination of Fock monomials.

    ``weight`` is set when the state lives in M(1, lambda) with lambda != 0; in that
    case every label is the zero vector.
    """

    __slots__ = ("lattice", "terms", "weight")

    def __init__(self, lattice: Lattice, terms: Optional[Dict] = None, weight: Optional[Weight] = None):
        if weight is not None:
            if weight.N != lattice.N:
                raise ValueError("weight does not match the lattice rank")
            if weight.is_zero():
                weight = None
        clean = {}
        for mono, c in (terms or {}).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(tuple(mono[0]), tuple(sorted(tuple(p) for p in mono[1])))
            lattice.check(mono.label)
            if weight is not None and not is_zero(mono.label):
                raise ValueError("states of M(1, lambda) carry no lattice label")
            if c:
                clean[mono] = Rational(c)
        self.lattice = lattice
        self.terms = clean
        self.weight = weight

    # constructors
    @classmethod
    def vacuum(cls, lattice: Lattice) -> "State":
        return cls(lattice, {Monomial(lattice.zero()): 1})

    @classmethod
    def highest_weight(cls, lattice: Lattice, weight: Weight) -> "State":
        """v_lambda in M(1, lambda)."""
        return cls(lattice, {Monomial(lattice.zero()): 1}, weight)

    @classmethod
    def iota(cls, lattice: Lattice, label: Sequence[int], coeff=1) -> "State":
        return cls(lattice, {Monomial(lattice.vector(label)): coeff})

    @classmethod
    def monomial(cls, lattice: Lattice, label=None, creations: Iterable = (), coeff=1, weight=None) -> "State":
        label = lattice.zero() if label is None else lattice.vector(label)
        modes = tuple(sorted((int(k), int(n)) for k, n in creations))
        if any(n <= 0 for _, n in modes):
            raise ValueError("creation modes must be positive")
        return cls(lattice, {Monomial(label, modes): coeff}, weight)

    def _like(self, terms: Terms) -> "State":
        out = State.__new__(State)
        out.lattice = self.lattice
        out.terms = terms
        out.weight = self.weight
        return out

    # vector space structure
    def _compatible(self, other: "State"):
        if self.lattice != other.lattice:
            raise ValueError("states live on different lattices")
        if self.weight != other.weight:
            raise ValueError("states live in different modules")

    def __add__(self, other: "State") -> "State":
        if isinstance(other, int) and other == 0:
            return self
        self._compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            add_term(acc, m, c)
        return self._like(acc)

    __radd__ = __add__

    def __neg__(self) -> "State":
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "State") -> "State":
        return self + (-other)

    def __mul__(self, c) -> "State":
        c = as_rational(c)
        if not c:
            return self._like({})
        return self._like({m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, State):
            return NotImplemented
        return self.lattice == other.lattice and self.weight == other.weight and self.terms == other.terms

    def __hash__(self):
        return hash((self.lattice, self.weight, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def is_zero(self) -> bool:
        return not self.terms

    # grading
    def degrees(self) -> set:
        weighted = self.weight is not None
        return {l0_degree(m, self.lattice, weighted) for m in self.terms}

    def max_degree(self):
        return max(self.degrees(), default=None)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def labels(self) -> set:
        return {m.label for m in self.terms}

    def parity_parts(self) -> dict:
        """Split into Z/2-homogeneous pieces keyed by parity."""
        parts = {}
        for m, c in self.terms.items():
            parts.setdefault(self.lattice.parity(m.label), {})[m] = c
        return {p: self._like(t) for p, t in parts.items()}

    def coefficient(self, mono: Monomial) -> Rational:
        return self.terms.get(mono, Rational(0))

    # serialization
    def to_json(self) -> dict:
        out = {
            "terms": [
                {
                    "label": list(m.label),
                    "creations": [[k + 1, n] for k, n in m.modes],
                    "coeff": format_rational(c),
                }
                for m, c in sorted(self.terms.items())
            ]
        }
        if self.weight is not None:
            out["weight"] = {
                "alpha": [format_rational(a) for a in self.weight.alpha],
                "beta": [format_rational(b) for b in self.weight.beta],
            }
        return out

    @classmethod
    def from_json(cls, lattice: Lattice, data: dict) -> "State":
        weight = None
        if "weight" in data:
            weight = Weight(tuple(data["weight"]["alpha"]), tuple(data["weight"]["beta"]))
        terms = {}
        for t in data["terms"]:
            mono = Monomial(tuple(t["label"]), tuple(sorted((k - 1, n) for k, n in t["creations"])))
            terms[mono] = as_rational(t["coeff"])
        return cls(lattice, terms, weight)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({format_rational(c)})*{_mono_str(self.lattice, m)}" for m, c in sorted(self.terms.items()))


def _basis_name(lattice: Lattice, k: int) -> str:
    return f"a{k + 1}" if k < lattice.N else f"b{k - lattice.N + 1}"


def _mono_str(lattice: Lattice, m: Monomial) -> str:
    parts = [f"{_basis_name(lattice, k)}(-{n})" for k, n in m.modes]
    if not is_zero(m.label):
        parts.insert(0, f"e{list(m.label)}")
    return "".join(parts) + "|0>" if parts else "|0>"


# raw Heisenberg action on term dictionaries


def create_basis(terms: Terms, k: int, n: int, scale=1) -> Terms:
    """b_k(-n) for n >= 1."""
    out = {}
    for m, c in terms.items():
        add_term(out, m.with_creation(k, n), scale * c)
    return out


def annihilate_basis_mono(mono: Monomial, k: int, n: int, sign: int):
    """b_k(n), n >= 1, on a monomial; returns (coefficient, monomial) or None."""
    key = (k, n)
    modes = mono.modes
    mult = modes.count(key)
    if not mult:
        return None
    i = modes.index(key)
    return mult * n * sign, Monomial(mono.label, modes[:i] + modes[i + 1:])


def zero_mode_value(lattice: Lattice, weight: Optional[Weight], k: int, label) -> Rational:
    """Eigenvalue of b_k(0) on a monomial with the given label."""
    v = Rational(lattice.sign(k) * label[k])
    if weight is not None:
        v += weight.pairings[k]
    return v


def basis_mode(lattice: Lattice, weight: Optional[Weight], k: int, n: int, terms: Terms, scale=1) -> Terms:
    """Apply scale * b_k(n) to a term dictionary."""
    if n < 0:
        return create_basis(terms, k, -n, scale)
    out = {}
    if n == 0:
        for m, c in terms.items():
            add_term(out, m, scale * c * zero_mode_value(lattice, weight, k, m.label))
        return out
    sign = lattice.sign(k)
    for m, c in terms.items():
        r = annihilate_basis_mono(m, k, n, sign)
        if r is not None:
            add_term(out, r[1], scale * c * r[0])
    return out


def apply_mode(h: Sequence, n: int, w: State) -> State:
    """Heisenberg mode h(n) on a state, with the central element acting as 1."""
    lattice = w.lattice
    lattice.check(h)
    acc: Terms = {}
    for k, hk in enumerate(h):
        if hk:
            for m, c in basis_mode(lattice, w.weight, k, n, w.terms, Rational(hk)).items():
                add_term(acc, m, c)
    return w._like(acc)


def lattice_multiply(a: Sequence[int], w: State) -> State:
    """Left multiplication by e_a: iota(b) -> epsilon(a, b) iota(a + b)."""
    if w.weight is not None:
        raise ValueError("lattice shifts are not defined on M(1, lambda)")
    lattice = w.lattice
    a = lattice.vector(a)
    acc: Terms = {}
    for m, c in w.terms.items():
        add_term(acc, Monomial(add(a, m.label), m.modes), lattice.epsilon(a, m.label) * c)
    return w._like(acc)
