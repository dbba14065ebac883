"""Weyl fields A^i, Abar^i inside V_L and the W_{1+inf,-N} generators U_k, J^k.

    A^i(z) = Y(e^i (x) alpha_i(-1), z) = sum_n A^i(n) z^{-n-1},   e^i = iota(gamma_i)
    Abar^i(z) = Y(f^i, z) = sum_n Abar^i(n) z^{-n},               f^i = iota(-gamma_i)

so Abar^i(n) = f^i_{n-1}.  U^i_k = A^i(-1) Abar^i(-k) 1 and J^k(m) = -k! (U_k)_{m+k}.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Optional, Tuple

from .fock import State, Weight
from .lattice import Lattice, neg
from .scalars import Rational, gen_binomial
from .schur import schur_state
from .vertexop import ModuleMismatch, mode


class InternalInconsistency(AssertionError):
    """Two independent computations of the same object disagree."""


@dataclass(frozen=True)
class WeylIndex:
    i: int
    starred: bool
    n: int


def e_state(lattice: Lattice, i: int) -> State:
    return State.iota(lattice, lattice.gamma(i))


def f_state(lattice: Lattice, i: int) -> State:
    return State.iota(lattice, neg(lattice.gamma(i)))


def a_field_state(lattice: Lattice, i: int) -> State:
    """e^i (x) alpha_i(-1), the state of the field A^i(z)."""
    return State.monomial(lattice, label=lattice.gamma(i), creations=[(i - 1, 1)])


def weyl_mode(idx: WeylIndex, w: State) -> State:
    """A^i(n) w, or Abar^i(n) w when ``idx.starred``."""
    if w.weight is not None:
        raise ModuleMismatch("Weyl fields act on V_L only")
    L = w.lattice
    if idx.starred:
        return mode(f_state(L, idx.i), idx.n - 1, w)
    return mode(a_field_state(L, idx.i), idx.n, w)


def A(i: int, n: int, w: State) -> State:
    return weyl_mode(WeylIndex(i, False, n), w)


def Abar(i: int, n: int, w: State) -> State:
    return weyl_mode(WeylIndex(i, True, n), w)


def u_schur_form(lattice: Lattice, i: int, k: int) -> State:
    """alpha_i(-1) p_k(-gamma_i) 1 + p_{k+1}(-gamma_i) 1."""
    mg = neg(lattice.gamma(i))
    pk = schur_state(mg, k, lattice)
    head = State(lattice, {m.with_creation(i - 1, 1): c for m, c in pk.items()})
    return head + schur_state(mg, k + 1, lattice)


@lru_cache(maxsize=256)
def build_U(lattice: Lattice, i: int, k: int) -> State:
    """U^i_k, computed through the Weyl fields and through Schur polynomials.

    Raises InternalInconsistency if the two routes disagree.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    via_fields = A(i, -1, Abar(i, -k, State.vacuum(lattice)))
    closed = u_schur_form(lattice, i, k)
    if via_fields != closed:
        raise InternalInconsistency(f"U^{i}_{k}: field route {via_fields!r} != Schur route {closed!r}")
    return closed


@dataclass(frozen=True)
class WGenerator:
    k: int
    state: State
    per_pair: Tuple[State, ...]


@lru_cache(maxsize=64)
def w_generator(lattice: Lattice, k: int) -> WGenerator:
    per_pair = tuple(build_U(lattice, i, k) for i in range(1, lattice.N + 1))
    total = per_pair[0]
    for u in per_pair[1:]:
        total = total + u
    return WGenerator(k, total, per_pair)


def j_mode(k: int, m: int, w: State) -> State:
    """J^k(m) w = -k! (U_k)_{m+k} w."""
    u = w_generator(w.lattice, k).state
    return mode(u, m + k, w) * (-factorial(k))


def check_rank(weight: Weight, N: Optional[int]) -> None:
    """Reject an explicit N that disagrees with the number of pairings in ``weight``."""
    if N is not None and N != weight.N:
        raise ValueError(f"weight has {weight.N} pairs of pairings but N = {N}")


def hw_eigenvalue(k: int, weight: Weight, N: Optional[int] = None) -> Rational:
    """Closed-form J^k(0) eigenvalue on v_lambda."""
    check_rank(weight, N)
    if k < 0:
        raise ValueError("k must be non-negative")
    total = Rational(0)
    for a, b in zip(weight.alpha, weight.beta):
        x = -(a + b)
        total += gen_binomial(x, k + 1) + a * gen_binomial(x, k)
    return -factorial(k) * total
