import itertools
import random
from fractions import Fraction

import pytest

from winfinity.checks import heisenberg_word, random_m1_state, random_state, random_weight
from winfinity.fock import State, Weight, apply_mode
from winfinity.lattice import Lattice, add, neg
from winfinity.schur import schur_state
from winfinity.vertexop import (
    ModuleMismatch,
    commutator_residual,
    lattice_mode,
    mode,
    mode_bound,
    nop,
    virasoro_mode,
)
from winfinity.weylw import a_field_state, e_state, f_state


def test_vacuum_operator_is_identity():
    rng = random.Random(0)
    L = Lattice(2)
    vac = State.vacuum(L)
    for _ in range(10):
        w = random_state(rng, L, 4)
        assert mode(vac, -1, w) == w
        for m in (-3, -2, 0, 1, 2):
            assert mode(vac, m, w).is_zero()


def test_lattice_products_vanish_above_pairing():
    L = Lattice(2)
    vecs = list(itertools.product(range(-1, 2), repeat=L.rank))[::7]
    for a, b in itertools.product(vecs, repeat=2):
        top = -L.pairing(a, b)
        for i in range(top, top + 3):
            assert lattice_mode(a, i, State.iota(L, b)).is_zero()


def test_lattice_product_is_schur_polynomial():
    # <a, b> = -n < 0: iota(a)_{i-1} iota(b) = eps(a, b) p_{n-i}(a(-1), ...) iota(a + b)
    L = Lattice(2)
    for a, b in [((1, 0, 0, 0), (-1, 0, 0, 0)), ((1, 1, 0, 0), (-2, 0, 0, 0)), ((0, 0, 1, 0), (0, 0, 2, 1))]:
        n = -L.pairing(a, b)
        assert n > 0
        for i in range(0, n + 1):
            want = schur_state(a, n - i, L, label=add(a, b)) * L.epsilon(a, b)
            assert lattice_mode(a, i - 1, State.iota(L, b)) == want


def test_standard_example():
    L = Lattice(1)
    weight = Weight((Fraction(2, 3),), (Fraction(-1, 5),))
    v = State.highest_weight(L, weight)
    h = (3, -2)
    u = apply_mode(h, -2, State.vacuum(L))
    assert mode(u, 1, v) == v * -weight.pair(h)


def test_fms1_examples():
    L = Lattice(2)
    g = L.gamma(1)
    assert lattice_mode(g, -1, State.iota(L, neg(g))) == State.vacuum(L)
    for n in range(0, 5):
        assert lattice_mode(g, n, State.iota(L, g)).is_zero()


def test_lattice_mode_rejects_weighted_module():
    L = Lattice(1)
    with pytest.raises(ModuleMismatch):
        lattice_mode(L.gamma(1), 0, State.highest_weight(L, Weight((1,), (1,))))
    with pytest.raises(ModuleMismatch):
        mode(e_state(L, 1), 0, State.highest_weight(L, Weight((1,), (1,))))


def test_nop_examples():
    L = Lattice(1)
    vac = State.vacuum(L)
    b = State.monomial(L, label=L.alpha(1), creations=[(1, 2)])
    assert nop(vac, b) == b
    a1 = State.monomial(L, creations=[(0, 1)])
    assert nop(a1, a1) == State.monomial(L, creations=[(0, 1), (0, 1)])
    u0 = State.monomial(L, creations=[(0, 1)]) + schur_state(neg(L.gamma(1)), 1, L)
    assert nop(a_field_state(L, 1), f_state(L, 1)) == u0


def test_commutator_examples():
    L = Lattice(1)
    vac = State.vacuum(L)
    assert commutator_residual(vac, 0, vac, 2, vac).is_zero()
    assert commutator_residual(e_state(L, 1), 0, f_state(L, 1), -1, vac).is_zero()


@pytest.mark.parametrize("N", [1, 2])
def test_commutator_formula(N):
    rng = random.Random(10 + N)
    L = Lattice(N)
    for _ in range(12):
        a = random_state(rng, L, rng.randint(0, 3), terms=1)
        b = random_state(rng, L, rng.randint(0, 3), terms=1)
        w = random_state(rng, L, rng.randint(0, 3))
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        assert commutator_residual(a, m, b, n, w).is_zero()


def test_odd_states_anticommute():
    # alpha_1 and beta_1 are odd: their modes anticommute when the pairing vanishes
    L = Lattice(1)
    a, b = State.iota(L, L.alpha(1)), State.iota(L, L.beta(1))
    w = State.iota(L, L.gamma(1))
    for m, n in itertools.product(range(-2, 2), repeat=2):
        assert commutator_residual(a, m, b, n, w).is_zero()


def test_creation_axiom():
    rng = random.Random(5)
    vac = None
    for _ in range(100):
        L = Lattice(rng.randint(1, 2))
        vac = State.vacuum(L)
        v = random_state(rng, L, 5)
        assert mode(v, -1, vac) == v
        assert mode(v, rng.randint(0, 4), vac).is_zero()


def test_translation_axiom():
    rng = random.Random(6)
    L = Lattice(1)
    for _ in range(15):
        v = random_state(rng, L, 3, terms=1)
        w = random_state(rng, L, 3)
        m = rng.randint(-3, 3)
        assert mode(virasoro_mode(-1, v), m, w) == mode(v, m - 1, w) * -m


def test_modes_vanish_above_bound():
    rng = random.Random(7)
    L = Lattice(2)
    for _ in range(20):
        a, b = random_state(rng, L, 3, terms=1), random_state(rng, L, 3, terms=1)
        k = mode_bound(a, b)
        for n in range(k + 1, k + 4):
            assert mode(a, n, b).is_zero()


def test_virasoro_examples():
    L = Lattice(2)
    w = State.monomial(L, label=(1, 0, 1, 1), creations=[(0, 2), (3, 1)])
    assert virasoro_mode(0, w) == w * Fraction(1 - 2, 2) + w * 3
    assert virasoro_mode(1, State.vacuum(L)).is_zero()


@pytest.mark.parametrize("N", [1, 2])
def test_virasoro_algebra(N):
    rng = random.Random(N)
    L = Lattice(N)
    for _ in range(8):
        w = random_state(rng, L, 3)
        for m, n in itertools.product(range(-2, 3), repeat=2):
            lhs = virasoro_mode(m, virasoro_mode(n, w)) - virasoro_mode(n, virasoro_mode(m, w))
            rhs = virasoro_mode(m + n, w) * (m - n)
            if m + n == 0:
                rhs = rhs + w * Fraction(2 * N * (m**3 - m), 12)
            assert lhs == rhs


def test_standard_eigenvalue_small():
    rng = random.Random(8)
    for _ in range(30):
        L = Lattice(rng.randint(1, 2))
        weight = random_weight(rng, L.N)
        h = tuple(rng.randint(-2, 2) for _ in range(L.rank))
        ns = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
        u = heisenberg_word(L, h, ns)
        v = State.highest_weight(L, weight)
        k = sum(ns)
        x = weight.pair(h)
        assert mode(u, k - 1, v) == v * ((-1) ** (k + len(ns)) * x ** len(ns))
        assert mode(u, k, v).is_zero()


@pytest.mark.parametrize("N", [1, 2])
def test_split_and_peel_engines_agree(N):
    rng = random.Random(40 + N)
    L = Lattice(N)
    for _ in range(80):
        v = random_state(rng, L, 3)
        w = random_state(rng, L, 3)
        m = rng.randint(-4, 3)
        assert mode(v, m, w) == mode(v, m, w, engine="peel")


def test_split_and_peel_engines_agree_on_weighted_module():
    rng = random.Random(7)
    L = Lattice(2)
    for _ in range(40):
        weight = random_weight(rng, 2)
        v = random_m1_state(rng, L, 3)
        w = random_m1_state(rng, L, 3, weight)
        m = rng.randint(-3, 2)
        assert mode(v, m, w) == mode(v, m, w, engine="peel")


def test_unknown_engine():
    L = Lattice(1)
    with pytest.raises(ValueError):
        mode(State.vacuum(L), -1, State.vacuum(L), engine="other")
