import random
from fractions import Fraction

import pytest

from winfinity.checks import random_state, random_weight
from winfinity.fock import Monomial, State, Weight, apply_mode, l0_degree, lattice_multiply
from winfinity.lattice import Lattice, neg


def test_apply_mode_examples():
    L = Lattice(1)
    a1 = L.alpha(1)
    w = State.monomial(L, creations=[(0, 1)])
    assert apply_mode(a1, 1, w) == State.vacuum(L)
    weight = Weight((Fraction(1, 3),), (Fraction(-5, 2),))
    v = State.highest_weight(L, weight)
    h = (2, 1)
    assert apply_mode(h, 0, v) == v * weight.pair(h)
    assert apply_mode(L.beta(1), 2, v).is_zero()


def test_l0_degree_examples():
    L = Lattice(1)
    assert l0_degree(Monomial(L.zero()), L) == 0
    assert l0_degree(Monomial(L.gamma(1)), L) == 0
    assert l0_degree(Monomial(L.zero(), ((0, 2), (1, 3))), L) == 5
    assert l0_degree(Monomial(L.alpha(1)), L) == Fraction(1, 2)
    assert l0_degree(Monomial(L.beta(1)), L) == Fraction(-1, 2)


def test_lattice_multiply_examples():
    L = Lattice(1)
    g = L.gamma(1)
    assert lattice_multiply(g, State.vacuum(L)) == State.iota(L, g)
    assert lattice_multiply(g, State.iota(L, neg(g))) == State.vacuum(L)
    assert lattice_multiply(L.alpha(1), State.iota(L, L.beta(1))) == State.iota(L, g)
    with pytest.raises(ValueError):
        lattice_multiply(g, State.highest_weight(L, Weight((1,), (0,))))


@pytest.mark.parametrize("N", [1, 2])
def test_heisenberg_relations(N):
    rng = random.Random(N)
    L = Lattice(N)
    basis = [L.basis(k) for k in range(L.rank)]
    for _ in range(50):
        w = random_state(rng, L, 6)
        h, g = rng.choice(basis), rng.choice(basis)
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        lhs = apply_mode(h, m, apply_mode(g, -n, w)) - apply_mode(g, -n, apply_mode(h, m, w))
        assert lhs == w * (m * L.pairing(h, g) if m == n else 0)


def test_annihilation_beyond_degree():
    rng = random.Random(1)
    L = Lattice(2)
    for _ in range(40):
        w = random_state(rng, L, 5, terms=1)
        (mono,) = w.terms
        k = rng.randrange(L.rank)
        h = L.basis(k)
        assert apply_mode(h, mono.mode_sum + rng.randint(1, 3), w).is_zero()


def test_linearity():
    rng = random.Random(2)
    L = Lattice(2)
    for _ in range(30):
        w1, w2 = random_state(rng, L, 4), random_state(rng, L, 4)
        h = tuple(rng.randint(-2, 2) for _ in range(L.rank))
        g = tuple(rng.randint(-2, 2) for _ in range(L.rank))
        n = rng.randint(-3, 3)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert apply_mode(h, n, w1 * c + w2) == apply_mode(h, n, w1) * c + apply_mode(h, n, w2)
        hg = tuple(x + y for x, y in zip(h, g))
        assert apply_mode(hg, n, w1) == apply_mode(h, n, w1) + apply_mode(g, n, w1)


def test_creation_raises_degree():
    L = Lattice(2)
    w = State.monomial(L, label=L.alpha(2), creations=[(1, 2)])
    (mono,) = w.terms
    raised = apply_mode(L.beta(1), -3, w)
    assert raised.degrees() == {l0_degree(mono, L) + 3}


def test_json_roundtrip():
    rng = random.Random(4)
    L = Lattice(2)
    for _ in range(20):
        w = random_state(rng, L, 4)
        assert State.from_json(L, w.to_json()) == w
    weight = random_weight(rng, 2)
    v = State.highest_weight(L, weight)
    assert State.from_json(L, v.to_json()) == v


def test_mixing_modules_is_rejected():
    L = Lattice(1)
    v = State.highest_weight(L, Weight((1,), (2,)))
    with pytest.raises(ValueError):
        v + State.vacuum(L)
