import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from winfinity.lattice import DimensionError, Lattice, add, neg


def vectors(N, bound=3):
    return st.tuples(*[st.integers(-bound, bound)] * (2 * N))


def test_pairing_examples():
    L = Lattice(2)
    assert L.pairing(L.alpha(1), L.alpha(1)) == 1
    assert L.pairing(L.gamma(1), L.gamma(1)) == 0
    assert L.pairing(L.alpha(1), L.beta(2)) == 0
    assert L.pairing(L.beta(2), L.beta(2)) == -1


def test_signature():
    for N in (1, 2, 3):
        L = Lattice(N)
        gram = np.array([[L.pairing(L.basis(i), L.basis(j)) for j in range(L.rank)] for i in range(L.rank)])
        eig = np.linalg.eigvalsh(gram)
        assert (eig > 0).sum() == N and (eig < 0).sum() == N


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        Lattice(1).pairing((1, 0), (1, 0, 0, 0))
    with pytest.raises(DimensionError):
        Lattice(2).epsilon((1, 0), (0, 1))
    with pytest.raises(ValueError):
        Lattice(0)


def test_epsilon_examples():
    for N in (1, 2, 3):
        L = Lattice(N)
        for y in itertools.product(range(-1, 2), repeat=L.rank):
            assert L.epsilon(L.zero(), y) == 1
        for i, j in itertools.product(range(1, N + 1), repeat=2):
            assert L.epsilon(L.gamma(i), neg(L.gamma(j))) == 1


def test_epsilon_trivial_on_gamma_sublattice():
    for N in (1, 2, 3):
        L = Lattice(N)
        gens = [L.gamma(i) for i in range(1, N + 1)] + [neg(L.gamma(i)) for i in range(1, N + 1)]
        for x, y in itertools.product(gens, repeat=2):
            assert L.epsilon(x, y) == 1


def test_epsilon_on_a_pair():
    L = Lattice(1)
    a, b = L.alpha(1), L.beta(1)
    assert L.epsilon(a, b) == 1
    # alpha_1 and beta_1 are orthogonal and both odd, so they must anticommute
    assert L.epsilon(a, b) * L.epsilon(b, a) == -1


@pytest.mark.parametrize("N", [1, 2, 3])
def test_commutator_sign_on_basis(N):
    L = Lattice(N)
    for x, y in itertools.product([L.basis(k) for k in range(L.rank)], repeat=2):
        want = (-1) ** ((L.pairing(x, y) + L.norm(x) * L.norm(y)) % 2)
        assert L.epsilon(x, y) * L.epsilon(y, x) == want


@given(st.data())
def test_cocycle_identity_and_bilinearity(data):
    N = data.draw(st.integers(1, 3))
    L = Lattice(N)
    x, y, z = (data.draw(vectors(N)) for _ in range(3))
    assert L.epsilon(x, y) * L.epsilon(add(x, y), z) == L.epsilon(y, z) * L.epsilon(x, add(y, z))
    assert L.epsilon(add(x, y), z) == L.epsilon(x, z) * L.epsilon(y, z)
    want = (-1) ** ((L.pairing(x, y) + L.norm(x) * L.norm(y)) % 2)
    assert L.epsilon(x, y) * L.epsilon(y, x) == want


@given(st.data())
def test_pairing_symmetric_integer(data):
    N = data.draw(st.integers(1, 3))
    L = Lattice(N)
    x, y = data.draw(vectors(N)), data.draw(vectors(N))
    assert L.pairing(x, y) == L.pairing(y, x)
    assert isinstance(L.pairing(x, y), int)
    assert L.parity(x) == L.norm(x) % 2
