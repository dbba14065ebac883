import random
from fractions import Fraction

import pytest

from winfinity import weylw
from winfinity.checks import random_weight
from winfinity.fock import State, Weight
from winfinity.lattice import Lattice, neg
from winfinity.vertexop import ModuleMismatch, mode
from winfinity.weylw import (
    A,
    Abar,
    InternalInconsistency,
    WeylIndex,
    build_U,
    e_state,
    f_state,
    hw_eigenvalue,
    j_mode,
    w_generator,
    weyl_mode,
)


def test_vacuum_relations():
    L = Lattice(2)
    vac = State.vacuum(L)
    for i in (1, 2):
        for n in range(1, 5):
            assert Abar(i, n, vac).is_zero()
        for m in range(0, 5):
            assert A(i, m, vac).is_zero()
        assert Abar(i, 0, vac) == f_state(L, i)


def test_zero_mode_on_f():
    # only alpha_i(0) e^i_{-1} contributes, so A^i(0) f^j = -delta_ij e^i_{-1} f^i = -delta_ij 1
    L = Lattice(3)
    for i in range(1, 4):
        for j in range(1, 4):
            want = -State.vacuum(L) if i == j else State(L)
            assert A(i, 0, f_state(L, j)) == want


def test_weyl_relations_on_random_states():
    rng = random.Random(0)
    L = Lattice(2)
    from winfinity.checks import random_state

    for _ in range(6):
        w = random_state(rng, L, 3)
        for i, j in [(1, 1), (1, 2), (2, 2)]:
            for n, m in [(1, -1), (-2, 2), (0, 0), (2, 1), (-1, -1)]:
                lhs = Abar(i, n, A(j, m, w)) - A(j, m, Abar(i, n, w))
                assert lhs == (w if i == j and n + m == 0 else State(L))
                aa = A(i, n, A(j, m, w)) - A(j, m, A(i, n, w))
                bb = Abar(i, n, Abar(j, m, w)) - Abar(j, m, Abar(i, n, w))
                assert aa.is_zero() and bb.is_zero()


def test_weyl_mode_rejects_weighted_states():
    L = Lattice(1)
    with pytest.raises(ModuleMismatch):
        weyl_mode(WeylIndex(1, True, 0), State.highest_weight(L, Weight((1,), (0,))))


def test_u_examples():
    L = Lattice(2)
    for i in (1, 2):
        assert build_U(L, i, 0) == -State.monomial(L, creations=[(L.N + i - 1, 1)])
        for k in range(5):
            u = build_U(L, i, k)
            assert u.degrees() == {k + 1}
            assert u.labels() == {L.zero()}
    total = w_generator(L, 3)
    assert total.state == total.per_pair[0] + total.per_pair[1]


def test_u_cross_check_raises(monkeypatch):
    L = Lattice(1)
    build_U.cache_clear()
    real = weylw.u_schur_form
    monkeypatch.setattr(weylw, "u_schur_form", lambda lat, i, k: real(lat, i, k) * 2)
    try:
        with pytest.raises(InternalInconsistency):
            build_U(L, 1, 2)
    finally:
        build_U.cache_clear()
    with pytest.raises(ValueError):
        build_U(L, 1, -1)


def test_j_mode_examples():
    rng = random.Random(1)
    for _ in range(5):
        weight = random_weight(rng, 2)
        L = Lattice(2)
        v = State.highest_weight(L, weight)
        assert j_mode(0, 0, v) == v * sum(weight.beta)
        for k in range(4):
            assert j_mode(k, 0, v) == v * hw_eigenvalue(k, weight)
            assert j_mode(k, 1, v).is_zero() and j_mode(k, 2, v).is_zero()


def test_hw_eigenvalue_examples():
    for k in range(8):
        assert hw_eigenvalue(k, Weight.zero(2)) == 0
        assert hw_eigenvalue(k, Weight((1,), (0,)), 1) == 0
    w = Weight((Fraction(1, 2), 3), (Fraction(-2, 3), 1))
    assert hw_eigenvalue(0, w) == -sum(s + t for s, t in zip(w.s, w.t))
    with pytest.raises(ValueError):
        hw_eigenvalue(1, w, 3)


def test_e_and_f_states():
    L = Lattice(2)
    assert e_state(L, 2) == State.iota(L, L.gamma(2))
    assert f_state(L, 2) == State.iota(L, neg(L.gamma(2)))
    assert mode(e_state(L, 1), -1, f_state(L, 1)) == State.vacuum(L)
