import pytest

from winfinity import checks
from winfinity.checks import (
    SuiteConfig,
    _exact_rank,
    _free_monomials,
    _weyl_creators,
    check_cocycle,
    check_commutator_sign,
    check_fms1,
    check_hw,
    check_wizom,
    suites,
    vacuum_module_dimension,
)
from winfinity.lattice import Lattice


def test_vacuum_module_character():
    # N = 1, charge 0: 1, q, 3q^2, 6q^3, 12q^4, 21q^5
    assert [vacuum_module_dimension(1, d, (0,)) for d in range(6)] == [1, 1, 3, 6, 12, 21]
    assert [vacuum_module_dimension(1, d, (-1,)) for d in range(4)] == [0, 1, 2, 4]


@pytest.mark.parametrize("N,degree,charge", [(1, 4, (0,)), (1, 3, (2,)), (2, 2, (1, -1)), (2, 3, (0, 0))])
def test_character_matches_monomial_count(N, degree, charge):
    words = list(_free_monomials(_weyl_creators(N, degree), degree, charge))
    assert len(words) == len(set(words)) == vacuum_module_dimension(N, degree, charge)


def test_exact_rank():
    rows = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": 1}, {"a": 1, "c": -1}]
    assert _exact_rank(rows) == 3
    assert _exact_rank([]) == 0


def test_suites_small_scale():
    cfg = SuiteConfig(N=1, degree=2, max_k=2, order=4)
    skip = {"fms1", "bracket", "embed"}
    for name, run in suites(cfg).items():
        if name in skip:
            continue
        for res in run():
            assert res.passed, (res.id, res.detail, res.counterexample)


def test_wizom_small():
    assert check_wizom(N=1, max_degree=3, max_charge=2).passed


def test_cocycle_checks_separate_failures(monkeypatch):
    monkeypatch.setattr(Lattice, "epsilon", lambda self, x, y: 1)
    # a trivial cocycle is still a cocycle but has the wrong commutation signs
    assert check_cocycle(N=2, samples=50).passed
    res = check_commutator_sign(N=2, samples=50)
    assert not res.passed
    assert res.counterexample is not None and "x" in res.counterexample


def test_fms1_detects_wrong_schur_state(monkeypatch):
    real = checks.schur_state
    monkeypatch.setattr(checks, "schur_state", lambda h, r, L: real(h, r, L) * 2 if r else real(h, r, L))
    results = {r.id: r for r in check_fms1(N=1, max_l=2, max_k=1, max_n=1)}
    assert results["fms1.1"].passed and results["fms1.2"].passed and results["fms1.4"].passed
    assert not results["fms1.3"].passed
    assert "got" in results["fms1.3"].counterexample


def test_hw_counterexample_is_serialized(monkeypatch):
    monkeypatch.setattr(checks, "hw_eigenvalue", lambda k, w: checks.Rational(7))
    res = check_hw(samples=2, max_k=1, max_N=1)
    assert not res.passed
    payload = res.to_json()
    assert payload["status"] == "fail"
    got = payload["detail"]["counterexample"]["got"]
    assert "terms" in got and "weight" in got


def test_result_ids_are_unique():
    cfg = SuiteConfig(N=1, degree=1, max_k=1, order=2)
    names = list(suites(cfg))
    assert len(names) == len(set(names))
