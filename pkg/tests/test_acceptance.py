"""The ten acceptance criteria at full scale, each with its runtime budget.

Every criterion prints one line (in the terminal summary) with its verdict,
the number of cases checked and the elapsed time.
"""

import time


from conftest import ACCEPTANCE_LINES
from winfinity import checks, lightcone, vertexop, weylw


def fresh():
    vertexop.clear_caches()
    lightcone.clear_caches()
    lightcone.local_bracket.cache_clear()
    weylw.build_U.cache_clear()
    weylw.w_generator.cache_clear()


def run_criterion(number, title, budget, suites):
    fresh()
    start = time.perf_counter()
    results = []
    for suite in suites:
        out = suite()
        results.extend(out if isinstance(out, list) else [out])
    elapsed = time.perf_counter() - start
    passed = all(r.passed for r in results) and elapsed < budget
    cases = ", ".join(f"{r.id}: {r.detail.get('cases', r.detail.get('brackets'))} {r.status}" for r in results)
    verdict = "PASS" if passed else "FAIL"
    line = f"criterion {number:2d} {verdict}  {title}  [{cases}]  {elapsed:.1f}s (budget {budget}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    for r in results:
        assert r.passed, (r.id, r.detail, r.counterexample)
    assert elapsed < budget, f"{title} took {elapsed:.1f}s, budget {budget}s"


def test_criterion_01_engine_calibration():
    run_criterion(1, "engine calibration", 10, [lambda: checks.check_standard(samples=100, max_r=4, max_n=4)])


def test_criterion_02_schur_eigenvalue():
    run_criterion(2, "Schur eigenvalue", 30, [lambda: checks.check_schur_eigenvalue(samples=50, max_r=8)])


def test_criterion_03_lattice_operator_identities():
    run_criterion(3, "lattice operator identities", 60, [lambda: checks.check_fms1(N=3, max_l=5, max_k=4, max_n=4)])


def test_criterion_04_weyl_realization():
    run_criterion(
        4, "Weyl realization", 120, [lambda: checks.check_fms2(N=2, max_degree=5, max_mode=4, box=1)]
    )


def test_criterion_05_generator_identity():
    run_criterion(5, "generator identity", 30, [lambda: checks.check_ul1(N=3, max_k=6)])


def test_criterion_06_highest_weights():
    run_criterion(6, "highest weights", 60, [lambda: checks.check_hw(samples=50, max_k=8, max_N=2)])


def test_criterion_07_delta_series_and_decomposition():
    run_criterion(
        7,
        "Delta series and decomposition",
        30,
        [
            lambda: checks.check_gener(samples=100, order=10, max_N=3),
            lambda: checks.check_decomposition(samples=100, order=10, max_N=3),
        ],
    )


def test_criterion_08_bracket_isomorphism():
    run_criterion(
        8, "bracket isomorphism", 120, [lambda: checks.check_bracket(N=2, max_l=2, max_mode=2, degree=3)]
    )


def test_criterion_09_structural_axioms():
    run_criterion(
        9,
        "structural axioms",
        120,
        [
            lambda: checks.check_comut(N=2, samples=60, max_degree=4, max_mode=3),
            lambda: checks.check_virasoro(N=2, samples=12, max_degree=4, max_mode=3),
            lambda: checks.check_cocycle(N=3, samples=1000, bound=3),
            lambda: checks.check_psi(samples=100),
        ],
    )


def test_criterion_10_n1_delta_series():
    run_criterion(10, "N = 1 Delta series", 10, [lambda: checks.check_n1(samples=50, order=10)])
