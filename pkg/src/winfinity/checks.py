"""Verification suites, one per identity, with deterministic randomized inputs.

Every suite returns a ``CheckResult``.  Report ids:

    2c, lattice.commutator, heisenberg, vacuum, comut, vir.rel,
    eschurd, standard, schur1,
    fms1.1 .. fms1.4, fms2, fms2.engines, wizom, ul1, embed, hw,
    main.gener, main.decomp, veza, n1.delta, psi.cocycle, bracket

Sizes are keyword arguments so the same code runs as a quick CLI smoke test
and at full scale in the acceptance tests.
"""

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from . import lightcone
from .dhat import (
    DiffOpElement,
    delta_closed_form,
    delta_series,
    dhat_bracket,
    l_weights_from_j,
    measured_j_eigenvalues,
    m1_basis,
    operator_commutator,
    psi,
    quasifinite_decompose,
    realization_bracket_check,
    weight_components,
    _colored_partitions,
)
from .fock import Monomial, State, Weight, apply_mode, l0_degree
from .lattice import Lattice, add, neg
from .scalars import Rational, format_rational, gen_binomial
from .schur import schur_poly, schur_state
from .series import PowerSeries, exp_quotient
from .vertexop import commutator_residual, lattice_mode, mode, virasoro_mode
from .weylw import A, Abar, build_U, e_state, f_state, hw_eigenvalue, j_mode, w_generator


@dataclass
class CheckResult:
    id: str
    passed: bool
    detail: Dict = field(default_factory=dict)
    counterexample: Optional[Dict] = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        detail = dict(self.detail)
        if self.counterexample is not None:
            detail["counterexample"] = self.counterexample
        return {"id": self.id, "status": self.status, "detail": detail}


class _Tally:
    """Counts cases and keeps the first failure."""

    def __init__(self, id_: str):
        self.id = id_
        self.cases = 0
        self.failures = 0
        self.first: Optional[Dict] = None

    def check(self, ok: bool, **context) -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = {k: _jsonable(v) for k, v in context.items()}
        return ok

    def result(self, **detail) -> CheckResult:
        detail = {"cases": self.cases, "failures": self.failures, **detail}
        return CheckResult(self.id, self.failures == 0 and self.cases > 0, detail, self.first)


def _jsonable(v):
    if isinstance(v, State):
        return v.to_json()
    if isinstance(v, Weight):
        return {"alpha": [format_rational(a) for a in v.alpha], "beta": [format_rational(b) for b in v.beta]}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


# random inputs


def random_rational(rng: random.Random, bound: int = 6, den: int = 4) -> Rational:
    return Rational(rng.randint(-bound, bound), rng.randint(1, den))


def random_weight(rng: random.Random, N: int) -> Weight:
    return Weight(tuple(random_rational(rng) for _ in range(N)), tuple(random_rational(rng) for _ in range(N)))


def random_vector(rng: random.Random, lattice: Lattice, bound: int = 2) -> tuple:
    return tuple(rng.randint(-bound, bound) for _ in range(lattice.rank))


def random_modes(rng: random.Random, lattice: Lattice, degree: int) -> tuple:
    parts = list(_colored_partitions(degree, lattice.rank))
    return rng.choice(parts)


def random_state(rng: random.Random, lattice: Lattice, max_degree: int, label_bound: int = 1, terms: int = 2) -> State:
    """A few V_L monomials of a common label, total degree (L_0 weight) <= max_degree."""
    label = random_vector(rng, lattice, label_bound)
    room = max(0, max_degree - max(0, lattice.norm(label)) // 2)
    acc = State(lattice)
    for _ in range(terms):
        modes = random_modes(rng, lattice, rng.randint(0, room))
        acc = acc + State(lattice, {Monomial(label, modes): rng.randint(-3, 3) or 1})
    return acc


def random_m1_state(rng: random.Random, lattice: Lattice, max_degree: int, weight: Weight = None) -> State:
    acc = State(lattice, weight=weight)
    for _ in range(2):
        modes = random_modes(rng, lattice, rng.randint(0, max_degree))
        acc = acc + State(lattice, {Monomial(lattice.zero(), modes): rng.randint(-3, 3) or 1}, weight)
    return acc


def heisenberg_word(lattice: Lattice, h: Sequence, ns: Sequence[int], weight: Weight = None) -> State:
    """h(-n_1) ... h(-n_r) applied to 1 (or v_lambda)."""
    w = State.highest_weight(lattice, weight) if weight is not None else State.vacuum(lattice)
    for n in ns:
        w = apply_mode(h, -n, w)
    return w


# lattice


def check_cocycle(N: int = 3, samples: int = 1000, bound: int = 3, seed: int = 0) -> CheckResult:
    """eps(x, y) eps(x + y, z) = eps(y, z) eps(x, y + z)."""
    rng = random.Random(seed)
    t = _Tally("2c")
    for n in range(1, N + 1):
        L = Lattice(n)
        basis = [L.basis(k) for k in range(L.rank)]
        triples = list(itertools.product(basis, repeat=3))
        triples += [tuple(random_vector(rng, L, bound) for _ in range(3)) for _ in range(samples)]
        for x, y, z in triples:
            lhs = L.epsilon(x, y) * L.epsilon(add(x, y), z)
            rhs = L.epsilon(y, z) * L.epsilon(x, add(y, z))
            t.check(lhs == rhs, N=n, x=x, y=y, z=z)
    return t.result()


def check_commutator_sign(N: int = 3, samples: int = 1000, bound: int = 3, seed: int = 0) -> CheckResult:
    """eps(x, y) eps(y, x) = (-1)^{<x,y> + <x,x><y,y>}."""
    rng = random.Random(seed)
    t = _Tally("lattice.commutator")
    for n in range(1, N + 1):
        L = Lattice(n)
        basis = [L.basis(k) for k in range(L.rank)]
        pairs = list(itertools.product(basis, repeat=2))
        pairs += [(random_vector(rng, L, bound), random_vector(rng, L, bound)) for _ in range(samples)]
        for x, y in pairs:
            want = (-1) ** ((L.pairing(x, y) + L.norm(x) * L.norm(y)) % 2)
            t.check(L.epsilon(x, y) * L.epsilon(y, x) == want, N=n, x=x, y=y)
    return t.result()


# Heisenberg and vertex operator axioms


def check_heisenberg(N: int = 2, samples: int = 40, max_degree: int = 3, seed: int = 0) -> CheckResult:
    """[h(m), h'(n)] = m <h, h'> delta_{m+n,0}."""
    rng = random.Random(seed)
    t = _Tally("heisenberg")
    for _ in range(samples):
        L = Lattice(rng.randint(1, N))
        h, g = random_vector(rng, L), random_vector(rng, L)
        m, n = rng.randint(-3, 3), rng.randint(-3, 3)
        w = random_state(rng, L, max_degree)
        lhs = apply_mode(h, m, apply_mode(g, n, w)) - apply_mode(g, n, apply_mode(h, m, w))
        want = w * (m * L.pairing(h, g)) if m + n == 0 else State(L)
        t.check(lhs == want, h=h, g=g, m=m, n=n, w=w)
    return t.result()


def check_vacuum(N: int = 2, samples: int = 30, max_degree: int = 3, seed: int = 0) -> CheckResult:
    """Y(1, z) = id and v_{-1} 1 = v, v_n 1 = 0 for n >= 0."""
    rng = random.Random(seed)
    t = _Tally("vacuum")
    for _ in range(samples):
        L = Lattice(rng.randint(1, N))
        v = random_state(rng, L, max_degree)
        vac = State.vacuum(L)
        for n in range(-3, 3):
            t.check(mode(vac, n, v) == (v if n == -1 else State(L)), v=v, n=n, side="vacuum operator")
        for n in range(-1, 3):
            t.check(mode(v, n, vac) == (v if n == -1 else State(L)), v=v, n=n, side="creation")
    return t.result()


def check_comut(
    N: int = 2, samples: int = 20, max_degree: int = 4, max_mode: int = 3, seed: int = 0
) -> CheckResult:
    """[a_m, b_n] w = sum_j C(m, j) (a_j b)_{m+n-j} w."""
    rng = random.Random(seed)
    t = _Tally("comut")
    for _ in range(samples):
        L = Lattice(rng.randint(1, N))
        a = random_state(rng, L, rng.randint(0, max_degree), terms=1)
        b = random_state(rng, L, rng.randint(0, max_degree), terms=1)
        w = random_state(rng, L, rng.randint(0, max_degree))
        m, n = rng.randint(-max_mode, max_mode), rng.randint(-max_mode, max_mode)
        res = commutator_residual(a, m, b, n, w)
        t.check(res.is_zero(), a=a, m=m, b=b, n=n, w=w, residual=res)
    return t.result()


def check_virasoro(N: int = 2, samples: int = 12, max_degree: int = 3, max_mode: int = 2, seed: int = 0) -> CheckResult:
    """L_0 grading, and [L_m, L_n] = (m - n) L_{m+n} + (2N/12)(m^3 - m) delta_{m+n,0}."""
    rng = random.Random(seed)
    t = _Tally("vir.rel")
    for n_pairs in range(1, N + 1):
        L = Lattice(n_pairs)
        c = 2 * n_pairs
        for _ in range(samples):
            w = random_state(rng, L, max_degree, terms=1)
            (mono,) = w.terms
            t.check(virasoro_mode(0, w) == w * l0_degree(mono, L), w=w, relation="L_0 grading")
            m, n = rng.randint(-max_mode, max_mode), rng.randint(-max_mode, max_mode)
            lhs = virasoro_mode(m, virasoro_mode(n, w)) - virasoro_mode(n, virasoro_mode(m, w))
            rhs = virasoro_mode(m + n, w) * (m - n)
            if m + n == 0:
                rhs = rhs + w * Rational(c * (m**3 - m), 12)
            t.check(lhs == rhs, w=w, m=m, n=n, relation="Virasoro bracket")
    return t.result(central_charge="2N")


# Schur polynomials


def check_schur_generating(max_r: int = 10, samples: int = 5, seed: int = 0) -> CheckResult:
    """p_r(x) equals the y^r coefficient of exp(sum_n x_n y^n / n), at random rational points."""
    rng = random.Random(seed)
    t = _Tally("eschurd")
    for _ in range(samples):
        xs = [random_rational(rng) for _ in range(max_r)]
        series = PowerSeries([0] + [x / (n + 1) for n, x in enumerate(xs)]).exp()
        for r in range(max_r + 1):
            t.check(schur_poly(r)(xs) == series[r], r=r, x=xs)
    return t.result(max_r=max_r)


def check_standard(samples: int = 100, max_r: int = 4, max_n: int = 4, max_N: int = 2, seed: int = 0) -> CheckResult:
    """u = h(-n_1)...h(-n_r)1: u_{k-1} v = (-1)^{sum n + r} <lambda,h>^r v and u_n v = 0 for n > k-1."""
    rng = random.Random(seed)
    t = _Tally("standard")
    for _ in range(samples):
        L = Lattice(rng.randint(1, max_N))
        weight = random_weight(rng, L.N)
        h = random_vector(rng, L)
        ns = [rng.randint(1, max_n) for _ in range(rng.randint(1, max_r))]
        k = sum(ns)
        u = heisenberg_word(L, h, ns)
        v = State.highest_weight(L, weight)
        x = weight.pair(h)
        want = v * ((-1) ** ((k + len(ns)) % 2) * x ** len(ns))
        t.check(mode(u, k - 1, v) == want, h=h, ns=ns, weight=weight, clause="eigenvalue")
        for n in range(k, k + 3):
            t.check(mode(u, n, v).is_zero(), h=h, ns=ns, weight=weight, n=n, clause="vanishing")
    return t.result()


def check_schur_eigenvalue(samples: int = 50, max_r: int = 8, max_N: int = 2, seed: int = 0) -> CheckResult:
    """u = p_r(h(-1), h(-2), ...)1: u_{r-1} v = C(<lambda,h>, r) v and u_n v = 0 for n >= r."""
    rng = random.Random(seed)
    t = _Tally("schur1")
    for _ in range(samples):
        L = Lattice(rng.randint(1, max_N))
        weight = random_weight(rng, L.N)
        h = random_vector(rng, L)
        v = State.highest_weight(L, weight)
        x = weight.pair(h)
        for r in range(max_r + 1):
            u = schur_state(h, r, L)
            t.check(mode(u, r - 1, v) == v * gen_binomial(x, r), h=h, r=r, weight=weight, clause="eigenvalue")
            for n in range(r, r + 2):
                t.check(mode(u, n, v).is_zero(), h=h, r=r, n=n, weight=weight, clause="vanishing")
    return t.result(max_r=max_r)


# lattice realization of the Weyl fields


def _fms1_probes(L: Lattice) -> List[State]:
    """Monomials with label 0, +-gamma_m, alpha_m or beta_m and at most one alpha/beta(-1)."""
    labels = [L.zero()]
    for m in range(1, L.N + 1):
        labels += [L.gamma(m), neg(L.gamma(m)), L.alpha(m), L.beta(m)]
    out = []
    for label in labels:
        out.append(State.iota(L, label))
        out += [State.monomial(L, label=label, creations=[(k, 1)]) for k in range(L.rank)]
    return out


def check_fms1(N: int = 3, max_l: int = 5, max_k: int = 4, max_n: int = 4) -> List[CheckResult]:
    """The four groups of identities for e^i = iota(gamma_i), f^i = iota(-gamma_i).

    1. e^i_n e^j = f^i_n f^j = 0 for n >= 0.
    2. e^i_{-1} f^j and f^i_{-1} e^j: 1 for i = j; for i != j the pairing
       <gamma_i, -gamma_j> vanishes too, so the product is the lattice
       state eps(gamma_i, -gamma_j) iota(gamma_i - gamma_j), whose vacuum
       component is 0.  Both products vanish for n >= 0.
    3. e^i_{-l-1} f^i = p_l(gamma_i) 1 and f^i_{-l-1} e^i = p_l(-gamma_i) 1.
    4. [alpha_i(k), e^j_n] = delta_ij e^j_{n+k}, [alpha_i(k), f^j_n] = -delta_ij f^j_{n+k}.
    """
    t1, t2, t3, t4 = (_Tally(f"fms1.{c}") for c in (1, 2, 3, 4))
    for n_pairs in range(1, N + 1):
        L = Lattice(n_pairs)
        vac = State.vacuum(L)
        gam = {i: L.gamma(i) for i in range(1, n_pairs + 1)}
        for i, j in itertools.product(gam, repeat=2):
            gi, gj = gam[i], gam[j]
            for n in range(0, max_n + 1):
                t1.check(lattice_mode(gi, n, e_state(L, j)).is_zero(), N=n_pairs, i=i, j=j, n=n, kind="e e")
                t1.check(lattice_mode(neg(gi), n, f_state(L, j)).is_zero(), N=n_pairs, i=i, j=j, n=n, kind="f f")
                t2.check(lattice_mode(gi, n, f_state(L, j)).is_zero(), N=n_pairs, i=i, j=j, n=n, kind="e f")
                t2.check(lattice_mode(neg(gi), n, e_state(L, j)).is_zero(), N=n_pairs, i=i, j=j, n=n, kind="f e")
            for a, b, kind in ((gi, neg(gj), "e f"), (neg(gi), gj, "f e")):
                got = lattice_mode(a, -1, State.iota(L, b))
                if i == j:
                    want = vac
                else:
                    want = State.iota(L, add(a, b), L.epsilon(a, b))
                ok = got == want and got.coefficient(Monomial(L.zero())) == (1 if i == j else 0)
                t2.check(ok, N=n_pairs, i=i, j=j, kind=kind, got=got)
        for i, g in gam.items():
            for l in range(max_l + 1):
                got = lattice_mode(g, -l - 1, f_state(L, i))
                t3.check(got == schur_state(g, l, L), N=n_pairs, i=i, l=l, kind="e f", got=got)
                got = lattice_mode(neg(g), -l - 1, e_state(L, i))
                t3.check(got == schur_state(neg(g), l, L), N=n_pairs, i=i, l=l, kind="f e", got=got)
        probes = _fms1_probes(L)
        for i, j in itertools.product(gam, repeat=2):
            a_i = L.alpha(i)
            for sign in (1, -1):
                c = gam[j] if sign == 1 else neg(gam[j])
                for k in range(-max_k, max_k + 1):
                    for n in range(-max_n, max_n + 1):
                        for w in probes:
                            lhs = apply_mode(a_i, k, lattice_mode(c, n, w)) - lattice_mode(c, n, apply_mode(a_i, k, w))
                            want = lattice_mode(c, n + k, w) * sign if i == j else State(L)
                            t4.check(lhs == want, N=n_pairs, i=i, j=j, k=k, n=n, field="e" if sign == 1 else "f", w=w)
    return [
        t1.result(),
        t2.result(),
        t3.result(max_l=max_l),
        t4.result(probe_states=len(_fms1_probes(Lattice(N)))),
    ]


def label_box(lattice: Lattice, box: int) -> List[tuple]:
    return list(itertools.product(range(-box, box + 1), repeat=lattice.rank))


def check_fms2(N: int = 2, max_degree: int = 5, max_mode: int = 4, box: int = 1) -> CheckResult:
    """[Abar^i(n), A^j(m)] = delta_ij delta_{m+n,0}, all other brackets zero, on every
    basis state with label coordinates in [-box, box] and L_0 degree <= max_degree."""
    states = brackets = 0
    first = None
    failures = 0
    for n_pairs in range(1, N + 1):
        L = Lattice(n_pairs)
        res = lightcone.weyl_relation_sweep(L, label_box(L, box), max_degree, max_mode)
        states += res.states
        brackets += res.brackets
        failures += len(res.failures)
        if res.failures and first is None:
            w, x, y, got = res.failures[0]
            first = {
                "N": n_pairs,
                "state": lightcone.from_lightcone(L, {w: 1}).to_json(),
                "x": _weyl_name(x),
                "y": _weyl_name(y),
                "got": str(got),
            }
    detail = {"states": states, "brackets": brackets, "failures": failures, "max_degree": max_degree,
              "max_mode": max_mode, "label_box": box}
    return CheckResult("fms2", failures == 0 and brackets > 0, detail, first)


def _weyl_name(x) -> str:
    i, starred, n = x
    return f"{'Abar' if starred else 'A'}^{i}({n})"


def check_weyl_engines(N: int = 2, samples: int = 30, max_degree: int = 4, max_mode: int = 3, seed: int = 0) -> CheckResult:
    """Light-cone Weyl modes agree with the generic vertex operator engine."""
    rng = random.Random(seed)
    t = _Tally("fms2.engines")
    for _ in range(samples):
        L = Lattice(rng.randint(1, N))
        w = random_state(rng, L, max_degree)
        i = rng.randint(1, L.N)
        starred = rng.random() < 0.5
        n = rng.randint(-max_mode, max_mode)
        generic = Abar(i, n, w) if starred else A(i, n, w)
        lc = lightcone.weyl_apply(L, i, starred, n, lightcone.to_lightcone(w))
        t.check(lightcone.from_lightcone(L, lc) == generic, w=w, field=_weyl_name((i, starred, n)))
    return t.result()


def _exact_rank(rows: List[Dict]) -> int:
    """Rank of sparse rational row vectors by Gaussian elimination."""
    pivots: Dict = {}
    rank = 0
    for row in rows:
        row = {k: Rational(v) for k, v in row.items() if v}
        while row:
            key = min(row)
            if key not in pivots:
                pivots[key] = row
                rank += 1
                break
            piv = pivots[key]
            f = row[key] / piv[key]
            for k, v in piv.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def _weyl_creators(N: int, max_degree: int) -> List[tuple]:
    """(i, starred, n, degree): A^i(-m), m >= 1 has degree m; Abar^i(-n), n >= 0 has degree n."""
    out = []
    for i in range(1, N + 1):
        out += [(i, False, -m, m) for m in range(1, max_degree + 1)]
        out += [(i, True, -n, n) for n in range(0, max_degree + 1)]
    return out


def _free_monomials(creators, degree: int, charge: tuple):
    """Multisets of creators with the given total degree and per-pair charge (#Abar - #A)."""
    N = len(charge)
    # a pair holds at most `degree` A's, so at most charge + degree copies of Abar(0)
    zero_cap = [max(0, c + degree) for c in charge]

    def rec(idx, deg, ch, chosen):
        if idx == len(creators):
            if deg == 0 and ch == charge:
                yield tuple(chosen)
            return
        i, starred, n, d = creators[idx]
        cap = deg // d if d else zero_cap[i - 1]
        step = 1 if starred else -1
        for r in range(cap + 1):
            nxt = list(ch)
            nxt[i - 1] += r * step
            yield from rec(idx + 1, deg - r * d, tuple(nxt), chosen + [creators[idx]] * r)

    yield from rec(0, degree, (0,) * N, [])


def vacuum_module_dimension(N: int, degree: int, charge: tuple) -> int:
    """Dimension of the Weyl vacuum module at (degree, charge) from its character

        prod_i prod_{m >= 1} 1/(1 - q^m x_i^{-1}) prod_{n >= 0} 1/(1 - q^n x_i),

    expanded one factor at a time as a dictionary of (degree, charges) coefficients.
    """
    poly: Dict[tuple, int] = {(0,) + (0,) * N: 1}
    bound = degree + sum(abs(c) for c in charge)
    for i in range(N):
        for starred in (False, True):
            for d in range(0 if starred else 1, degree + 1):
                step = 1 if starred else -1
                new: Dict[tuple, int] = {}
                for key, c in poly.items():
                    for r in itertools.count():
                        deg = key[0] + r * d
                        ch = key[1 + i] + r * step
                        if deg > degree or abs(ch) > bound:
                            break
                        nk = list(key)
                        nk[0] = deg
                        nk[1 + i] = ch
                        nk = tuple(nk)
                        new[nk] = new.get(nk, 0) + c
                poly = new
    return poly.get((degree,) + tuple(charge), 0)


def check_wizom(N: int = 2, max_degree: int = 4, max_charge: int = 1) -> CheckResult:
    """Weyl monomials applied to 1 span a space whose graded dimensions match the vacuum module."""
    t = _Tally("wizom")
    table = []
    for n_pairs in range(1, N + 1):
        L = Lattice(n_pairs)
        creators = _weyl_creators(n_pairs, max_degree)
        vac = State.vacuum(L)
        for charge in itertools.product(range(-max_charge, max_charge + 1), repeat=n_pairs):
            for d in range(max_degree + 1):
                rows = []
                for word in _free_monomials(creators, d, charge):
                    w = vac
                    for i, starred, n, _ in reversed(word):
                        w = Abar(i, n, w) if starred else A(i, n, w)
                    rows.append(dict(w.terms))
                rank = _exact_rank(rows)
                dim = vacuum_module_dimension(n_pairs, d, charge)
                table.append([n_pairs, d, list(charge), rank, dim])
                t.check(rank == dim == len(rows), N=n_pairs, degree=d, charge=charge, rank=rank, expected=dim)
    return t.result(max_degree=max_degree, max_charge=max_charge)


def check_ul1(N: int = 3, max_k: int = 6) -> CheckResult:
    """A^i(-1) Abar^i(-k) 1 = alpha_i(-1) p_k(-gamma_i) 1 + p_{k+1}(-gamma_i) 1."""
    t = _Tally("ul1")
    for n_pairs in range(1, N + 1):
        L = Lattice(n_pairs)
        for i in range(1, n_pairs + 1):
            for k in range(max_k + 1):
                try:
                    u = build_U(L, i, k)
                except AssertionError as exc:
                    t.check(False, N=n_pairs, i=i, k=k, error=str(exc))
                    continue
                homogeneous = u.degrees() == {k + 1}
                t.check(homogeneous and u.labels() == {L.zero()}, N=n_pairs, i=i, k=k, U=u)
    return t.result()


def check_embedding(N: int = 2, max_k: int = 8, max_degree: int = 2, max_mode: int = 2) -> CheckResult:
    """U_k lies in M(1), and its modes preserve M(1)."""
    t = _Tally("embed")
    for n_pairs in range(1, N + 1):
        L = Lattice(n_pairs)
        basis = m1_basis(L, max_degree)
        for k in range(max_k + 1):
            u = w_generator(L, k).state
            t.check(u.labels() == {L.zero()}, N=n_pairs, k=k, U=u)
            if k > 3:
                continue
            for w in basis:
                for m in range(-max_mode, k + max_degree + 1):
                    out = mode(u, m, w)
                    t.check(out.labels() <= {L.zero()}, N=n_pairs, k=k, m=m, w=w)
    return t.result()


def check_hw(samples: int = 50, max_k: int = 8, max_N: int = 2, max_m: int = 3, seed: int = 0) -> CheckResult:
    """J^k(0) v_lambda matches the closed form and J^k(m) v_lambda = 0 for m > 0."""
    rng = random.Random(seed)
    t = _Tally("hw")
    for _ in range(samples):
        N = rng.randint(1, max_N)
        weight = random_weight(rng, N)
        L = Lattice(N)
        v = State.highest_weight(L, weight)
        for k in range(max_k + 1):
            got = j_mode(k, 0, v)
            t.check(got == v * hw_eigenvalue(k, weight), weight=weight, k=k, got=got)
            for m in range(1, max_m + 1):
                t.check(j_mode(k, m, v).is_zero(), weight=weight, k=k, m=m)
    return t.result()


# highest weight series


def check_gener(samples: int = 100, order: int = 10, max_N: int = 3, seed: int = 0) -> CheckResult:
    """Resummed J^k(0) eigenvalues equal the closed exponential form of Delta_lambda."""
    rng = random.Random(seed)
    t = _Tally("main.gener")
    for s in range(samples):
        weight = random_weight(rng, 1 + s % max_N)
        t.check(delta_series(weight, order) == delta_closed_form(weight, order), weight=weight)
    return t.result(order=order)


def check_decomposition(samples: int = 100, order: int = 10, max_N: int = 3, seed: int = 0) -> CheckResult:
    """Exponent/multiplicity data rebuilds Delta_lambda and sum p_i(0) = -N."""
    rng = random.Random(seed)
    t = _Tally("main.decomp")
    for s in range(samples):
        N = 1 + s % max_N
        weight = random_weight(rng, N)
        if s % 7 == 0:
            # force coinciding exponents so the merge is exercised
            weight = Weight(weight.alpha, tuple(-a for a in weight.alpha))
        try:
            dec = quasifinite_decompose(weight, order)
        except ArithmeticError as exc:
            t.check(False, weight=weight, error=str(exc))
            continue
        ok = dec.multiplicity_sum_at_zero() == -N and dec.delta(order) == delta_closed_form(weight, order)
        t.check(ok, weight=weight)
    return t.result(order=order)


def check_veza(samples: int = 20, max_n: int = 6, max_N: int = 2, seed: int = 0) -> CheckResult:
    """L^n(0) eigenvalues from measured J^l(0) via the falling-factorial change of basis."""
    rng = random.Random(seed)
    t = _Tally("veza")
    for s in range(samples):
        weight = random_weight(rng, 1 + s % max_N)
        from_j = l_weights_from_j(measured_j_eigenvalues(weight, max_n))
        t.check(from_j == weight_components(weight, max_n).components, weight=weight)
    return t.result()


def n1_delta(a, b, order: int) -> PowerSeries:
    """-(e^{-(a+b)x} - 1)/(e^x - 1) - a e^{-(a+b)x} for N = 1."""
    s = -(Rational(a) + Rational(b))
    return -exp_quotient(s, order) - PowerSeries.exp_linear(s, order) * a


def check_n1(samples: int = 50, order: int = 10, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    t = _Tally("n1.delta")
    for _ in range(samples):
        weight = random_weight(rng, 1)
        want = n1_delta(weight.alpha[0], weight.beta[0], order)
        t.check(delta_series(weight, order) == want == delta_closed_form(weight, order), weight=weight)
    return t.result(order=order)


# D-hat


def _random_diffop(rng: random.Random, max_l: int = 3, max_k: int = 3) -> DiffOpElement:
    terms = {}
    for _ in range(rng.randint(1, 2)):
        key = (rng.choice("JL"), rng.randint(0, max_l), rng.randint(-max_k, max_k))
        terms[key] = terms.get(key, 0) + random_rational(rng, 3, 2) or 1
    return DiffOpElement(terms)


def check_psi(samples: int = 100, seed: int = 0) -> CheckResult:
    """Psi is alternating and a 2-cocycle; the bracket satisfies Jacobi."""
    rng = random.Random(seed)
    t = _Tally("psi.cocycle")

    def op(x, y):
        return DiffOpElement.from_operator(operator_commutator(x, y))

    for _ in range(samples):
        x, y, z = (_random_diffop(rng) for _ in range(3))
        t.check(psi(x, x) == 0, x=str(x), identity="alternating")
        t.check(psi(x, y) == -psi(y, x), x=str(x), y=str(y), identity="antisymmetry")
        cyc = psi(op(x, y), z) + psi(op(y, z), x) + psi(op(z, x), y)
        t.check(cyc == 0, x=str(x), y=str(y), z=str(z), identity="cocycle")
        c = random_rational(rng)
        jac = (
            dhat_bracket(dhat_bracket(x, y, c), z, c)
            + dhat_bracket(dhat_bracket(y, z, c), x, c)
            + dhat_bracket(dhat_bracket(z, x, c), y, c)
        )
        t.check(jac.is_zero(), x=str(x), y=str(y), z=str(z), identity="Jacobi")
    return t.result()


def check_bracket(N: int = 2, max_l: int = 2, max_mode: int = 2, degree: int = 3) -> CheckResult:
    """[J^a(m), J^b(n)] on the free fields equals the D-hat bracket at c = -N."""
    t = _Tally("bracket")
    for n_pairs in range(1, N + 1):
        for a, b in itertools.product(range(max_l + 1), repeat=2):
            for m, n in itertools.product(range(-max_mode, max_mode + 1), repeat=2):
                ok = realization_bracket_check(a, m, b, n, n_pairs, degree)
                t.check(ok, N=n_pairs, a=a, m=m, b=b, n=n)
    central = _central_value(N)
    t.check(central == -N, N=N, central=central, identity="[J^0(1), J^0(-1)] = -N")
    return t.result(degree=degree)


def _central_value(N: int) -> Rational:
    L = Lattice(N)
    vac = State.vacuum(L)
    got = j_mode(0, 1, j_mode(0, -1, vac)) - j_mode(0, -1, j_mode(0, 1, vac))
    return got.coefficient(Monomial(L.zero()))


# registry


@dataclass(frozen=True)
class SuiteConfig:
    """Sizes for a CLI run: ``N`` bounds the number of pairs, ``degree`` the state degree."""

    N: int = 1
    degree: int = 4
    max_k: int = 4
    order: int = 10
    seed: int = 0


def suites(cfg: SuiteConfig) -> Dict[str, Callable[[], List[CheckResult]]]:
    N, d, s = cfg.N, cfg.degree, cfg.seed
    small = max(1, min(d, 3))

    def one(fn, *args, **kw):
        return lambda: [fn(*args, **kw)]

    return {
        "2c": one(check_cocycle, N=N, samples=200, seed=s),
        "lattice.commutator": one(check_commutator_sign, N=N, samples=200, seed=s),
        "heisenberg": one(check_heisenberg, N=N, samples=20, max_degree=small, seed=s),
        "vacuum": one(check_vacuum, N=N, samples=10, max_degree=small, seed=s),
        "comut": one(check_comut, N=N, samples=8, max_degree=min(d, 2), max_mode=2, seed=s),
        "vir.rel": one(check_virasoro, N=N, samples=6, max_degree=small, seed=s),
        "eschurd": one(check_schur_generating, max_r=min(cfg.order, 10), samples=3, seed=s),
        "standard": one(check_standard, samples=30, max_N=N, seed=s),
        "schur1": one(check_schur_eigenvalue, samples=10, max_r=min(cfg.max_k, 8), max_N=N, seed=s),
        "fms1": lambda: check_fms1(N=N, max_l=5, max_k=2, max_n=2),
        "fms2": one(check_fms2, N=min(N, 2), max_degree=d, max_mode=min(d, 4), box=1),
        "fms2.engines": one(check_weyl_engines, N=N, samples=10, max_degree=small, seed=s),
        "wizom": one(check_wizom, N=min(N, 2), max_degree=min(d, 4) if N == 1 else min(d, 3), max_charge=1),
        "ul1": one(check_ul1, N=N, max_k=min(cfg.max_k, 6)),
        "embed": one(check_embedding, N=N, max_k=cfg.max_k, max_degree=min(d, 2)),
        "hw": one(check_hw, samples=10, max_k=cfg.max_k, max_N=N, seed=s),
        "main.gener": one(check_gener, samples=20, order=cfg.order, max_N=N, seed=s),
        "main.decomp": one(check_decomposition, samples=20, order=cfg.order, max_N=N, seed=s),
        "veza": one(check_veza, samples=5, max_n=min(cfg.max_k, 6), max_N=N, seed=s),
        "n1.delta": one(check_n1, samples=10, order=cfg.order, seed=s),
        "psi.cocycle": one(check_psi, samples=30, seed=s),
        "bracket": one(check_bracket, N=N, max_l=min(cfg.max_k, 2), max_mode=2, degree=min(d, 3)),
    }


def run_all(cfg: SuiteConfig) -> List[CheckResult]:
    out: List[CheckResult] = []
    for run in suites(cfg).values():
        out.extend(run())
    return sorted(out, key=lambda r: r.id)
