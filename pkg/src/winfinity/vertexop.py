"""Modes v_m w of vertex operators on V_L, M(1) and M(1, lambda).

Y(v, z) for v = iota(a) (x) h_1(-n_1) ... h_k(-n_k) is the normal-ordered product
of the derivative fields (1/(n-1)!) d^{n-1} h(z) = sum_p C(-p-1, n-1) h(p) z^{-p-n}
with the lattice operator

    Y(iota(a), z) = E^-(a, z) e_a E^+(a, z) z^{a(0)},
    E^-(a, z) = sum_r p_r(a(-1), a(-2), ...) z^r,
    E^+(a, z) = sum_r p_r(-a(1), -a(2), ...) z^{-r}.

Normal ordering puts every creation part (and E^-) on the left and every
annihilation part, h(0) included, on the right of e_a. So v_m w is a sum over
ways of sending each factor of v to one side: the annihilating factors and
E^+ act on w first, leaving a Laurent polynomial in z, and the creating
factors together with E^- form a power series in z whose coefficients depend
only on (a, creating factors, power) and are cached.

A second, slower engine peels one creation factor off v at a time,

    (h(-n) u)_m w = sum_{p <= -n} C(-p-1, n-1) h(p) u_{m-n-p} w
                  + sum_{p >= 0} C(-p-1, n-1) u_{m-n-p} h(p) w,

where the creation sum stops once the L_0 weight deg u + deg w - q - 1 drops
below the minimal weight of the target label. The tests compare the two.
"""

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Dict, Optional, Sequence

from .fock import (
    Monomial,
    State,
    Terms,
    _insert,
    add_term,
    annihilate_basis_mono,
    basis_mode,
    l0_degree,
    merge_modes,
)
from .lattice import Lattice, add, is_zero
from .scalars import Rational, int_binomial
from .schur import schur_creation_terms, schur_poly

CACHE_SIZE = 1 << 20


class ModuleMismatch(ValueError):
    pass


def _weighted(weight) -> bool:
    return weight is not None


def weight_bound(lattice: Lattice, weight, v: Monomial, w: Monomial) -> Optional[int]:
    """Largest q with v_q w possibly nonzero (None if v_q w vanishes for every q)."""
    if weight is not None:
        top = v.mode_sum + w.mode_sum - 1
    else:
        target = add(v.label, w.label)
        top = l0_degree(v, lattice) + l0_degree(w, lattice) - 1 - Rational(lattice.norm(target), 2)
    return math.floor(top)


def _annihilate_schur(lattice: Lattice, a: tuple, s: int, w: Monomial) -> Terms:
    """p_s(-a(1), -a(2), ...) applied to a monomial."""
    out: Terms = {}
    for exps, c in schur_poly(s).terms.items():
        current = {w: Rational(c)}
        for k, e in enumerate(exps):
            for _ in range(e):
                nxt: Terms = {}
                for mono, val in current.items():
                    for j, aj in enumerate(a):
                        if aj:
                            r = annihilate_basis_mono(mono, j, k + 1, lattice.sign(j))
                            if r is not None:
                                add_term(nxt, r[1], -aj * r[0] * val)
                current = nxt
                if not current:
                    break
            if not current:
                break
        for mono, val in current.items():
            add_term(out, mono, val)
    return out


@lru_cache(maxsize=CACHE_SIZE)
def _lattice_mode_mono(lattice: Lattice, weight, a: tuple, m: int, w: Monomial) -> tuple:
    if is_zero(a):
        return ((w, Rational(1)),) if m == -1 else ()
    if weight is not None:
        raise ModuleMismatch("lattice operators do not act on M(1, lambda)")
    b = w.label
    k0 = lattice.pairing(a, b)
    sign = lattice.epsilon(a, b)
    label = add(a, b)
    acc: Terms = {}
    get = acc.get
    for s in range(w.mode_sum + 1):
        r = -m - 1 - k0 + s
        if r < 0:
            continue
        ann = _annihilate_schur(lattice, a, s, w)
        if not ann:
            continue
        cre = schur_creation_terms(lattice, a, r)
        for mono, c in ann.items():
            c = sign * c
            for modes, d in cre.items():
                key = Monomial(label, merge_modes(mono.modes, modes))
                acc[key] = get(key, 0) + c * d
    return _nonzero(acc)


@lru_cache(maxsize=CACHE_SIZE)
def _creation_series(lattice: Lattice, a: tuple, factors: tuple, e: int) -> tuple:
    """z^e coefficient of E^-(a, z) times the creation parts of the factor fields, as (modes, coeff) pairs."""
    if not factors:
        if is_zero(a):
            return (((), Rational(1)),) if e == 0 else ()
        return tuple(schur_creation_terms(lattice, a, e).items())
    (k, n), rest = factors[0], factors[1:]
    acc: Dict[tuple, Rational] = {}
    get = acc.get
    for q in range(e + 1):
        coef = int_binomial(n + q - 1, n - 1)
        for modes, c in _creation_series(lattice, a, rest, e - q):
            key = _insert(modes, (k, n + q))
            acc[key] = get(key, 0) + coef * c
    return _nonzero(acc)


def _annihilation_side(lattice: Lattice, weight, a: tuple, factors: tuple, w: Monomial) -> Dict[int, Terms]:
    """Annihilating factor fields, then E^+(a, z), applied to w; keyed by the power of z."""
    cur: Dict[int, Terms] = {0: {w: Rational(1)}}
    for k, n in factors:
        nxt: Dict[int, Terms] = {}
        for power, terms in cur.items():
            ps = {0} | {p for mono in terms for kk, p in mono.modes if kk == k}
            for p in ps:
                coef = int_binomial(-p - 1, n - 1)
                out = basis_mode(lattice, weight, k, p, terms, coef)
                if out:
                    tgt = nxt.setdefault(power - p - n, {})
                    for mono, c in out.items():
                        add_term(tgt, mono, c)
        cur = {pw: t for pw, t in nxt.items() if t}
        if not cur:
            return cur
    if is_zero(a):
        return cur
    out: Dict[int, Terms] = {}
    for power, terms in cur.items():
        for mono, c in terms.items():
            for s in range(mono.mode_sum + 1):
                for mono2, c2 in _annihilate_schur(lattice, a, s, mono).items():
                    add_term(out.setdefault(power - s, {}), mono2, c * c2)
    return {pw: t for pw, t in out.items() if t}


# Inside the split engine a creation tuple is packed into one integer holding a
# FIELD_BITS-wide multiplicity for every (k, p), so multiplying monomials is an
# integer addition.
FIELD_BITS = 16
_FIELD_MASK = (1 << FIELD_BITS) - 1


def _pack(modes, rank: int) -> int:
    return sum(1 << (FIELD_BITS * ((p - 1) * rank + k)) for k, p in modes)


def _unpack(code: int, rank: int) -> tuple:
    out = []
    slot = 0
    while code:
        mult = code & _FIELD_MASK
        if mult:
            p, k = divmod(slot, rank)
            out.extend([(k, p + 1)] * mult)
        code >>= FIELD_BITS
        slot += 1
    out.sort()
    return tuple(out)


@lru_cache(maxsize=CACHE_SIZE)
def _packed_series(lattice: Lattice, a: tuple, factors: tuple, e: int) -> tuple:
    rank = lattice.rank
    return tuple((_pack(modes, rank), c) for modes, c in _creation_series(lattice, a, factors, e))


@lru_cache(maxsize=CACHE_SIZE)
def _splits(factors: tuple) -> tuple:
    """Ways to send the factors of a creation tuple to the annihilating side.

    Returns (annihilating, creating, count, weight of the annihilating part)
    with repeated factors grouped, so count = prod C(multiplicity, j).
    """
    groups = sorted(Counter(factors).items())
    out = []
    for js in itertools.product(*(range(r + 1) for _, r in groups)):
        ann, cre, count = [], [], 1
        for (f, r), j in zip(groups, js):
            ann.extend([f] * j)
            cre.extend([f] * (r - j))
            count *= math.comb(r, j)
        out.append((tuple(ann), tuple(cre), count, sum(n for _, n in ann)))
    return tuple(out)


@lru_cache(maxsize=CACHE_SIZE)
def _mode_packed(lattice: Lattice, weight, v: Monomial, m: int, w: Monomial) -> tuple:
    """v_m w as (target label, ((packed creation tuple, coeff), ...))."""
    a = v.label
    if weight is not None and not is_zero(a):
        raise ModuleMismatch("lattice operators do not act on M(1, lambda)")
    b = w.label
    k0 = lattice.pairing(a, b)
    sign = lattice.epsilon(a, b)
    rank = lattice.rank
    acc: Dict[int, Rational] = {}
    get = acc.get
    reach = w.mode_sum - m - 1 - k0
    for ann, cre, mult, ann_weight in _splits(v.modes):
        # the annihilating side lowers the power of z by at most its weight + deg w
        if reach + ann_weight < 0:
            continue
        for power, terms in _annihilation_side(lattice, weight, a, ann, w).items():
            e = -m - 1 - power - k0
            if e < 0:
                continue
            series = _packed_series(lattice, a, cre, e)
            if not series:
                continue
            for mono, c in terms.items():
                c = sign * mult * c
                base = _pack(mono.modes, rank)
                for code, d in series:
                    key = base + code
                    acc[key] = get(key, 0) + c * d
    return add(a, b), tuple((code, c) for code, c in acc.items() if c)


def _mode_split(lattice: Lattice, weight, v: State, m: int, w: State) -> Terms:
    packed: Dict[tuple, Dict[int, Rational]] = {}
    for vm, vc in v.terms.items():
        for wm, wc in w.terms.items():
            label, terms = _mode_packed(lattice, weight, vm, m, wm)
            if not terms:
                continue
            acc = packed.setdefault(label, {})
            get = acc.get
            c0 = vc * wc
            for code, c in terms:
                acc[code] = get(code, 0) + c0 * c
    rank = lattice.rank
    return {
        Monomial(label, _unpack(code, rank)): c for label, acc in packed.items() for code, c in acc.items() if c
    }


@lru_cache(maxsize=CACHE_SIZE)
def _mode_mono_peel(lattice: Lattice, weight, v: Monomial, m: int, w: Monomial) -> tuple:
    if not v.modes:
        return _lattice_mode_mono(lattice, weight, v.label, m, w)
    (k, n) = v.modes[0]
    u = Monomial(v.label, v.modes[1:])
    acc: Terms = {}
    get = acc.get

    # annihilation half, p >= 0
    ps = {0} | {p for kk, p in w.modes if kk == k}
    for p in sorted(ps):
        coef = int_binomial(-p - 1, n - 1)
        hw = basis_mode(lattice, weight, k, p, {w: Rational(1)})
        for mono2, c2 in hw.items():
            c2 = coef * c2
            for mono3, c3 in _mode_mono_peel(lattice, weight, u, m - n - p, mono2):
                acc[mono3] = get(mono3, 0) + c2 * c3

    # creation half, p <= -n
    qmax = weight_bound(lattice, weight, u, w)
    p = -n
    while m - n - p <= qmax:
        coef = int_binomial(-p - 1, n - 1)
        for mono3, c3 in _mode_mono_peel(lattice, weight, u, m - n - p, w):
            key = Monomial(mono3.label, _insert(mono3.modes, (k, -p)))
            acc[key] = get(key, 0) + coef * c3
        p -= 1
    return _nonzero(acc)


def _nonzero(acc: Terms) -> tuple:
    return tuple((m, c) for m, c in acc.items() if c)


def _check_pair(v: State, w: State):
    if v.lattice != w.lattice:
        raise ModuleMismatch("states live on different lattices")
    if v.weight is not None:
        raise ModuleMismatch("the vertex operator argument must lie in V_L or M(1)")
    if w.weight is not None and any(not is_zero(lbl) for lbl in v.labels()):
        raise ModuleMismatch("only M(1) states act on M(1, lambda)")


def mode(v: State, m: int, w: State, engine: str = "split") -> State:
    """v_m w, the coefficient of z^{-m-1} in Y(v, z) w.

    engine="peel" selects the factor-peeling recursion instead of the
    annihilation/creation split; both give the same answer.
    """
    _check_pair(v, w)
    lattice, weight = w.lattice, w.weight
    if engine == "split":
        return w._like(_mode_split(lattice, weight, v, m, w))
    if engine != "peel":
        raise ValueError(f"unknown engine {engine!r}")
    acc: Terms = {}
    for vm, vc in v.terms.items():
        for wm, wc in w.terms.items():
            for mono, c in _mode_mono_peel(lattice, weight, vm, m, wm):
                add_term(acc, mono, vc * wc * c)
    return w._like(acc)


def mode_bound(v: State, w: State) -> Optional[int]:
    """Largest q for which v_q w can be nonzero, from the L_0 grading."""
    bounds = [weight_bound(w.lattice, w.weight, vm, wm) for vm in v.terms for wm in w.terms]
    return max(bounds, default=None)


def lattice_mode(a: Sequence[int], m: int, w: State) -> State:
    """Mode of Y(iota(a), z)."""
    lattice = w.lattice
    a = lattice.vector(a)
    if w.weight is not None and not is_zero(a):
        raise ModuleMismatch("lattice operators do not act on M(1, lambda)")
    acc: Terms = {}
    for wm, wc in w.terms.items():
        for mono, c in _lattice_mode_mono(lattice, w.weight, a, m, wm):
            add_term(acc, mono, wc * c)
    return w._like(acc)


def nop(a: State, b: State) -> State:
    """Normally ordered product a_{-1} b."""
    return mode(a, -1, b)


def supercommutator(a: State, m: int, b: State, n: int, w: State) -> State:
    """[a_m, b_n] w with the Koszul sign for odd lattice labels."""
    total = w._like({})
    for pa, a_part in a.parity_parts().items():
        for pb, b_part in b.parity_parts().items():
            sign = -1 if pa * pb else 1
            total = total + mode(a_part, m, mode(b_part, n, w)) - sign * mode(b_part, n, mode(a_part, m, w))
    return total


def commutator_residual(a: State, m: int, b: State, n: int, w: State) -> State:
    """[a_m, b_n] w - sum_j C(m, j) (a_j b)_{m+n-j} w; identically zero."""
    lhs = supercommutator(a, m, b, n, w)
    rhs = w._like({})
    top = mode_bound(a, b)
    if top is not None:
        for j in range(0, top + 1):
            c = int_binomial(m, j)
            if not c:
                continue
            ajb = mode(a, j, b)
            if ajb:
                rhs = rhs + c * mode(ajb, m + n - j, w)
    return lhs - rhs


@lru_cache(maxsize=64)
def conformal_vector(lattice: Lattice) -> State:
    """omega = 1/2 sum_k <b_k, b_k> b_k(-1)^2, the conformal vector for signature (N, N)."""
    terms = {Monomial(lattice.zero(), ((k, 1), (k, 1))): Rational(lattice.sign(k), 2) for k in range(lattice.rank)}
    return State(lattice, terms)


def virasoro_mode(n: int, w: State) -> State:
    """L_n = omega_{n+1}."""
    return mode(conformal_vector(w.lattice), n + 1, w)


def clear_caches() -> None:
    _mode_packed.cache_clear()
    _mode_mono_peel.cache_clear()
    _creation_series.cache_clear()
    _packed_series.cache_clear()
    _lattice_mode_mono.cache_clear()
