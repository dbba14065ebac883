"""Schur polynomials p_r defined by exp(sum_n x_n y^n / n) = sum_r p_r y^r."""

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from .fock import Monomial, State, Weight, add_term, merge_modes
from .lattice import Lattice
from .scalars import Rational

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class SchurPolynomial:
    """p_r as a map from exponent vectors (e_1, ..., e_r) of x_1..x_r to coefficients."""

    r: int
    terms: Dict[Exponents, Rational]

    def __call__(self, values: Sequence) -> Rational:
        total = Rational(0)
        for exps, c in self.terms.items():
            term = Rational(c)
            for k, e in enumerate(exps):
                if e:
                    term *= Rational(values[k]) ** e
            total += term
        return total

    def weighted_degrees(self) -> set:
        return {sum((k + 1) * e for k, e in enumerate(exps)) for exps in self.terms}


_cache: Dict[int, SchurPolynomial] = {0: SchurPolynomial(0, {(): Rational(1)})}
_cache_lock = threading.Lock()


def _pad(exps: Exponents, r: int) -> Exponents:
    return exps + (0,) * (r - len(exps))


def schur_poly(r: int) -> SchurPolynomial:
    """p_r via r p_r = sum_{k=1}^r x_k p_{r-k}."""
    if r < 0:
        raise ValueError("r must be non-negative")
    hit = _cache.get(r)
    if hit is not None:
        return hit
    terms: Dict[Exponents, Rational] = {}
    for k in range(1, r + 1):
        for exps, c in schur_poly(r - k).terms.items():
            e = list(_pad(exps, r))
            e[k - 1] += 1
            key = tuple(e)
            terms[key] = terms.get(key, 0) + c / r
    poly = SchurPolynomial(r, {e: c for e, c in terms.items() if c})
    with _cache_lock:
        # idempotent: concurrent writers produce equal values
        return _cache.setdefault(r, poly)


def schur_alternating_eval(x, r: int) -> Rational:
    """p_r(x, -x, x, -x, ...)."""
    x = Rational(x)
    return schur_poly(r)([x if k % 2 == 0 else -x for k in range(r)])


@lru_cache(maxsize=4096)
def schur_creation_terms(lattice: Lattice, h: tuple, r: int) -> Dict[tuple, Rational]:
    """p_r(h(-1), h(-2), ...) as a map from creation tuples to coefficients."""
    out: Dict[tuple, Rational] = {}
    for exps, c in schur_poly(r).terms.items():
        current = {(): Rational(c)}
        for k, e in enumerate(exps):
            for _ in range(e):
                nxt: Dict[tuple, Rational] = {}
                for modes, v in current.items():
                    for j, hj in enumerate(h):
                        if hj:
                            key = merge_modes(modes, ((j, k + 1),))
                            nxt[key] = nxt.get(key, 0) + v * hj
                current = nxt
        for modes, v in current.items():
            if v:
                new = out.get(modes, 0) + v
                if new:
                    out[modes] = new
                else:
                    out.pop(modes, None)
    return out


def schur_state(h: Sequence, r: int, lattice: Lattice, weight: Optional[Weight] = None, label=None) -> State:
    """p_r(h(-1), h(-2), ...) applied to the vacuum (or to v_lambda / iota(label))."""
    lattice.check(h)
    h = tuple(Rational(c) for c in h)
    label = lattice.zero() if label is None else lattice.vector(label)
    acc = {}
    for modes, c in schur_creation_terms(lattice, h, r).items():
        add_term(acc, Monomial(label, modes), c)
    return State(lattice, acc, weight)
