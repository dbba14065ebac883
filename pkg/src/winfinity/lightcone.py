"""Weyl fields in light-cone Fock coordinates.

The Heisenberg modes of pair i are traded for gamma_i = alpha_i + beta_i and
delta_i = alpha_i - beta_i.  Both are isotropic and <gamma_i, delta_i> = 2, so

    gamma_i(k) = 2k d/dD_i(k),   delta_i(k) = 2k d/dG_i(k)      (k >= 1)

on polynomials in G_i(k) = gamma_i(-k), D_i(k) = delta_i(-k).  For c = +-gamma_i the
lattice vertex operator Y(iota(c), z) then becomes sparse: E^+(c, z) is the
translation D_i(k) -> D_i(k) -+ 2 z^{-k}, and E^-(c, z) multiplies by a Schur
polynomial in the G_i(k) alone.  This is what makes exhaustive checks of the Weyl
relations affordable.

Light-cone terms are dictionaries ``{Monomial: coeff}`` whose creation pairs are
``(var, k)`` with ``var = 2(i-1)`` for G_i and ``2(i-1) + 1`` for D_i.  Use
``to_lightcone`` / ``from_lightcone`` to move between these and ``State``.
"""

from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterator, List, Tuple

from .fock import Monomial, State, Terms, add_term
from .lattice import Lattice, add
from .scalars import Rational

CACHE_SIZE = 1 << 20


def g_var(i: int) -> int:
    return 2 * (i - 1)


def d_var(i: int) -> int:
    return 2 * (i - 1) + 1


def _expand_product(factors: List[Dict[Tuple[int, int], Rational]]) -> Dict[tuple, Rational]:
    out = {(): Rational(1)}
    for f in factors:
        nxt: Dict[tuple, Rational] = {}
        for modes, c in out.items():
            for key, d in f.items():
                m = tuple(sorted(modes + (key,)))
                nxt[m] = nxt.get(m, 0) + c * d
        out = {m: c for m, c in nxt.items() if c}
    return out


def to_lightcone(w: State) -> Terms:
    """Rewrite a V_L state in the G/D creation basis."""
    if w.weight is not None:
        raise ValueError("light-cone coordinates are used on V_L only")
    N = w.lattice.N
    half = Rational(1, 2)
    out: Terms = {}
    for mono, c in w.terms.items():
        factors = []
        for k, n in mono.modes:
            i = k % N + 1
            sgn = 1 if k < N else -1
            factors.append({(g_var(i), n): half, (d_var(i), n): sgn * half})
        for modes, d in _expand_product(factors).items():
            add_term(out, Monomial(mono.label, modes), c * d)
    return out


def from_lightcone(lattice: Lattice, terms: Terms) -> State:
    """Inverse of ``to_lightcone``: G_i = alpha_i + beta_i, D_i = alpha_i - beta_i."""
    N = lattice.N
    acc: Terms = {}
    for mono, c in terms.items():
        factors = []
        for var, n in mono.modes:
            i = var // 2
            d = -1 if var % 2 else 1
            factors.append({(i, n): Rational(1), (N + i, n): Rational(d)})
        for modes, e in _expand_product(factors).items():
            add_term(acc, Monomial(mono.label, modes), c * e)
    return State(lattice, acc)


def _partitions(r: int, max_part: int = None) -> Iterator[Tuple[int, ...]]:
    if max_part is None:
        max_part = r
    if r == 0:
        yield ()
        return
    for first in range(min(r, max_part), 0, -1):
        for rest in _partitions(r - first, first):
            yield (first,) + rest


# One-pair monomials are packed into an int: the exponent of G(k) (var 0) or D(k)
# (var 1) is the byte at position 2(k - 1) + var.
_BITS = 8
_MAX_EXP = (1 << _BITS) - 1


def _unit(var: int, k: int) -> int:
    return 1 << (_BITS * (2 * (k - 1) + var))


def encode(modes) -> int:
    """Pack one-pair creations ``(var, k)`` into an int."""
    counts: Dict[tuple, int] = {}
    for var, k in modes:
        counts[var, k] = counts.get((var, k), 0) + 1
    if any(e > _MAX_EXP for e in counts.values()):
        raise ValueError("exponent too large for the packed encoding")
    return sum(e * _unit(var, k) for (var, k), e in counts.items())


def _digits(code: int) -> List[Tuple[int, int, int]]:
    """Nonzero exponents as (var, k, e)."""
    out = []
    p = 0
    while code:
        e = code & _MAX_EXP
        if e:
            out.append((p & 1, (p >> 1) + 1, e))
        code >>= _BITS
        p += 1
    return out


def decode(code: int) -> tuple:
    """Inverse of ``encode``: the sorted creation tuple."""
    modes = []
    for var, k, e in _digits(code):
        modes.extend([(var, k)] * e)
    return tuple(sorted(modes))


def _g_exponents(code: int) -> Dict[int, int]:
    return {k: e for var, k, e in _digits(code) if var == 0}


@lru_cache(maxsize=None)
def tau(code: int) -> int:
    """Rescaling between a monomial and the basis vector with divided G-powers.

    The scaled basis vector of a monomial prod G(k)^{a_k} D(k)^{e_k} is
    prod (G(k)/k)^{a_k}/a_k! prod D(k)^{e_k}, i.e. the monomial divided by
    tau = prod k^{a_k} a_k!.  In that basis 2 A(n) and Abar(n) have integer matrices.
    """
    t = 1
    for k, a in _g_exponents(code).items():
        t *= k**a * factorial(a)
    return t


@lru_cache(maxsize=None)
def _creation_poly(sign: int, r: int) -> tuple:
    """Coefficient of z^r in exp(sign * sum_k G(k) z^k / k) in the scaled basis.

    Returns ((code, coeff, multiplicities), ...) with multiplicities ((k, m_k), ...).
    """
    out = []
    for mu in _partitions(r):
        mult: Dict[int, int] = {}
        for k in mu:
            mult[k] = mult.get(k, 0) + 1
        out.append((sum(_unit(0, k) for k in mu), sign ** len(mu), tuple(mult.items())))
    return tuple(out)


@lru_cache(maxsize=CACHE_SIZE)
def _translate(code: int, shift: int) -> tuple:
    """Expand prod_k (D(k) + shift z^{-k})^{e_k}; returns ((s, rest, coeff), ...).

    ``s`` is the total power of z^{-1} and ``rest`` the code of what is left over.
    """
    out = [(0, code, 1)]
    for var, k, e in _digits(code):
        if var != 1:
            continue
        unit = _unit(1, k)
        out = [(s + k * j, rest - j * unit, c * comb(e, j) * shift**j) for s, rest, c in out for j in range(e + 1)]
    return tuple(out)


@lru_cache(maxsize=CACHE_SIZE)
def gamma_local(sign: int, q: int, label: tuple, code: int) -> tuple:
    """iota(sign * gamma)_q on a scaled one-pair basis vector, cocycle sign left out.

    ``label`` is the pair's (alpha, beta) label component; the result label is
    ``label + sign * (1, 1)``.  Coefficients are integers.
    """
    k0 = sign * (label[0] - label[1])
    acc: Dict[int, int] = {}
    get = acc.get
    for s, rest, coef in _translate(code, -2 * sign):
        r = -q - 1 - k0 + s
        if r < 0:
            continue
        own = _g_exponents(rest)
        for cre, d, mult in _creation_poly(sign, r):
            # product of divided powers: (G/k)^(a)/a! (G/k)^(m)/m! = C(a+m, m) (G/k)^(a+m)/(a+m)!
            for k, m in mult:
                a = own.get(k)
                if a:
                    d *= comb(a + m, m)
            key = rest + cre
            acc[key] = get(key, 0) + coef * d
    return tuple((m, c) for m, c in acc.items() if c)


def field_scale(starred: bool) -> int:
    """``weyl_local`` returns 2 A(n) and Abar(n), keeping everything integral."""
    return 1 if starred else 2


@lru_cache(maxsize=CACHE_SIZE)
def weyl_local(starred: bool, n: int, label: tuple, code: int) -> tuple:
    """2 A(n) or Abar(n) of one pair on a scaled one-pair basis vector, cocycle sign left out."""
    if starred:
        return gamma_local(-1, n - 1, label, code)
    digits = _digits(code)
    if sum(k * e for _, k, e in digits) > _MAX_EXP // 2:
        raise ValueError("state degree too large for the packed encoding")
    acc: Dict[int, int] = {}
    get = acc.get
    # creation half: sum_{q >= 1} 2 alpha(-q) iota(gamma)_{n-1+q}, 2 alpha(-q) = G(q) + D(q)
    k0 = label[0] - label[1]
    qmax = sum(k * e for var, k, e in digits if var == 1) - k0 - n
    for q in range(1, qmax + 1):
        gu, du = _unit(0, q), _unit(1, q)
        shift = _BITS * 2 * (q - 1)
        for mono, c in gamma_local(1, n - 1 + q, label, code):
            key = mono + gu
            acc[key] = get(key, 0) + c * q * (((mono >> shift) & _MAX_EXP) + 1)
            key = mono + du
            acc[key] = get(key, 0) + c
    # annihilation half: sum_{p >= 0} 2 iota(gamma)_{n-1-p} alpha(p)
    if label[0]:
        for mono, c in gamma_local(1, n - 1, label, code):
            acc[mono] = get(mono, 0) + 2 * label[0] * c
    for var, p, e in digits:
        # alpha(p) lowers a divided G(p) power with coefficient 1, and D(p)^e with p e
        f = 2 if var == 0 else 2 * p * e
        for mono, c in gamma_local(1, n - 1 - p, label, code - _unit(var, p)):
            acc[mono] = get(mono, 0) + f * c
    return tuple((m, c) for m, c in acc.items() if c)


def _split(w: Monomial, i: int, N: int):
    """Pair-i local label and modes of a light-cone monomial, plus the other creations."""
    gv, dv = g_var(i), d_var(i)
    local = encode((v - gv, k) for v, k in w.modes if v in (gv, dv))
    others = tuple(p for p in w.modes if p[0] not in (gv, dv))
    return (w.label[i - 1], w.label[N + i - 1]), local, others


def _shift(lattice: Lattice, i: int, sign: int) -> tuple:
    return tuple(sign * x for x in lattice.gamma(i))


@lru_cache(maxsize=CACHE_SIZE)
def weyl_mono(lattice: Lattice, i: int, starred: bool, n: int, w: Monomial) -> tuple:
    """A^i(n) or Abar^i(n) on one light-cone monomial."""
    N = lattice.N
    c = _shift(lattice, i, -1 if starred else 1)
    eps = lattice.epsilon(c, w.label)
    label = add(c, w.label)
    local_label, local, others = _split(w, i, N)
    gv = g_var(i)
    out = []
    scale = Rational(eps * tau(local), field_scale(starred))
    for code, coef in weyl_local(starred, n, local_label, local):
        lifted = tuple((v + gv, k) for v, k in decode(code))
        out.append((Monomial(label, tuple(sorted(others + lifted))), scale * coef / tau(code)))
    return tuple(out)


def weyl_apply(lattice: Lattice, i: int, starred: bool, n: int, terms: Terms) -> Terms:
    """Apply A^i(n) (or Abar^i(n)) to light-cone terms."""
    acc: Terms = {}
    for w, c in terms.items():
        for mono, d in weyl_mono(lattice, i, starred, n, w):
            add_term(acc, mono, c * d)
    return acc


def lightcone_basis(lattice: Lattice, labels, max_degree) -> List[Monomial]:
    """Light-cone monomials with the given labels and L_0 degree <= max_degree."""
    from .dhat import _colored_partitions

    out = []
    colors = 2 * lattice.N
    for label in labels:
        budget = max_degree - Rational(lattice.norm(label), 2)
        d = 0
        while d <= budget:
            for modes in _colored_partitions(d, colors):
                out.append(Monomial(tuple(label), tuple(sorted(modes))))
            d += 1
    return out


def clear_caches() -> None:
    gamma_local.cache_clear()
    _creation_poly.cache_clear()
    tau.cache_clear()
    weyl_local.cache_clear()
    weyl_mono.cache_clear()
    _translate.cache_clear()


# exhaustive check of the Weyl relations


def _apply_local(starred: bool, n: int, label: tuple, terms: tuple) -> Dict[int, int]:
    acc: Dict[int, int] = {}
    get = acc.get
    for w, c in terms:
        for mono, d in weyl_local(starred, n, label, w):
            acc[mono] = get(mono, 0) + c * d
    return {m: c for m, c in acc.items() if c}


def _label_after(label: tuple, starred: bool) -> tuple:
    step = -1 if starred else 1
    return (label[0] + step, label[1] + step)


@lru_cache(maxsize=CACHE_SIZE)
def local_bracket(x: tuple, y: tuple, label: tuple, modes: int) -> tuple:
    """X Y w - Y X w for two modes of the same pair on a packed one-pair monomial, signs left out.

    ``x`` and ``y`` are ``(starred, n)``.
    """
    xy = _apply_local(x[0], x[1], _label_after(label, y[0]), weyl_local(y[0], y[1], label, modes))
    yx = _apply_local(y[0], y[1], _label_after(label, x[0]), weyl_local(x[0], x[1], label, modes))
    for m, c in yx.items():
        xy[m] = xy.get(m, 0) - c
    return tuple(sorted((m, c) for m, c in xy.items() if c))


def _signed_local_bracket(x, y, label, modes, s_xy, s_yx) -> tuple:
    xy = _apply_local(x[0], x[1], _label_after(label, y[0]), weyl_local(y[0], y[1], label, modes))
    yx = _apply_local(y[0], y[1], _label_after(label, x[0]), weyl_local(x[0], x[1], label, modes))
    acc = {m: s_xy * c for m, c in xy.items()}
    for m, c in yx.items():
        acc[m] = acc.get(m, 0) - s_yx * c
    return tuple(sorted((m, c) for m, c in acc.items() if c))


def expected_bracket(x: Tuple[int, bool, int], y: Tuple[int, bool, int]) -> int:
    """Scalar c with [X, Y] = c id: [Abar^i(n), A^j(m)] = delta_ij delta_{m+n,0}."""
    (i, sx, nx), (j, sy, ny) = x, y
    if i != j or sx == sy or nx + ny:
        return 0
    return 1 if sx else -1


class WeylSweepResult:
    __slots__ = ("states", "brackets", "failures")

    def __init__(self):
        self.states = 0
        self.brackets = 0
        self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures

    def __repr__(self) -> str:
        return f"WeylSweepResult(states={self.states}, brackets={self.brackets}, failures={len(self.failures)})"


def weyl_relation_sweep(lattice: Lattice, labels, max_degree, max_mode: int, max_failures: int = 20) -> WeylSweepResult:
    """Check every bracket of A^i(n), Abar^i(n), |n| <= max_mode, on every light-cone
    basis state with a label from ``labels`` and L_0 degree <= max_degree.

    A basis state is a tensor product over the pairs, and a pair-i mode only
    rewrites the pair-i factor (times a cocycle sign), so X Y w and Y X w are
    computed as tensors.  For modes of different pairs both are
    s (X w_i) (x) (Y w_j) (x) rest with signs s_xy, s_yx, so the bracket vanishes
    exactly when a factor does or the signs agree.  Modes of the same pair reduce
    to a one-pair computation on the pair-i factor.  The signs only depend on the
    label and on which fields are involved, so they are computed once per state.
    """
    N = lattice.N
    modes_range = range(-max_mode, max_mode + 1)
    kinds = [(i, s) for i in range(1, N + 1) for s in (False, True)]
    shifts = {(i, s): _shift(lattice, i, -1 if s else 1) for i, s in kinds}
    result = WeylSweepResult()

    def fail(entry):
        result.failures.append(entry)
        return len(result.failures) >= max_failures

    for w in lightcone_basis(lattice, labels, max_degree):
        result.states += 1
        b = w.label
        locs = {i: _split(w, i, N)[:2] for i in range(1, N + 1)}
        eps = {k: lattice.epsilon(c, b) for k, c in shifts.items()}
        for ka in range(len(kinds)):
            for kb in range(ka, len(kinds)):
                kx, ky = kinds[ka], kinds[kb]
                cx, cy = shifts[kx], shifts[ky]
                s_xy = eps[ky] * lattice.epsilon(cx, add(b, cy))
                s_yx = eps[kx] * lattice.epsilon(cy, add(b, cx))
                pairs = [(nx, ny) for nx in modes_range for ny in modes_range if ka != kb or nx < ny]
                result.brackets += len(pairs)
                if kx[0] != ky[0]:
                    if s_xy == s_yx:
                        continue
                    lx, mx = locs[kx[0]]
                    ly, my = locs[ky[0]]
                    for nx, ny in pairs:
                        if weyl_local(kx[1], nx, lx, mx) and weyl_local(ky[1], ny, ly, my):
                            if fail((w, kx + (nx,), ky + (ny,), "cross-pair signs differ")):
                                return result
                    continue
                label, code = locs[kx[0]]
                for nx, ny in pairs:
                    x, y = kx + (nx,), ky + (ny,)
                    e = expected_bracket(x, y)
                    if s_xy == s_yx:
                        diff = local_bracket(x[1:], y[1:], label, code)
                        got = diff if s_xy == 1 else tuple((m, -c) for m, c in diff)
                    else:
                        got = _signed_local_bracket(x[1:], y[1:], label, code, s_xy, s_yx)
                    want = ((code, e * field_scale(kx[1]) * field_scale(ky[1])),) if e else ()
                    if got != want and fail((w, x, y, got)):
                        return result
    return result
