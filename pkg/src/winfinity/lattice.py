"""The rank-2N lattice spanned by alpha_i, beta_i and its sign cocycle.

Vectors are plain integer tuples of length 2N in the ordered basis
(alpha_1, ..., alpha_N, beta_1, ..., beta_N).  The Gram form is diagonal:
<alpha_i, alpha_j> = delta_ij, <beta_i, beta_j> = -delta_ij.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

LatticeVector = Tuple[int, ...]


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Lattice:
    """Lattice configuration; ``N`` is the number of (alpha, beta) pairs."""

    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N!r}")

    @property
    def rank(self) -> int:
        return 2 * self.N

    def sign(self, k: int) -> int:
        """Norm <b_k, b_k> of the k-th basis vector (0-based)."""
        return 1 if k < self.N else -1

    @cached_property
    def signs(self) -> tuple:
        return tuple(self.sign(k) for k in range(self.rank))

    # named vectors, 1-based like alpha_1 .. alpha_N
    def zero(self) -> LatticeVector:
        return (0,) * self.rank

    def basis(self, k: int) -> LatticeVector:
        v = [0] * self.rank
        v[k] = 1
        return tuple(v)

    def alpha(self, i: int) -> LatticeVector:
        self._check_index(i)
        return self.basis(i - 1)

    def beta(self, i: int) -> LatticeVector:
        self._check_index(i)
        return self.basis(self.N + i - 1)

    def gamma(self, i: int) -> LatticeVector:
        """gamma_i = alpha_i + beta_i, an isotropic vector."""
        return add(self.alpha(i), self.beta(i))

    def _check_index(self, i: int):
        if not 1 <= i <= self.N:
            raise IndexError(f"pair index {i} outside 1..{self.N}")

    def vector(self, coords: Sequence[int]) -> LatticeVector:
        v = tuple(int(c) for c in coords)
        self.check(v)
        return v

    def check(self, x: Sequence) -> None:
        if len(x) != self.rank:
            raise DimensionError(f"expected length {self.rank}, got {len(x)}")

    # bilinear data
    def pairing(self, x: Sequence, y: Sequence):
        self.check(x)
        self.check(y)
        N = self.N
        return sum(a * b for a, b in zip(x[:N], y[:N])) - sum(a * b for a, b in zip(x[N:], y[N:]))

    def norm(self, x: Sequence):
        return self.pairing(x, x)

    def parity(self, x: LatticeVector) -> int:
        """Z/2 grading of iota(x): the norm mod 2."""
        return self.norm(x) % 2

    @cached_property
    def cocycle_matrix(self) -> tuple:
        """Integer matrix B with epsilon(x, y) = (-1)^(x^T B y).

        Ordering the basis as (beta_1, alpha_1, beta_2, alpha_2, ...), B has ones
        strictly above the diagonal plus a one at each (alpha_i, alpha_i).  Then
        B + B^T = J - I mod 2, which gives the super commutator sign
        (-1)^(<x,y> + <x,x><y,y>), B vanishes mod 2 on the span of the gamma_i,
        and epsilon(alpha_i, beta_i) = 1.
        """
        N = self.N
        pos = [2 * k + 1 for k in range(N)] + [2 * k for k in range(N)]
        B = [[1 if pos[r] < pos[c] else 0 for c in range(self.rank)] for r in range(self.rank)]
        for k in range(N):
            B[k][k] = 1
        return tuple(tuple(row) for row in B)

    def cocycle_exponent(self, x: Sequence[int], y: Sequence[int]) -> int:
        self.check(x)
        self.check(y)
        B = self.cocycle_matrix
        return sum(x[r] * B[r][c] * y[c] for r in range(self.rank) if x[r] for c in range(self.rank) if y[c])

    def epsilon(self, x: Sequence[int], y: Sequence[int]) -> int:
        """The sign epsilon(x, y) = +-1 of the central extension."""
        return -1 if self.cocycle_exponent(x, y) % 2 else 1


def add(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Sequence) -> tuple:
    return tuple(-a for a in x)


def scale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def is_zero(x: Sequence) -> bool:
    return not any(x)
