"""Exact free-field computations for the vertex algebra W_{1+inf,-N}.

The algebra is realized inside the lattice vertex superalgebra V_L of
L = sum_i (Z alpha_i + Z beta_i), <alpha_i, alpha_i> = 1 = -<beta_i, beta_i>,
through a Weyl (beta-gamma) system.  All arithmetic is exact.
"""

from .dhat import (
    DiffOpElement,
    QuasifiniteDecomposition,
    WeightSeries,
    delta_closed_form,
    delta_series,
    dhat_bracket,
    j_to_l,
    psi,
    quasifinite_decompose,
    realization_bracket_check,
    weight_components,
)
from .fock import Monomial, State, Weight, apply_mode, l0_degree, lattice_multiply
from .lattice import DimensionError, Lattice
from .scalars import Rational, as_rational, falling_factorial_coeffs, format_rational, gen_binomial
from .schur import SchurPolynomial, schur_alternating_eval, schur_poly, schur_state
from .series import PowerSeries
from .vertexop import ModuleMismatch, commutator_residual, lattice_mode, mode, nop, virasoro_mode
from .weylw import (
    A,
    Abar,
    InternalInconsistency,
    WeylIndex,
    WGenerator,
    build_U,
    hw_eigenvalue,
    j_mode,
    w_generator,
    weyl_mode,
)

__version__ = "0.1.0"
