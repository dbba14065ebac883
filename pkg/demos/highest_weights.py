"""Highest weights of W_{1+inf,-N} modules coming from the free-field realization.

For a weight lambda (given by its pairings with alpha_i and beta_i) the vector
v_lambda of M(1, lambda) is a highest weight vector. J^k(0) acts on it by a
scalar; this script measures those scalars with the vertex-operator engine
and compares them with the closed form, then prints the generating series
Delta(x) and its exponential decomposition.
"""

from fractions import Fraction

from winfinity import Weight, delta_closed_form, delta_series, format_rational, hw_eigenvalue, quasifinite_decompose
from winfinity.dhat import measured_j_eigenvalues

weight = Weight(alpha=(Fraction(1, 2), 0), beta=(1, -3))
print("N =", weight.N, " s =", [format_rational(s) for s in weight.s], " t =", [format_rational(t) for t in weight.t])

measured = measured_j_eigenvalues(weight, 5)
for k, got in enumerate(measured):
    print(f"J^{k}(0) v = {format_rational(got):>8}   closed form {format_rational(hw_eigenvalue(k, weight))}")

order = 6
print("Delta(x) from J eigenvalues:", [format_rational(c) for c in delta_series(weight, order).coeffs])
print("Delta(x) closed form:       ", [format_rational(c) for c in delta_closed_form(weight, order).coeffs])

dec = quasifinite_decompose(weight)
print("central charge", format_rational(dec.central_charge))
for r, poly in dec.terms:
    print(f"  exponent {format_rational(r):>4}  multiplicity {[format_rational(p) for p in poly]}")
print("sum of multiplicities at 0:", format_rational(dec.multiplicity_sum_at_zero()))
