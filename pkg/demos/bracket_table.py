"""Brackets of differential operators with central term, next to the free-field answer.

[J^a(m), J^b(n)] is computed twice: symbolically in the centrally extended
algebra of differential operators at c = -N, and by letting the realized
operators act on a truncated Fock space.
"""

import itertools

from winfinity import DiffOpElement, dhat_bracket, realization_bracket_check

N = 1
for a, b in itertools.product(range(2), repeat=2):
    for m, n in [(1, -1), (2, -1), (0, 2)]:
        br = dhat_bracket(DiffOpElement.J(a, m), DiffOpElement.J(b, n), -N)
        agree = realization_bracket_check(a, m, b, n, N, 3)
        print(f"[J^{a}({m}), J^{b}({n})] = {br}   free fields agree: {agree}")
