"""A beta-gamma system inside a lattice vertex superalgebra.

Builds the fields A^i and Abar^i from lattice vectors gamma_i = alpha_i + beta_i
and checks a few Weyl relations by acting on concrete states.
"""

from winfinity import A, Abar, Lattice, State, mode
from winfinity.weylw import e_state, f_state

L = Lattice(2)
vac = State.vacuum(L)
e1, f1 = e_state(L, 1), f_state(L, 1)

print("e^1 =", e1)
print("f^1 =", f1)

# Abar^1(n) is the mode f^1_{n-1}; on the vacuum only n <= 0 survives
for n in (-2, -1, 0, 1):
    print(f"Abar^1({n}) |0> =", Abar(1, n, vac))

# A^1(-1) Abar^1(0) |0> and the other order differ by the commutator
w = Abar(1, 0, vac)
print("A^1(0) f^1 =", A(1, 0, w))

# [Abar^i(n), A^j(m)] = delta_ij delta_{m+n,0}, tested on a random-looking state
state = State.monomial(L, label=(1, 0, -1, 1), creations=[(0, 1), (3, 2)])
for i, j, n, m in [(1, 1, 1, -1), (1, 1, 2, -1), (1, 2, 1, -1), (2, 2, -3, 3)]:
    bracket = Abar(i, n, A(j, m, state)) - A(j, m, Abar(i, n, state))
    expected = state if (i == j and m + n == 0) else State(L)
    print(f"[Abar^{i}({n}), A^{j}({m})] ok:", bracket == expected)

# lattice operators compose through the cocycle
print("e^1_{-1} f^1 =", mode(e1, -1, f1))
