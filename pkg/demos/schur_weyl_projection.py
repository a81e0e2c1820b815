"""
Schur-Weyl duality and the projection pi
========================================

Functionals on U_q(gl_k) of degree n live in (V*)^n (x) V^n.  Many of them
define the same function; pi picks the equivariant representative.
"""

from qpeterweyl import ONE, Q, QINV, ZERO, QMatrix
from qpeterweyl.exactmath import inverse, rank
from qpeterweyl.schurweyl import (
    FunctionalElement,
    check_hecke,
    pi_matrix,
    project_pi,
    q_involution,
    schur_weyl_decompose,
    to_pw,
)

for k, n in [(2, 2), (2, 3), (2, 4), (3, 3)]:
    D = schur_weyl_decompose(k, n)
    print(f"gl{k}, n={n}:", D.summary(), check_hecke(k, n))

# weight zero vectors of V (x) V, in the basis e1e1, e1e2, e2e1, e2e2
s = [ZERO, Q, ONE, ZERO]
t = [ZERO, -QINV, ONE, ZERO]
Mi = inverse(QMatrix([[Q, -QINV], [ONE, ONE]]))
s_dual = [ZERO, Mi[0, 0], Mi[0, 1], ZERO]
t_dual = [ZERO, Mi[1, 0], Mi[1, 1], ZERO]

D = schur_weyl_decompose(2, 2)
mixed = FunctionalElement.pure(2, s_dual, t, 2)
print("pi(s* t) is zero:", project_pi(D, mixed).is_zero())

ss = FunctionalElement.pure(2, s_dual, s, 2)
print("s* s as a Peter-Weyl element:", to_pw(D, ss))

# for n = 2, pi is the average of 1 and the involution Q
Qm = q_involution(2)
P = pi_matrix(2, 2)
print("pi == (1+Q)/2:", P == (QMatrix.identity(16) + Qm.T.kron(Qm)).scale(ONE / 2))
print("rank of pi:", rank(P))
