"""
Bialgebra axioms and the classical limit
========================================

Every check here is an exact identity in Q(q).
"""

import time

from qpeterweyl import SL2, IrrepLabel, gl, specialize_q1, structure_constants, verify_hopf

start = time.perf_counter()
report = verify_hopf(SL2, 2, sample_count=10, seed=1)
print(report.summary())
print(f"({time.perf_counter() - start:.1f}s)")

# structure constants of gl_2 at q = 1 agree with the undeformed computation
lam = IrrepLabel.of(gl(2), 1, 0)
mu = IrrepLabel.of(gl(2), 1, 1)
quantum = specialize_q1(structure_constants(lam, mu))
classical = specialize_q1(
    structure_constants(IrrepLabel(gl(2, classical=True), lam.hw), IrrepLabel(gl(2, classical=True), mu.hw))
)
print("q=1 tables agree:", quantum == classical)
for key, val in sorted(quantum.items())[:4]:
    print(key, val)
