"""
The quantum 2x2 matrices from matrix coefficients
=================================================

a, b, c, d are the matrix coefficients of the vector representation of
U_q(gl_2).  Their products are computed by decomposing tensor products, so
the familiar commutation relations come out of the computation rather than
being imposed.
"""

from qpeterweyl import frt_relations, generators_m2
from qpeterweyl.ofun import comultiply, format_generators

g = generators_m2()
a, b, c, d = g["a"], g["b"], g["c"], g["d"]

# ad is a combination of two diagonal matrix coefficients: one on the
# symmetric square (3-dimensional) and one on the determinant line.
print("a*d =", a * d)
print("d*a =", d * a)

# the difference is a multiple of bc
print("a*d - d*a =", format_generators(a * d - d * a))
print("b*a in normal order:", format_generators(b * a))

# R X1 X2 = X2 X1 R, reduced to a basis of relations
for line in frt_relations(2).lines():
    print(line)

# at q = 1 everything commutes
for line in frt_relations(2).lines(at_one=True):
    print(line)

# comultiplication is matrix-unit comultiplication
print("Delta(a) =", comultiply(a))
print("Delta(a^2) has", len(comultiply(a * a).terms), "terms")
