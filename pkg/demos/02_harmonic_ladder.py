"""Harmonic decomposition and the raising/lowering ladder on degree-d harmonics."""

from apolarity_lab import parse_poly, X, UVZ
from apolarity_lab.harmonic import (
    check_brackets,
    harmonic_basis_3,
    harmonic_decompose,
    ladder_scalars,
    laplacian,
    so3_uvz,
    so3_y,
)

# Any form splits uniquely into harmonic pieces times powers of the quadric.
f = parse_poly("x1^4 + 2*x1*x2^3 - x3^4", X(3))
print("f =", f)
for j, h in harmonic_decompose(f):
    print(f"  q^{j} * ({h})    Laplacian of the piece: {laplacian(h)}")

print()

# In the coordinates u, z, v the degree-3 harmonics have a closed-form basis.
basis = harmonic_basis_3(3)
for k in range(3, -4, -1):
    print(f"p[3,{k:+d}] = {basis[k]}")

print()

print("bracket relations, y-coordinates:  ", check_brackets(so3_y()))
print("bracket relations, (u, v, z) basis:", check_brackets(so3_uvz()))

# E raises k by one, F lowers it; the scalars below are exact.
d = 3
sc = ladder_scalars(d)
for k in range(d, -d - 1, -1):
    print(f"k={k:+d}:  E p = {sc[('E', k)]} * p[{d},{k + 1}]    F p = {sc[('F', k)]} * p[{d},{k - 1}]")
