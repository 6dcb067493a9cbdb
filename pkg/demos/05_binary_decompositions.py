"""Minimal decompositions of (x1^2 + x2^2)^s by s+1 powers of linear forms."""

import math

from apolarity_lab import quadric, X
from apolarity_lab.apolarity import contract
from apolarity_lab.certify import decompose_q2, q2_apolar_generator

# u^(s+1) - v^(s+1) annihilates q_2^s exactly; its roots give the decomposition.
for s in (3, 4):
    g = q2_apolar_generator(s)
    print(f"s={s}: generator {g}")
    print(f"      contraction with q_2^{s}: {contract(g, quadric(X(2)) ** s)}")

print()
for s in range(1, 7):
    dec = decompose_q2(s)
    # real points when theta = k = 0
    angles = [math.degrees(math.atan2(b, a)) % 180 for a, b in dec.points]
    print(f"s={s}: {len(dec.points)} points on a circle of radius {2 * dec.radius:.6f}, "
          f"angles {[round(t, 3) for t in angles]}, residual {dec.residual:.1e}")

# A complex shift k moves the points off the real circle but keeps the identity.
dec = decompose_q2(3, theta=0.4, k=0.25)
print("\ntheta=0.4, k=0.25:")
for a, b in dec.points:
    print(f"  ({complex(a):.4f}, {complex(b):.4f})")
print(f"  residual {dec.residual:.1e}")
