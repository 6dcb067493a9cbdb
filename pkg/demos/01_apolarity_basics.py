"""Contraction, catalecticants and the apolar ideal of a power of the quadric."""

from apolarity_lab import parse_poly, quadric, X, Y
from apolarity_lab.apolarity import apolar_component, catalecticant, contract, sylvester_lower_bound
from apolarity_lab.certify import apolar_ideal_theorem_report

rule = "-" * 60

# Dual variables act as divided differential operators: y1 o x1^3 = 3 x1^2.
f = parse_poly("x1^3 + x1*x2*x3", X(3))
print("f =", f)
for text in ("y1", "y1^2", "y2*y3", "y1*y2*y3"):
    print(f"  {text:>9} o f = {contract(parse_poly(text, Y(3)), f)}")

print(rule)

# The middle catalecticant of q_3^s has full rank, which lower-bounds the border rank.
for s in range(1, 5):
    g = quadric(X(3)) ** s
    cat = catalecticant(g, s)
    print(f"s={s}: Cat^{s}(q_3^{s}) is {cat.matrix.rows}x{cat.matrix.cols}, rank {cat.rank};"
          f" best catalecticant bound {sylvester_lower_bound(g)}")

print(rule)

# Nothing of degree <= s kills q_3^s; in degree s+1 the annihilators are exactly the harmonics.
s = 2
g = quadric(X(3)) ** s
for m in range(2 * s + 2):
    print(f"dim (q_3^{s})^perp in degree {m}: {apolar_component(g, m).dim}")

print("\nEvery degree of the apolar ideal agrees with the ideal generated by degree-3 harmonics:")
rep = apolar_ideal_theorem_report(3, s)
for row in rep.degrees:
    print(f"  m={row['m']}: {row['apolar_dim']:3d} vs {row['ideal_dim']:3d}  {'ok' if row['equal'] else 'MISMATCH'}")
