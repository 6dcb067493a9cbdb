"""The ideal I_d = (p_{d,d}, ..., p_{d,0}): Gröbner basis, leading ideal, saturation, Hilbert function."""

from math import comb

from apolarity_lab.certify import build_ideal_I
from apolarity_lab.groebner import (
    buchberger_colon_check,
    eventual_hilbert_constant,
    hilbert_function,
    leading_ideal,
    monomial_saturation,
)
from apolarity_lab.polynomial import UVZ

d = 4
P = build_ideal_I(d)
print("generators (lex order z > u > v):")
for g in P.groebner_basis:
    print("  ", g)

# Colon criterion: each step only needs z * p_{d,k} to reduce to zero.
w = buchberger_colon_check(P.groebner_basis)
print("\nGröbner basis:", w.ok)
for step in w.to_dict(UVZ)["steps"]:
    red = step["reductions"][0]
    chain = " + ".join(f"({c['coefficient']}) {c['times']}*g{c['g']}" for c in red["chain"])
    print(f"  j={step['j']}: colon ideal {step['colon_generators']}, {red['multiplier']}*g{step['j']} = {chain}")

J = leading_ideal(P.groebner_basis)
P.leading_ideal = J
print("\nleading ideal:", J)
sat = monomial_saturation(J)
print(f"saturated: {sat.saturated} (fixed point after {sat.iterations} colon step)")

# The Hilbert function is computed twice (rank count and standard monomials) and must agree.
s = d - 1
r = comb(s + 2, 2)
print(f"\nHF(I_{d}) for a = 0..{2 * s + 4}:", [hilbert_function(P, a) for a in range(2 * s + 5)])
print(f"generic {r} points:       ", [min(comb(a + 2, 2), r) for a in range(2 * s + 5)])
count, start, var = eventual_hilbert_constant(J)
print(f"standard monomials are m * {var}^e with {count} choices of m, so HF = {count} for all a >= {start}")
