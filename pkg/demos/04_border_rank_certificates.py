"""Certificates for the border rank of q_3^s, and the formula for any ternary quadratic."""

from apolarity_lab import parse_poly, X
from apolarity_lab.certify import certify_border_rank_q3, classify_ternary_quadratic, verify_certificate

for s in range(1, 7):
    cert = certify_border_rank_q3(s)
    total = sum(cert.timings_ms.values())
    print(f"s={s}: brk(q_3^{s}) = {cert.conclusion:2d}   "
          f"[lower {cert.lower_bound}, upper {cert.upper_bound}, {total:.1f} ms]")

cert = certify_border_rank_q3(2)
print("\nchecks recorded for s=2:")
for key, value in cert.checks.items():
    print(f"  {key}: {value}")
print("\ncited, not machine-checked:")
for t in cert.assumed_theorems:
    print("  -", t)
print("\nre-verified from its own data:", verify_certificate(cert.to_dict()))

print()
for text in ("x1^2", "x1^2 + x2^2", "x1*x2 + x3^2", "(x1 - x2)^2 + (x2 - x3)^2"):
    c = classify_ternary_quadratic(parse_poly(text, X(3)))
    print(f"g = {text:<26} rank {c.matrix_rank}, brk(g^s) = {c.brk_formula_text:<13}"
          f" s=1..5: {[c.brk_formula(s) for s in range(1, 6)]}")
