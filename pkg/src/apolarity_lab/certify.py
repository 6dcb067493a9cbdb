"""Border-rank certificates for powers of ternary quadratic forms."""

from __future__ import annotations

import cmath
import json
import math
import time
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .apolarity import apolar_component, catalecticant, contract
from .groebner import (
    GradedIdealPresentation,
    MonomialIdeal,
    buchberger_colon_check,
    eventual_hilbert_constant,
    hilbert_function,
    lex_leading_term,
    monomial_saturation,
)
from .harmonic import harmonic_basis, harmonic_basis_3, laplacian
from .linalg import EchelonSpace, ExactMatrix, exact_rank
from .parser import parse_poly
from .polynomial import UVZ, X, Y, Poly, change_frame, monomials, quadric, uvz_to_y
from .scalars import GaussianRational

ASSUMED_THEOREMS = [
    "Border apolarity for the Veronese variety: brk f <= r iff some ideal in Slip_{r,n} is contained in f^perp.",
    "If Hilb_r(P^n) is irreducible, every saturated ideal with Hilbert function h_{r,n} lies in Slip_{r,n}.",
    "Hilb_r(P^2) is smooth and irreducible.",
    "For a homogeneous ideal I and a monomial order, LT(I) saturated implies I saturated.",
    "Catalecticant bound: brk f >= rank Cat_f^j for every j.",
]

CERTIFICATE_NOTES = [
    "Upper bound direction: an ideal of Slip_{r,3} inside f^perp gives brk f <= r.",
    "Generators are p_{s+1,k}, k = s+1..0, in u, z, v with u = (y1 + i y2)/2, v = (y1 - i y2)/2, z = y3.",
    "Hilbert function values hold for all a >= stable_from by the standard-monomial count of the leading ideal.",
]


class CertificationError(RuntimeError):
    """A check failed; ``step`` names it and ``witness`` holds the evidence."""

    def __init__(self, step: str, witness):
        self.step = step
        self.witness = witness
        super().__init__(f"certification failed at step {step!r}: {witness}")


def build_ideal_I(d: int) -> GradedIdealPresentation:
    """I_d = (p_{d,d}, ..., p_{d,0}).

    ``generators`` keeps that order; ``groebner_basis`` lists the same
    elements by descending z-degree of the leading term (p_{d,0} first),
    the order used by the colon criterion.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    gens = list(harmonic_basis_3(d).nonnegative())
    return GradedIdealPresentation(gens, list(reversed(gens)))


def fat_line_ideal(d: int) -> MonomialIdeal:
    """J_d: all degree-d monomials in z and u."""
    return MonomialIdeal(UVZ, [(d - j, j, 0) for j in range(d + 1)])


@dataclass
class BorderRankCertificate:
    s: int
    r: int
    generators: list
    checks: dict
    conclusion: int | None
    lower_bound: int
    upper_bound: int
    assumed_theorems: list = field(default_factory=lambda: list(ASSUMED_THEOREMS))
    notes: list = field(default_factory=lambda: list(CERTIFICATE_NOTES))
    timings_ms: dict = field(default_factory=dict)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "s": self.s,
            "r": self.r,
            "generators": [str(g) for g in self.generators],
            "generator_count": self.generator_count,
            "checks": self.checks,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "assumed_theorems": self.assumed_theorems,
            "notes": self.notes,
            "conclusion": self.conclusion,
        }
        if timings:
            out["timings_ms"] = self.timings_ms
        return out

    def to_json(self, timings: bool = True, indent: int = 2) -> str:
        return json.dumps(self.to_dict(timings), indent=indent)


def _to_y(p: Poly) -> Poly:
    return change_frame(p, Y(3), uvz_to_y())


def certify_border_rank_q3(s: int, hilbert_window: int | None = None) -> BorderRankCertificate:
    """Run every check behind brk(q_3^s) = C(s+2, 2); raise on the first failure."""
    if s < 1:
        raise ValueError("s must be >= 1")
    d = s + 1
    r = comb(s + 2, 2)
    window = 2 * s + 4 if hilbert_window is None else hilbert_window
    timings = {}
    checks = {}
    P = build_ideal_I(d)
    f = quadric(X(3)) ** s

    # 1. I_{s+1} inside (q_3^s)^perp, and every generator harmonic
    t0 = time.perf_counter()
    membership, harmonic = [], []
    for g in P.generators:
        gy = _to_y(g)
        membership.append(contract(gy, f).is_zero())
        harmonic.append(laplacian(g).is_zero() and laplacian(gy).is_zero())
    checks["apolar_membership"] = membership
    checks["generators_harmonic"] = harmonic
    timings["apolar_membership"] = _ms(t0)
    if not all(membership):
        raise CertificationError("apolar_membership", membership)
    if not all(harmonic):
        raise CertificationError("generators_harmonic", harmonic)

    # 2. Gröbner basis by the colon criterion
    t0 = time.perf_counter()
    witness = buchberger_colon_check(P.groebner_basis)
    checks["groebner_ok"] = witness.ok
    checks["groebner_colon_generators"] = [
        [_mono(a) for a in st.colon_generators] for st in witness.steps
    ]
    timings["groebner"] = _ms(t0)
    if not witness.ok:
        raise CertificationError("groebner", witness.to_dict(UVZ, P.groebner_basis))

    # 3. leading ideal is J_{s+1}
    t0 = time.perf_counter()
    lt = MonomialIdeal(UVZ, [lex_leading_term(g)[0] for g in P.groebner_basis])
    P.leading_ideal = lt
    target = fat_line_ideal(d)
    checks["leading_ideal"] = lt.to_strings()
    checks["leading_ideal_equals_Jd"] = lt == target
    timings["leading_ideal"] = _ms(t0)
    if lt != target:
        raise CertificationError("leading_ideal", lt.to_strings())

    # 4. J_{s+1} saturated, hence I_{s+1} saturated
    t0 = time.perf_counter()
    sat = monomial_saturation(lt)
    checks["saturated"] = sat.saturated
    checks["saturation_iterations"] = sat.iterations
    timings["saturation"] = _ms(t0)
    if not sat.saturated:
        raise CertificationError("saturation", sat.ideal.to_strings())

    # 5. Hilbert function equals h_{r,3} on the window, and stays constant beyond
    t0 = time.perf_counter()
    values = [hilbert_function(P, a) for a in range(window + 1)]
    expected = [min(comb(a + 2, 2), r) for a in range(window + 1)]
    closed = eventual_hilbert_constant(lt)
    stable_value, stable_from = (closed[0], closed[1]) if closed else (None, None)
    hf_ok = values == expected and stable_value == r and stable_from is not None and stable_from <= s
    checks["hilbert_matches_h_r"] = {
        "ok": hf_ok,
        "window": [0, window],
        "values": values,
        "stable_value": stable_value,
        "stable_from": stable_from,
    }
    timings["hilbert"] = _ms(t0)
    if not hf_ok:
        raise CertificationError("hilbert_function", checks["hilbert_matches_h_r"])

    # 6. lower bound from the middle catalecticant
    t0 = time.perf_counter()
    cat_rank = catalecticant(f, s).rank
    checks["catalecticant_rank"] = cat_rank
    timings["catalecticant"] = _ms(t0)
    if cat_rank != r:
        raise CertificationError("catalecticant", cat_rank)

    return BorderRankCertificate(
        s=s, r=r, generators=P.generators, checks=checks, conclusion=r,
        lower_bound=cat_rank, upper_bound=r, timings_ms=timings,
    )


def verify_certificate(data: dict) -> bool:
    """Recompute every recorded boolean from the certificate's own data."""
    s = data["s"]
    r = data["r"]
    f = quadric(X(3)) ** s
    gens = [parse_poly(t, UVZ) for t in data["generators"]]
    checks = data["checks"]
    membership = [contract(_to_y(g), f).is_zero() for g in gens]
    harmonic = [laplacian(g).is_zero() and laplacian(_to_y(g)).is_zero() for g in gens]
    ordered = sorted(gens, key=lambda g: lex_leading_term(g)[0], reverse=True)
    gb_ok = buchberger_colon_check(ordered).ok
    lt = MonomialIdeal(UVZ, [lex_leading_term(g)[0] for g in ordered])
    P = GradedIdealPresentation(gens, ordered, lt)
    lo, hi = checks["hilbert_matches_h_r"]["window"]
    values = [hilbert_function(P, a) for a in range(lo, hi + 1)]
    closed = eventual_hilbert_constant(lt)
    recomputed = {
        "apolar_membership": membership,
        "generators_harmonic": harmonic,
        "groebner_ok": gb_ok,
        "leading_ideal_equals_Jd": lt == fat_line_ideal(s + 1),
        "saturated": monomial_saturation(lt).saturated,
        "hilbert_values": values,
        "stable": (closed[0], closed[1]) if closed else None,
        "catalecticant_rank": catalecticant(f, s).rank,
    }
    recorded_hf = checks["hilbert_matches_h_r"]
    return (
        recomputed["apolar_membership"] == checks["apolar_membership"]
        and recomputed["generators_harmonic"] == checks["generators_harmonic"]
        and recomputed["groebner_ok"] == checks["groebner_ok"]
        and recomputed["leading_ideal_equals_Jd"] == checks["leading_ideal_equals_Jd"]
        and recomputed["saturated"] == checks["saturated"]
        and recomputed["hilbert_values"] == recorded_hf["values"]
        and recomputed["stable"] == (recorded_hf["stable_value"], recorded_hf["stable_from"])
        and recomputed["catalecticant_rank"] == checks["catalecticant_rank"]
        and (data["conclusion"] is None or data["conclusion"] == r == checks["catalecticant_rank"])
    )


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def _mono(alpha) -> str:
    from .polynomial import format_monomial

    return format_monomial(UVZ, alpha) or "1"


# -- arbitrary ternary quadratics ----------------------------------------


@dataclass(frozen=True)
class QuadraticClassification:
    g: Poly
    matrix: ExactMatrix
    matrix_rank: int

    def brk_formula(self, s: int) -> int:
        """Border rank of g^s."""
        k = self.matrix_rank
        return comb(s + k - 1, k - 1)

    @property
    def brk_formula_text(self) -> str:
        return {1: "1", 2: "s+1", 3: "(s+1)(s+2)/2"}[self.matrix_rank]


def symmetric_matrix(g: Poly) -> ExactMatrix:
    """Gram matrix M with g = x^T M x."""
    n = g.frame.n
    rows = [[GaussianRational(0)] * n for _ in range(n)]
    for alpha, c in g._terms.items():
        idx = [i for i, e in enumerate(alpha) for _ in range(e)]
        i, j = idx
        if i == j:
            rows[i][i] = c
        else:
            rows[i][j] = rows[j][i] = c / 2
    return ExactMatrix(rows, n)


def classify_ternary_quadratic(g: Poly) -> QuadraticClassification:
    if g.frame.n != 3 or g.frame.name == "UVZ":
        raise ValueError("expected a form in x1, x2, x3 (or y1, y2, y3)")
    if g.is_zero():
        raise ValueError("g must be nonzero")
    if g.homogeneous_degree() != 2:
        raise ValueError("g must be a quadratic form")
    m = symmetric_matrix(g)
    return QuadraticClassification(g, m, exact_rank(m))


# -- binary case: q_2^s ---------------------------------------------------


@dataclass(frozen=True)
class NumericForm:
    """Floating-point form; coefficients keyed by exponent tuples."""

    variables: tuple
    coefficients: dict

    def evaluate(self, point) -> complex:
        return sum(c * math.prod(p ** e for p, e in zip(point, a)) for a, c in self.coefficients.items())


def _uv_forms():
    y1, y2 = Poly.gens(Y(2))
    i = GaussianRational(0, 1)
    return y1 + y2 * i, y1 - y2 * i


def q2_apolar_generator(s: int, theta: float = 0.0, k: float = 0.0):
    """u^(s+1) - exp(i(theta + i k)) v^(s+1) with u = y1 + i y2, v = y1 - i y2.

    Exact (a Y(2) Poly) when theta = k = 0, otherwise a :class:`NumericForm`
    in (y1, y2).
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    u, v = _uv_forms()
    a, b = u ** (s + 1), v ** (s + 1)
    if theta == 0 and k == 0:
        return a - b
    lam = cmath.exp(1j * (theta + 1j * k))
    coeffs = {}
    for alpha in set(a._terms) | set(b._terms):
        c = complex(a.coefficient(alpha)) - lam * complex(b.coefficient(alpha))
        if c != 0:
            coeffs[alpha] = c
    return NumericForm(("y1", "y2"), coeffs)


def q2_roots(s: int, theta: float = 0.0, k: float = 0.0) -> list:
    """w_j = (2(j-1)pi + theta + i k) / (2(s+1)), j = 1..s+1."""
    return [(2 * (j - 1) * math.pi + theta + 1j * k) / (2 * (s + 1)) for j in range(1, s + 2)]


def reznick_radius(s: int) -> float:
    return (s + 1) ** (-1 / (2 * s)) * comb(2 * s, s) ** (-1 / (2 * s))


@dataclass(frozen=True)
class Q2Decomposition:
    s: int
    theta: float
    k: float
    points: list
    radius: float
    residual: float


def _binary_power_coeffs(a: complex, b: complex, e: int) -> np.ndarray:
    # coefficients of (a x1 + b x2)^e on x1^(e-m) x2^m, m = 0..e
    m = np.arange(e + 1)
    binom = np.array([comb(e, int(i)) for i in m], dtype=float)
    return binom * a ** (e - m) * b ** m


def decompose_q2(s: int, theta: float = 0.0, k: float = 0.0, tol: float = 1e-9) -> Q2Decomposition:
    """s+1 linear forms whose 2s-th powers sum to (x1^2 + x2^2)^s.

    The residual is the largest coefficient error divided by the largest
    coefficient of q_2^s.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    rad = reznick_radius(s)
    pts = [(2 * rad * cmath.cos(w), 2 * rad * cmath.sin(w)) for w in q2_roots(s, theta, k)]
    pts = [tuple(c.real if c.imag == 0 else c for c in p) for p in pts]
    total = np.zeros(2 * s + 1, dtype=complex)
    for a, b in pts:
        total += _binary_power_coeffs(complex(a), complex(b), 2 * s)
    target = np.zeros(2 * s + 1)
    for j in range(s + 1):
        target[2 * j] = comb(s, j)
    residual = float(np.max(np.abs(total - target)) / np.max(target))
    if not residual < tol:
        raise ArithmeticError(f"q2 decomposition residual {residual:.3e} >= tol {tol:.1e}")
    return Q2Decomposition(s, theta, k, pts, rad, residual)


# -- the apolar ideal of q_n^s at desk scale --------------------------------


@dataclass
class ApolarTheoremReport:
    n: int
    s: int
    degrees: list  # dicts with m, apolar_dim, ideal_dim, equal
    ok: bool

    def __bool__(self):
        return self.ok


def apolar_ideal_theorem_report(n: int, s: int, max_extra_degree: int = 3) -> ApolarTheoremReport:
    """Compare (q_n^s)^perp with the ideal generated by degree-(s+1) harmonics, degree by degree."""
    f = quadric(X(n)) ** s
    yf = Y(n)
    H = harmonic_basis(yf, s + 1)
    rows = []
    ok = True
    for m in range(2 * s + max_extra_degree + 1):
        comp = apolar_component(f, m)
        kernel = EchelonSpace()
        kernel.extend(p._terms for p in comp.basis)
        ideal = EchelonSpace()
        contained = True
        full = comb(m + n - 1, n - 1)
        if m >= s + 1:
            for h in H:
                for mono in monomials(n, m - s - 1):
                    vec = {tuple(x + y for x, y in zip(a, mono)): c for a, c in h._terms.items()}
                    if ideal.add(vec) and not kernel.contains(vec):
                        contained = False
                    if ideal.dim == full:
                        break
                if ideal.dim == full:
                    break
        equal = contained and ideal.dim == kernel.dim
        rows.append({"m": m, "apolar_dim": kernel.dim, "ideal_dim": ideal.dim, "equal": equal})
        ok = ok and equal
    return ApolarTheoremReport(n, s, rows, ok)


def verify_apolar_ideal_theorem(n: int, s: int, max_extra_degree: int = 3) -> bool:
    return apolar_ideal_theorem_report(n, s, max_extra_degree).ok
