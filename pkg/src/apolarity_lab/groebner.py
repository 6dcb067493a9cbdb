"""Lex division, Buchberger's colon criterion, monomial ideals and Hilbert functions.

Exponent tuples are compared in the frame's storage order, so plain tuple
comparison is the lex order; in the UVZ frame that is z > u > v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb

from .linalg import EchelonSpace
from .polynomial import Poly, VariableFrame, format_monomial, mi_divides, mi_lcm, monomials
from .scalars import GaussianRational


class NotGroebnerError(ValueError):
    pass


class HilbertMismatchError(ArithmeticError):
    """The rank count and the standard-monomial count disagree."""


def lex_leading_term(f: Poly):
    """(exponent, coefficient) of the lex-greatest term."""
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    alpha = max(f._terms)
    return alpha, f._terms[alpha]


# -- monomial ideals -------------------------------------------------------


def _minimalize(gens) -> tuple:
    gens = sorted(set(tuple(g) for g in gens), key=lambda a: (sum(a), a))
    keep = []
    for g in gens:
        if not any(mi_divides(h, g) for h in keep):
            keep.append(g)
    return tuple(sorted(keep, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (sorted lex-descending)."""

    frame: VariableFrame
    generators: tuple

    def __init__(self, frame: VariableFrame, generators):
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "generators", _minimalize(generators))

    def contains(self, alpha) -> bool:
        return any(mi_divides(g, alpha) for g in self.generators)

    __contains__ = contains

    def is_unit(self) -> bool:
        return (0,) * self.frame.n in self.generators

    def standard_monomials(self, a: int) -> list:
        return [m for m in monomials(self.frame.n, a) if not self.contains(m)]

    def to_strings(self) -> list:
        return [format_monomial(self.frame, g) or "1" for g in self.generators]

    def __str__(self):
        return "(" + ", ".join(self.to_strings()) + ")"


def monomial_colon(J: MonomialIdeal, var) -> MonomialIdeal:
    """J : x for a variable (name/index) or a monomial exponent tuple."""
    n = J.frame.n
    if isinstance(var, str):
        var = J.frame.index(var)
    if isinstance(var, int):
        mono = tuple(int(i == var) for i in range(n))
    else:
        mono = tuple(var)
    gens = [tuple(max(g_i - m_i, 0) for g_i, m_i in zip(g, mono)) for g in J.generators]
    return MonomialIdeal(J.frame, gens)


def monomial_intersect(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    if J1.frame != J2.frame:
        raise ValueError("frame mismatch")
    return MonomialIdeal(J1.frame, [mi_lcm(a, b) for a in J1.generators for b in J2.generators])


def _colon_maximal(J: MonomialIdeal) -> MonomialIdeal:
    out = None
    for i in range(J.frame.n):
        c = monomial_colon(J, i)
        out = c if out is None else monomial_intersect(out, c)
    return out


@dataclass(frozen=True)
class Saturation:
    ideal: MonomialIdeal
    iterations: int
    saturated: bool


def monomial_saturation(J: MonomialIdeal) -> Saturation:
    """J : m^infinity by iterating J <- J : m (m = all variables) to a fixed point.

    ``iterations`` counts colon steps, including the one that confirms the
    fixed point; a saturated ideal takes exactly one.
    """
    current = J
    steps = 0
    while True:
        nxt = _colon_maximal(current)
        steps += 1
        if nxt == current:
            return Saturation(current, steps, current == J)
        current = nxt


def is_saturated(J: MonomialIdeal) -> bool:
    return monomial_saturation(J).saturated


def eventual_hilbert_constant(J: MonomialIdeal):
    """Closed-form large-degree count of standard monomials, when it is constant.

    If some variable w appears in no generator and J restricted to the other
    variables contains a pure power of each of them, the standard monomials
    are exactly m * w^e with m from a finite set S.  The degree-a count is
    then |S| for every a >= max deg S.  Returns (|S|, max deg S, w) or None.
    """
    n = J.frame.n
    for w in range(n):
        if any(g[w] for g in J.generators):
            continue
        others = [i for i in range(n) if i != w]
        bounds = []
        for i in others:
            pure = [g[i] for g in J.generators if all(g[k] == 0 for k in range(n) if k != i)]
            if not pure:
                break
            bounds.append(min(pure))
        else:
            finite = []
            for exps in product(*(range(b) for b in bounds)):
                alpha = [0] * n
                for i, e in zip(others, exps):
                    alpha[i] = e
                if not J.contains(tuple(alpha)):
                    finite.append(tuple(alpha))
            top = max((sum(a) for a in finite), default=0)
            return len(finite), top, J.frame.variables[w]
    return None


# -- division and the colon criterion --------------------------------------


@dataclass
class ReductionStep:
    index: int  # which element of G
    multiplier: tuple  # exponent of the monomial factor
    coefficient: GaussianRational


def reduce(f: Poly, G, record: bool = False):
    """Remainder of f on division by G under lex.

    Among the elements whose leading monomial divides the current lead term,
    the one with the lex-greatest leading monomial is used (lowest index on
    ties).  With ``record=True`` returns (remainder, steps) so that
    f - remainder == sum(step.coefficient * x^step.multiplier * G[step.index]).
    """
    G = list(G)
    lts = []
    for g in G:
        if g.frame != f.frame:
            raise ValueError("frame mismatch")
        lts.append(lex_leading_term(g))
    order = sorted(range(len(G)), key=lambda i: (lts[i][0], -i), reverse=True)
    work = dict(f._terms)
    rem = {}
    steps = []
    while work:
        alpha = max(work)
        c = work[alpha]
        for i in order:
            beta, lc = lts[i]
            if mi_divides(beta, alpha):
                mult = tuple(a - b for a, b in zip(alpha, beta))
                q = c / lc
                for gamma, e in G[i]._terms.items():
                    k = tuple(x + y for x, y in zip(gamma, mult))
                    s = work.get(k)
                    s = -(q * e) if s is None else s - q * e
                    if s:
                        work[k] = s
                    else:
                        work.pop(k, None)
                if record:
                    steps.append(ReductionStep(i, mult, q))
                break
        else:
            rem[alpha] = work.pop(alpha)
    remainder = Poly._from_clean(f.frame, rem)
    return (remainder, steps) if record else remainder


@dataclass
class ColonStep:
    j: int  # index of f_j in G (0-based)
    colon_generators: list  # minimal generators of (LT f_0..f_{j-1}) : LT f_j
    reductions: list = field(default_factory=list)  # dicts per colon generator


@dataclass
class BuchbergerWitness:
    ok: bool
    leading_terms: list
    steps: list

    def to_dict(self, frame: VariableFrame, generators=None) -> dict:
        """JSON-ready record; polynomial text uses the parser's grammar."""
        out = {
            "ok": self.ok,
            "order": "lex " + " > ".join(frame.variables),
            "leading_terms": [format_monomial(frame, a) or "1" for a in self.leading_terms],
            "steps": [],
        }
        if generators is not None:
            out["generators"] = [str(g) for g in generators]
        for st in self.steps:
            out["steps"].append({
                "j": st.j,
                "colon_generators": [format_monomial(frame, a) or "1" for a in st.colon_generators],
                "reductions": [
                    {
                        "multiplier": format_monomial(frame, r["multiplier"]) or "1",
                        "remainder": str(r["remainder"]),
                        "chain": [
                            {"g": s.index, "times": format_monomial(frame, s.multiplier) or "1",
                             "coefficient": str(s.coefficient)}
                            for s in r["chain"]
                        ],
                    }
                    for r in st.reductions
                ],
            })
        return out


def buchberger_colon_check(G) -> BuchbergerWitness:
    """Gröbner test: for j >= 1 and each minimal generator x^a of
    (LT g_0, ..., LT g_{j-1}) : LT g_j, x^a g_j must reduce to zero by G.

    The first generator has an empty colon condition.
    """
    G = list(G)
    if not G:
        return BuchbergerWitness(True, [], [])
    frame = G[0].frame
    lts = [lex_leading_term(g)[0] for g in G]
    ok = True
    steps = []
    for j in range(1, len(G)):
        prev = MonomialIdeal(frame, lts[:j])
        colon = monomial_colon(prev, lts[j])
        st = ColonStep(j, list(colon.generators))
        for alpha in colon.generators:
            rem, chain = reduce(G[j].mul_monomial(alpha), G, record=True)
            st.reductions.append({"multiplier": alpha, "remainder": rem, "chain": chain})
            ok = ok and rem.is_zero()
        steps.append(st)
    return BuchbergerWitness(ok, lts, steps)


def leading_ideal(G) -> MonomialIdeal:
    G = list(G)
    if not buchberger_colon_check(G).ok:
        raise NotGroebnerError("generators do not form a Gröbner basis")
    return MonomialIdeal(G[0].frame, [lex_leading_term(g)[0] for g in G])


# -- graded ideals and Hilbert functions -----------------------------------


@dataclass
class GradedIdealPresentation:
    generators: list
    groebner_basis: list | None = None
    leading_ideal: MonomialIdeal | None = None
    hilbert: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        self.frame = self.generators[0].frame
        for g in self.generators:
            if g.frame != self.frame or g.homogeneous_degree() is None:
                raise ValueError("generators must be nonzero homogeneous forms in one frame")

    @classmethod
    def with_groebner(cls, generators) -> GradedIdealPresentation:
        """Attach a verified Gröbner basis (the generators themselves) and its leading ideal."""
        gens = list(generators)
        return cls(gens, gens, leading_ideal(gens))

    def degree_part_dim(self, a: int) -> int:
        """dim of the degree-a part of the ideal, by exact elimination."""
        space = EchelonSpace()
        n = self.frame.n
        full = comb(a + n - 1, n - 1)
        for g in self.generators:
            dg = g.homogeneous_degree()
            if dg > a:
                continue
            for m in monomials(n, a - dg):
                space.add({tuple(x + y for x, y in zip(k, m)): c for k, c in g._terms.items()})
                if space.dim == full:
                    return full
        return space.dim


def hilbert_by_rank(P: GradedIdealPresentation, a: int) -> int:
    n = P.frame.n
    return comb(a + n - 1, n - 1) - P.degree_part_dim(a)


def hilbert_by_standard_monomials(J: MonomialIdeal, a: int) -> int:
    return len(J.standard_monomials(a))


def hilbert_function(P: GradedIdealPresentation, a: int) -> int:
    """dim D_a / I_a.  With a leading ideal present, both counts must agree."""
    if a < 0:
        raise ValueError("degree must be nonnegative")
    if a in P.hilbert:
        return P.hilbert[a]
    value = hilbert_by_rank(P, a)
    if P.leading_ideal is not None:
        other = hilbert_by_standard_monomials(P.leading_ideal, a)
        if other != value:
            raise HilbertMismatchError(f"HF({a}): rank count {value} != standard monomials {other}")
    P.hilbert[a] = value
    return value
