"""Laplace operator, harmonic decomposition and the sl2 ladder basis in (u, z, v)."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .linalg import ExactMatrix, kernel_basis, rref
from .polynomial import UVZ, FrameMismatchError, Poly, VariableFrame, monomials, quadric
from .scalars import ZERO, GaussianRational

I = GaussianRational(0, 1)


def laplacian(f: Poly) -> Poly:
    """Sum of pure second derivatives; in the UVZ frame d^2/dz^2 + d^2/du dv."""
    if f.frame.name == "UVZ":
        return f.diff("z", 2) + f.diff("u").diff("v")
    out = Poly.zero(f.frame)
    for i in range(f.frame.n):
        out = out + f.diff(i, 2)
    return out


def harmonic_dim(n: int, d: int) -> int:
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    low = comb(d + n - 3, n - 1) if d >= 2 else 0
    return comb(d + n - 1, n - 1) - low


def _laplacian_matrix(frame: VariableFrame, d: int):
    cols = monomials(frame.n, d)
    rows = monomials(frame.n, d - 2)
    index = {b: i for i, b in enumerate(rows)}
    data = [[ZERO] * len(cols) for _ in rows]
    for j, a in enumerate(cols):
        for b, c in laplacian(Poly.monomial(frame, a))._terms.items():
            data[index[b]][j] = c
    return ExactMatrix(data, len(cols)), cols


def harmonic_basis(frame: VariableFrame, d: int) -> list:
    """A basis of the degree-d harmonic forms, read off the Laplacian's kernel."""
    if d < 2:
        return [Poly.monomial(frame, a) for a in monomials(frame.n, d)]
    mat, cols = _laplacian_matrix(frame, d)
    return [Poly(frame, {a: c for a, c in zip(cols, v) if c}) for v in kernel_basis(mat)]


def harmonic_decompose(f: Poly) -> list:
    """Write f = sum_j q^j h_j with each h_j harmonic of degree d - 2j.

    Returns [(j, h_j)] for j = 0..floor(d/2), zero components included.
    Peels one harmonic layer at a time: find g with Delta(q g) = Delta(f),
    then f - q g is harmonic and the rest recurses on g.
    """
    if f.frame.name == "UVZ":
        raise FrameMismatchError("harmonic_decompose works in the X or Y frame")
    if f.is_zero():
        return [(0, f)]
    d = f.homogeneous_degree()
    if d is None:
        raise ValueError("f must be homogeneous")
    q = quadric(f.frame)
    out = []
    j = 0
    rest = f
    while d >= 0:
        if d < 2 or rest.is_zero():
            out.append((j, rest))
            for jj in range(j + 1, j + d // 2 + 1):
                out.append((jj, Poly.zero(f.frame)))
            break
        g = _solve_layer(rest, q, d)
        out.append((j, rest - q * g))
        rest = g
        d -= 2
        j += 1
    return out


def _solve_layer(f: Poly, q: Poly, d: int) -> Poly:
    frame = f.frame
    n = frame.n
    unknowns = monomials(n, d - 2)
    rows = monomials(n, d - 2)
    index = {b: i for i, b in enumerate(rows)}
    # column k = Delta(q * m_k), augmented with Delta(f)
    data = [[ZERO] * (len(unknowns) + 1) for _ in rows]
    for k, a in enumerate(unknowns):
        for b, c in laplacian(q.mul_monomial(a))._terms.items():
            data[index[b]][k] = c
    for b, c in laplacian(f)._terms.items():
        data[index[b]][-1] = c
    red, pivots = rref(ExactMatrix(data))
    if len(pivots) != len(unknowns) or (pivots and pivots[-1] == len(unknowns)):
        raise ArithmeticError("Delta(q .) is not invertible on this degree")
    return Poly(frame, {unknowns[pc]: row[-1] for row, pc in zip(red, pivots) if row[-1]})


# -- canonical basis in (u, z, v) ----------------------------------------


def p_dk(d: int, k: int) -> Poly:
    """Ladder basis element p_{d,k}, |k| <= d, with divided powers expanded.

    p_{d,k}  = sum_j (-1)^j u^[k+j] z^[d-k-2j] v^[j]      (k >= 0)
    p_{d,-k} = same with u and v exchanged
    """
    if abs(k) > d:
        raise ValueError(f"|k| must be <= d, got d={d}, k={k}")
    m = abs(k)
    terms = {}
    for j in range((d - m) // 2 + 1):
        a_u, a_z, a_v = m + j, d - m - 2 * j, j
        if k < 0:
            a_u, a_v = a_v, a_u
        den = factorial(a_u) * factorial(a_z) * factorial(a_v)
        terms[(a_z, a_u, a_v)] = Fraction((-1) ** j, den)
    return Poly(UVZ, terms)


@dataclass(frozen=True)
class HarmonicBasis3:
    """The 2d+1 elements p_{d,k}, listed for k = d, d-1, ..., -d."""

    d: int
    elements: tuple

    def __getitem__(self, k: int) -> Poly:
        if abs(k) > self.d:
            raise KeyError(k)
        return self.elements[self.d - k]

    def nonnegative(self) -> tuple:
        """p_{d,d}, ..., p_{d,0}."""
        return self.elements[: self.d + 1]


_basis_cache: dict = {}
_basis_lock = threading.Lock()


def harmonic_basis_3(d: int) -> HarmonicBasis3:
    if d < 0:
        raise ValueError("d must be nonnegative")
    with _basis_lock:
        hit = _basis_cache.get(d)
    if hit is not None:
        return hit
    basis = HarmonicBasis3(d, tuple(p_dk(d, k) for k in range(d, -d - 1, -1)))
    with _basis_lock:
        _basis_cache.setdefault(d, basis)
    return basis


# -- so3 = sl2 action ------------------------------------------------------


@dataclass(frozen=True)
class So3Basis:
    """H, E, F as 3x3 matrices acting on the listed variables (column convention)."""

    H: ExactMatrix
    E: ExactMatrix
    F: ExactMatrix
    variables: tuple


def bracket(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    return A @ B - B @ A


def so3_y() -> So3Basis:
    i = I
    return So3Basis(
        H=ExactMatrix([[0, -2 * i, 0], [2 * i, 0, 0], [0, 0, 0]]),
        E=ExactMatrix([[0, 0, -1], [0, 0, -i], [1, i, 0]]),
        F=ExactMatrix([[0, 0, 1], [0, 0, -i], [-1, i, 0]]),
        variables=("y1", "y2", "y3"),
    )


def so3_uvz() -> So3Basis:
    return So3Basis(
        H=ExactMatrix([[2, 0, 0], [0, -2, 0], [0, 0, 0]]),
        E=ExactMatrix([[0, 0, -2], [0, 0, 0], [0, 1, 0]]),
        F=ExactMatrix([[0, 0, 0], [0, 0, 2], [-1, 0, 0]]),
        variables=("u", "v", "z"),
    )


def check_brackets(b: So3Basis) -> dict:
    """Exact truth values of [H,E]=2E, [H,F]=-2F, [E,F]=H."""
    return {
        "[H,E]=2E": bracket(b.H, b.E) == b.E.scale(2),
        "[H,F]=-2F": bracket(b.H, b.F) == b.F.scale(-2),
        "[E,F]=H": bracket(b.E, b.F) == b.H,
    }


def so3_action(M: ExactMatrix, f: Poly, variables: tuple | None = None) -> Poly:
    """Derivation action: M.f = sum_i (M var_i) * df/dvar_i.

    ``variables`` names the order of M's rows/columns (defaults to the
    frame's own order); var_i is sent to sum_k M[k, i] var_k.
    """
    variables = variables or f.frame.variables
    if M.shape != (len(variables), len(variables)):
        raise ValueError("matrix size does not match variable list")
    if len(variables) != f.frame.n:
        raise FrameMismatchError("variable list does not match the frame")
    gens = {v: Poly.var(f.frame, v) for v in variables}
    out = Poly.zero(f.frame)
    for i, vi in enumerate(variables):
        image = Poly.zero(f.frame)
        for k, vk in enumerate(variables):
            if M[k, i]:
                image = image + gens[vk].scale(M[k, i])
        if image:
            out = out + image * f.diff(vi)
    return out


def proportionality(p: Poly, q: Poly):
    """Scalar c with p == c*q, or None.  q must be nonzero."""
    if q.is_zero():
        raise ValueError("reference polynomial is zero")
    if p.is_zero():
        return ZERO
    if set(p._terms) != set(q._terms):
        return None
    a = next(iter(q._terms))
    c = p._terms[a] / q._terms[a]
    return c if p == q.scale(c) else None


def ladder_scalars(d: int) -> dict:
    """Exact scalars c with E p_{d,k} = c p_{d,k+1} and F p_{d,k} = c p_{d,k-1}.

    Keys are ("E", k) and ("F", k); a value None means the image is not
    proportional to the neighbouring element (the ladder property fails).
    """
    b = so3_uvz()
    basis = harmonic_basis_3(d)
    out = {}
    for k in range(-d, d + 1):
        p = basis[k]
        e = so3_action(b.E, p, b.variables)
        f = so3_action(b.F, p, b.variables)
        out[("E", k)] = proportionality(e, basis[k + 1]) if k < d else (ZERO if e.is_zero() else None)
        out[("F", k)] = proportionality(f, basis[k - 1]) if k > -d else (ZERO if f.is_zero() else None)
    return out


def laplacian_power_constant(n: int, s: int) -> int:
    """2s(n + 2(s-1)), the factor in Delta(q_n^s) = c q_n^(s-1)."""
    return 2 * s * (n + 2 * (s - 1))


def quadric_power(frame: VariableFrame, s: int) -> Poly:
    return quadric(frame) ** s


def is_harmonic(f: Poly) -> bool:
    return laplacian(f).is_zero()


def span_dim(polys) -> int:
    from .linalg import EchelonSpace

    space = EchelonSpace()
    for p in polys:
        space.add(p._terms)
    return space.dim

