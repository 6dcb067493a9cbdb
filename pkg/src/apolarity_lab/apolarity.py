"""Apolarity (contraction) action, catalecticants and apolar ideal components."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, factorial

from .linalg import ExactMatrix, exact_rank, inverse, kernel_basis
from .polynomial import X, Y, FrameMismatchError, Poly, monomials
from .scalars import ZERO, as_scalar


class NotStabilizerError(ValueError):
    """The matrix does not fix the form, so an equivariance check would be vacuous."""


def _falling(b: int, a: int) -> int:
    # b!/(b-a)!
    out = 1
    for k in range(b - a + 1, b + 1):
        out *= k
    return out


def contract(phi: Poly, f: Poly) -> Poly:
    """phi o f, with y^a o x^b = b!/(b-a)! x^(b-a) (zero unless b >= a).

    ``phi`` must live in the Y frame and ``f`` in the X frame, same n.
    """
    if phi.frame.name != "Y" or f.frame.name != "X" or phi.frame.n != f.frame.n:
        raise FrameMismatchError(f"contract needs Y(n) o X(n), got {phi.frame} o {f.frame}")
    out: dict = {}
    fterms = f._terms
    for a, c in phi._terms.items():
        for b, e in fterms.items():
            w = 1
            rest = []
            for ai, bi in zip(a, b):
                if bi < ai:
                    break
                if ai:
                    w *= _falling(bi, ai)
                rest.append(bi - ai)
            else:
                k = tuple(rest)
                s = out.get(k)
                t = c * e * w
                out[k] = t if s is None else s + t
    return Poly._from_clean(f.frame, {k: v for k, v in out.items() if v})


@dataclass(frozen=True)
class Catalecticant:
    """j-th catalecticant of f: rows are degree-(d-j) x-monomials, columns degree-j y-monomials."""

    f: Poly
    j: int
    matrix: ExactMatrix
    rank: int
    row_monomials: tuple
    col_monomials: tuple


def _catalecticant_matrix(f: Poly, j: int):
    d = f.homogeneous_degree()
    n = f.frame.n
    rows = monomials(n, d - j)
    cols = monomials(n, j)
    row_index = {b: i for i, b in enumerate(rows)}
    data = [[ZERO] * len(cols) for _ in rows]
    for col, a in enumerate(cols):
        for b, c in f._terms.items():
            rest = tuple(bi - ai for ai, bi in zip(a, b))
            if min(rest) < 0:
                continue
            w = 1
            for ai, bi in zip(a, b):
                if ai:
                    w *= _falling(bi, ai)
            data[row_index[rest]][col] = c * w
    return ExactMatrix(data, len(cols)), rows, cols


def _require_form(f: Poly) -> int:
    if f.frame.name != "X":
        raise FrameMismatchError("forms are expected in the X frame")
    d = f.homogeneous_degree()
    if d is None:
        raise ValueError("f must be a nonzero homogeneous polynomial")
    return d


def catalecticant(f: Poly, j: int) -> Catalecticant:
    d = _require_form(f)
    if not 0 <= j <= d:
        raise ValueError(f"j = {j} outside 0..{d}")
    m, rows, cols = _catalecticant_matrix(f, j)
    return Catalecticant(f, j, m, exact_rank(m), rows, cols)


@dataclass(frozen=True)
class ApolarComponent:
    f: Poly
    m: int
    basis: tuple
    dim: int


def apolar_component(f: Poly, m: int) -> ApolarComponent:
    """Degree-m part of the apolar ideal of f, as a basis of Y-frame forms."""
    d = _require_form(f)
    if m < 0:
        raise ValueError("degree must be nonnegative")
    n = f.frame.n
    yf = Y(n)
    cols = monomials(n, m)
    if m > d:
        basis = tuple(Poly.monomial(yf, a) for a in cols)
        return ApolarComponent(f, m, basis, len(basis))
    mat, _, cols = _catalecticant_matrix(f, m)
    basis = []
    for vec in kernel_basis(mat):
        basis.append(Poly(yf, {a: c for a, c in zip(cols, vec) if c}))
    return ApolarComponent(f, m, tuple(basis), len(basis))


def sylvester_lower_bound(f: Poly) -> int:
    """max_j rank(Cat_f^j); a lower bound for rank and border rank of f."""
    d = _require_form(f)
    # rank(Cat^j) = rank(Cat^(d-j)), so half the range suffices
    return max(catalecticant(f, j).rank for j in range(d // 2 + 1))


# -- linear group action -------------------------------------------------


def act(A: ExactMatrix, p: Poly) -> Poly:
    """GL_n action on polynomials: variable i goes to sum_k A[k, i] * variable k.

    On the Y frame the contragredient matrix (A^{-1})^T is used, so the
    contraction pairing is preserved: A.(phi o f) = (A.phi) o (A.f).
    """
    n = p.frame.n
    if A.shape != (n, n):
        raise ValueError("matrix size does not match frame")
    M = inverse(A).transpose() if p.frame.name == "Y" else A
    gens = Poly.gens(p.frame)
    images = []
    for i in range(n):
        img = Poly.zero(p.frame)
        for k in range(n):
            if M[k, i]:
                img = img + gens[k].scale(M[k, i])
        images.append(img)
    powers = [[Poly.constant(p.frame, 1)] for _ in range(n)]
    out = Poly.zero(p.frame)
    for a, c in p._terms.items():
        t = Poly.constant(p.frame, c)
        for i, e in enumerate(a):
            if e:
                cache = powers[i]
                while len(cache) <= e:
                    cache.append(cache[-1] * images[i])
                t = t * cache[e]
        out = out + t
    return out


def cayley_orthogonal(S) -> ExactMatrix:
    """(I - S)(I + S)^{-1} for a skew-symmetric S: a rational orthogonal matrix."""
    S = S if isinstance(S, ExactMatrix) else ExactMatrix(S)
    n = S.rows
    for i in range(n):
        for j in range(n):
            if S[i, j] != -S[j, i]:
                raise ValueError("S must be skew-symmetric")
    Id = ExactMatrix.identity(n)
    return (Id - S) @ inverse(Id + S)


def is_equivariant_spotcheck(f: Poly, A, samples: int = 4, seed: int = 0) -> bool:
    """Check Cat_f(A.phi) == A.Cat_f(phi) on random phi of every degree <= deg f.

    Raises :class:`NotStabilizerError` if A does not fix f.
    """
    d = _require_form(f)
    A = A if isinstance(A, ExactMatrix) else ExactMatrix(A)
    if act(A, f) != f:
        raise NotStabilizerError("A does not stabilise f")
    rng = random.Random(seed)
    n = f.frame.n
    for k in range(d + 1):
        for _ in range(samples):
            phi = Poly(Y(n), {a: rng.randint(-3, 3) for a in monomials(n, k)})
            if contract(act(A, phi), f) != act(A, contract(phi, f)):
                return False
    return True


def expected_apolar_dims(n: int, s: int, m: int) -> int:
    """dim (q_n^s)^perp_m predicted by the harmonic decomposition of D_m."""
    from .harmonic import harmonic_dim

    if m <= s:
        return 0
    if m > 2 * s:
        return comb(m + n - 1, n - 1)
    k = m - s
    return sum(harmonic_dim(n, s + k - 2 * j) for j in range(k))


def power_of_linear_form(coeffs, d: int, frame_name: str = "Y") -> Poly:
    """(sum_i c_i var_i)^d in the X or Y frame, expanded by the multinomial rule."""
    n = len(coeffs)
    frame = Y(n) if frame_name == "Y" else X(n)
    coeffs = [as_scalar(c) for c in coeffs]
    terms = {}
    for a in monomials(n, d):
        w = factorial(d)
        c = 1
        for ai, ci in zip(a, coeffs):
            w //= factorial(ai)
            c = ci ** ai * c
        terms[a] = c * w
    return Poly(frame, terms)
