"""Sparse multivariate polynomials over Q(i) tagged with a variable frame."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterator, Mapping

from .scalars import ONE, ZERO, GaussianRational, as_scalar, format_scalar

MultiIndex = tuple  # tuple[int, ...]


class FrameMismatchError(ValueError):
    pass


# -- multi-indices -------------------------------------------------------


def mi_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def mi_factorial(alpha: MultiIndex) -> int:
    """alpha! = prod(alpha_i!)"""
    return prod(factorial(a) for a in alpha)


def mi_sub(beta: MultiIndex, alpha: MultiIndex):
    """beta - alpha, or None when some entry would be negative."""
    out = tuple(b - a for a, b in zip(alpha, beta))
    if any(e < 0 for e in out):
        return None
    return out


def mi_add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def mi_divides(a: MultiIndex, b: MultiIndex) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mi_gcd(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(min(x, y) for x, y in zip(a, b))


def mi_lcm(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(max(x, y) for x, y in zip(a, b))


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple:
    """All exponent vectors of degree d in n variables, graded-lex descending.

    With variable order (v0, v1, ...) the first entry is v0^d.
    """
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


def glex_key(alpha: MultiIndex):
    return (sum(alpha), alpha)


# -- frames --------------------------------------------------------------


@dataclass(frozen=True)
class VariableFrame:
    """Named set of variables.

    ``X`` and ``Y`` are x1..xn and y1..yn.  ``UVZ`` has n = 3 and stores the
    variables in the order (z, u, v), so tuple comparison of exponent vectors
    is the lex order z > u > v.
    """

    name: str
    n: int

    def __post_init__(self):
        if self.name not in ("X", "Y", "UVZ"):
            raise ValueError(f"unknown frame {self.name!r}")
        if self.name == "UVZ" and self.n != 3:
            raise ValueError("UVZ frame requires n = 3")
        if self.n < 1:
            raise ValueError("frame needs at least one variable")

    @property
    def variables(self) -> tuple:
        if self.name == "UVZ":
            return ("z", "u", "v")
        prefix = self.name.lower()
        return tuple(f"{prefix}{i + 1}" for i in range(self.n))

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"variable {var!r} not in frame {self}") from None

    def __str__(self):
        return "UVZ" if self.name == "UVZ" else f"{self.name}(n={self.n})"


def X(n: int) -> VariableFrame:
    return VariableFrame("X", n)


def Y(n: int) -> VariableFrame:
    return VariableFrame("Y", n)


UVZ = VariableFrame("UVZ", 3)


# -- polynomials ---------------------------------------------------------


class Poly:
    """Immutable polynomial: a frame plus a map exponent-tuple -> coefficient.

    Zero coefficients are never stored.
    """

    __slots__ = ("frame", "_terms", "_hash")

    def __init__(self, frame: VariableFrame, terms: Mapping | None = None):
        self.frame = frame
        clean = {}
        if terms:
            for alpha, c in terms.items():
                alpha = tuple(alpha)
                if len(alpha) != frame.n:
                    raise ValueError(f"exponent {alpha} has wrong length for {frame}")
                c = as_scalar(c)
                if c:
                    clean[alpha] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, frame, terms):
        obj = object.__new__(cls)
        obj.frame = frame
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, frame: VariableFrame) -> Poly:
        return cls._from_clean(frame, {})

    @classmethod
    def constant(cls, frame: VariableFrame, c=1) -> Poly:
        return cls(frame, {(0,) * frame.n: c})

    @classmethod
    def monomial(cls, frame: VariableFrame, alpha: MultiIndex, c=1) -> Poly:
        return cls(frame, {tuple(alpha): c})

    @classmethod
    def var(cls, frame: VariableFrame, name: str) -> Poly:
        e = [0] * frame.n
        e[frame.index(name)] = 1
        return cls._from_clean(frame, {tuple(e): ONE})

    @classmethod
    def gens(cls, frame: VariableFrame) -> tuple:
        return tuple(cls.var(frame, v) for v in frame.variables)

    # -- inspection ------------------------------------------------------
    @property
    def terms(self) -> dict:
        """Copy of the term map."""
        return dict(self._terms)

    def items(self) -> Iterator:
        """(exponent, coefficient) pairs, graded-lex descending."""
        for alpha in sorted(self._terms, key=glex_key, reverse=True):
            yield alpha, self._terms[alpha]

    def coefficient(self, alpha: MultiIndex) -> GaussianRational:
        return self._terms.get(tuple(alpha), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(a) for a in self._terms), default=-1)

    def homogeneous_degree(self):
        """Common degree of all terms, or None if f is not homogeneous.

        The zero polynomial is homogeneous of every degree; returns None too.
        """
        degs = {sum(a) for a in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None or not self._terms

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: Poly):
        if self.frame != other.frame:
            raise FrameMismatchError(f"frame mismatch: {self.frame} vs {other.frame}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return Poly.constant(self.frame, c)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            s = out.get(alpha)
            if s is None:
                out[alpha] = c
            else:
                s = s + c
                if s:
                    out[alpha] = s
                else:
                    del out[alpha]
        return Poly._from_clean(self.frame, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_clean(self.frame, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> Poly:
        c = as_scalar(c)
        if not c:
            return Poly.zero(self.frame)
        return Poly._from_clean(self.frame, {a: c * x for a, x in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict = {}
        for a, c in self._terms.items():
            for b, e in other._terms.items():
                k = tuple(x + y for x, y in zip(a, b))
                s = out.get(k)
                out[k] = c * e if s is None else s + c * e
        return Poly._from_clean(self.frame, {k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly.constant(self.frame, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, alpha: MultiIndex, c=ONE) -> Poly:
        c = as_scalar(c)
        return Poly._from_clean(
            self.frame,
            {tuple(x + y for x, y in zip(a, alpha)): c * v for a, v in self._terms.items()},
        )

    def diff(self, var, times: int = 1) -> Poly:
        """Partial derivative with respect to a variable (name or index)."""
        i = self.frame.index(var) if isinstance(var, str) else var
        out = {}
        for a, c in self._terms.items():
            if a[i] < times:
                continue
            k = prod(range(a[i] - times + 1, a[i] + 1))
            b = a[:i] + (a[i] - times,) + a[i + 1:]
            out[b] = c * k
        return Poly._from_clean(self.frame, out)

    def conjugate(self) -> Poly:
        return Poly._from_clean(self.frame, {a: c.conjugate() for a, c in self._terms.items()})

    def evaluate(self, point) -> complex:
        """Floating-point evaluation at a point (one value per frame variable)."""
        total = 0j
        for a, c in self._terms.items():
            total += complex(c) * prod(p ** e for p, e in zip(point, a))
        return total

    # -- equality / text -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.frame == other.frame and self._terms == other._terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({(0,) * self.frame.n: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.frame, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.frame}, {str(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_monomial(frame: VariableFrame, alpha: MultiIndex) -> str:
    parts = []
    for name, e in zip(frame.variables, alpha):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_term(frame, alpha, c: GaussianRational) -> str:
    mono = format_monomial(frame, alpha)
    if not mono:
        return format_scalar(c)
    if c.is_real():
        q = c.re
        sign = "-" if q < 0 else ""
        q = abs(q)
        head = mono if q.numerator == 1 else f"{q.numerator}*{mono}"
        tail = "" if q.denominator == 1 else f"/{q.denominator}"
        return f"{sign}{head}{tail}"
    if c.re == 0 and c.im < 0:
        return f"-{format_scalar(-c)}*{mono}"
    return f"{format_scalar(c)}*{mono}"


def format_poly(p: Poly) -> str:
    """Text form that :func:`apolarity_lab.parser.parse_poly` reads back."""
    if p.is_zero():
        return "0"
    out = ""
    for alpha, c in p.items():
        t = _format_term(p.frame, alpha, c)
        if not out:
            out = t
        elif t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


# -- change of frame -----------------------------------------------------


def linear_coefficients(p: Poly) -> list:
    """Coefficients of a degree-1 form, one per frame variable."""
    if p.homogeneous_degree() != 1:
        raise ValueError(f"substitution image {p} is not a linear form")
    n = p.frame.n
    return [p.coefficient(tuple(int(i == j) for i in range(n))) for j in range(n)]


def change_frame(p: Poly, target: VariableFrame, substitution: Mapping) -> Poly:
    """Apply an invertible linear substitution ``source var -> linear form in target``.

    Every variable of ``p.frame`` needs an image; the images must be linear
    forms in ``target`` whose coefficient matrix is invertible.
    """
    from .linalg import ExactMatrix, exact_rank

    src = p.frame
    if src.n != target.n:
        raise ValueError("source and target frames must have the same number of variables")
    images = []
    for v in src.variables:
        if v not in substitution:
            raise KeyError(f"no image given for variable {v!r}")
        img = substitution[v]
        if img.frame != target:
            raise FrameMismatchError(f"image of {v} lives in {img.frame}, expected {target}")
        images.append(img)
    rows = [linear_coefficients(img) for img in images]
    if exact_rank(ExactMatrix(rows)) != src.n:
        raise ValueError("substitution is not invertible")

    powers = [[Poly.constant(target, 1)] for _ in images]

    def power(i, e):
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * images[i])
        return cache[e]

    result = Poly.zero(target)
    for alpha, c in p._terms.items():
        term = Poly.constant(target, c)
        for i, e in enumerate(alpha):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def inverse_substitution(source: VariableFrame, target: VariableFrame, substitution: Mapping) -> dict:
    """Invert a linear substitution source -> target into target -> source."""
    from .linalg import ExactMatrix, inverse

    rows = [linear_coefficients(substitution[v]) for v in source.variables]
    # images[v_i] = sum_j M[i][j] t_j, so t_j = sum_i Minv[j][i] v_i
    inv = inverse(ExactMatrix(rows))
    gens = Poly.gens(source)
    out = {}
    for j, t in enumerate(target.variables):
        form = Poly.zero(source)
        for i in range(source.n):
            form = form + gens[i].scale(inv[j, i])
        out[t] = form
    return out


def uvz_to_y() -> dict:
    """u -> (y1 + i y2)/2, v -> (y1 - i y2)/2, z -> y3."""
    y1, y2, y3 = Poly.gens(Y(3))
    half = Fraction(1, 2)
    i = GaussianRational(0, 1)
    return {
        "u": (y1 + y2 * i) * half,
        "v": (y1 - y2 * i) * half,
        "z": y3,
    }


def y_to_uvz() -> dict:
    """Inverse of :func:`uvz_to_y`: y1 -> u + v, y2 -> -i(u - v), y3 -> z."""
    return inverse_substitution(UVZ, Y(3), uvz_to_y())


def rename_frame(p: Poly, target: VariableFrame) -> Poly:
    """Same exponents read in another frame with the same variable count (e.g. Y -> X)."""
    if p.frame.n != target.n:
        raise FrameMismatchError("frames differ in variable count")
    return Poly._from_clean(target, dict(p._terms))


def quadric(frame: VariableFrame) -> Poly:
    """q_n = sum of squares of the frame's variables (X or Y frame)."""
    if frame.name == "UVZ":
        raise ValueError("use the X or Y frame for the sum of squares")
    n = frame.n
    return Poly(frame, {tuple(2 * (i == j) for i in range(n)): 1 for j in range(n)})


def random_form(frame: VariableFrame, d: int, rng, density: float = 1.0, coeff_range: int = 5,
                complex_coeffs: bool = False) -> Poly:
    """Random homogeneous form of degree d with small integer coefficients."""
    terms = {}
    for alpha in monomials(frame.n, d):
        if rng.random() > density:
            continue
        re = rng.randint(-coeff_range, coeff_range)
        im = rng.randint(-coeff_range, coeff_range) if complex_coeffs else 0
        terms[alpha] = GaussianRational(re, im)
    return Poly(frame, terms)
