"""Exact dense and sparse linear algebra over Q(i).

Pivoting always takes the first nonzero entry in column order; with exact
arithmetic the choice only affects speed.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, GaussianRational, as_scalar


class ExactMatrix:
    """Dense row-major matrix of Gaussian rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Sequence[Sequence], cols: int | None = None):
        data = [tuple(as_scalar(x) for x in r) for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self._data = tuple(data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def to_lists(self) -> list:
        return [list(r) for r in self._data]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([list(c) for c in zip(*self._data)] if self.rows else [], self.rows)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ot = other.transpose()._data
            return ExactMatrix([[_dot(r, c) for c in ot] for r in self._data], other.cols)
        vec = [as_scalar(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [_dot(r, vec) for r in self._data]

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.cols)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.cols)

    def scale(self, c) -> ExactMatrix:
        c = as_scalar(c)
        return ExactMatrix([[c * a for a in r] for r in self._data], self.cols)

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self._data)
        return f"ExactMatrix([{body}])"


def _dot(a, b) -> GaussianRational:
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def rref(m: ExactMatrix):
    """Reduced row echelon form.  Returns (rows as lists, pivot columns)."""
    a = [list(r) for r in m._data]
    pivots = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv if x else x for x in a[r]]
        pivot_row = a[r]
        for i in range(m.rows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y if y else x for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a[:r], pivots


def exact_rank(m: ExactMatrix) -> int:
    # eliminate along the shorter side
    if m.rows > m.cols:
        m = m.transpose()
    return len(rref(m)[1])


def kernel_basis(m: ExactMatrix) -> list:
    """Basis of {x : m x = 0}, one vector per free column."""
    rows, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for row, pc in zip(rows, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def inverse(m: ExactMatrix) -> ExactMatrix:
    if m.rows != m.cols:
        raise ValueError("matrix is not square")
    n = m.rows
    aug = ExactMatrix([list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m._data)])
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return ExactMatrix([r[n:] for r in rows[:n]], n)


class EchelonSpace:
    """Incrementally built subspace of a sparse coordinate space.

    Vectors are dicts ``key -> scalar``; keys must be mutually comparable.
    Each stored basis row is normalised to have leading coefficient 1 at its
    pivot, where the pivot is the largest key under ``key`` ordering.  This
    is a fully sparse forward elimination, not a reduced form.
    """

    def __init__(self, key=None):
        self._key = key
        self._rows: dict = {}

    def __len__(self):
        return len(self._rows)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _lead(self, vec):
        return max(vec, key=self._key) if self._key else max(vec)

    def reduce(self, vec: dict) -> dict:
        """Remainder of vec after eliminating stored pivots."""
        vec = {k: as_scalar(c) for k, c in vec.items() if c}
        rows = self._rows
        done = {}
        while vec:
            p = self._lead(vec)
            c = vec.pop(p)
            row = rows.get(p)
            if row is None:
                done[p] = c
                continue
            for k, x in row.items():
                if k == p:
                    continue
                # row is stored with pivot coefficient 1
                s = vec.get(k, ZERO) - c * x
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
            # done entries never collide with later keys: keys only decrease
        return done

    def add(self, vec: dict) -> bool:
        """Insert vec; return True if it enlarged the space."""
        r = self.reduce(vec)
        if not r:
            return False
        p = self._lead(r)
        inv = r[p].inverse()
        self._rows[p] = {k: x * inv for k, x in r.items()}
        return True

    def extend(self, vecs: Iterable[dict]) -> int:
        added = 0
        for v in vecs:
            added += self.add(v)
        return added

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis(self) -> list:
        return [dict(r) for _, r in sorted(self._rows.items(), key=lambda kv: self._key(kv[0]) if self._key else kv[0], reverse=True)]

    def pivots(self) -> set:
        return set(self._rows)
