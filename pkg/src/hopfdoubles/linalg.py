"""Exact linear algebra on sparse vectors.

Vectors are ``dict[int, Scalar]`` with zero entries omitted.  A
:class:`LinearMap` stores the image of each domain basis vector (its
columns).  Elimination is Gauss-Jordan over the field; :class:`Subspace`
keeps its rows in reduced row echelon form, so the stored basis is
canonical for the subspace.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ShapeMismatch, Singular
from .scalars import Scalar, canon, div, inv

Vec = dict  # dict[int, Scalar]


def add_scaled(target: Vec, src: Vec, c: Scalar) -> Vec:
    """``target += c * src`` in place, dropping cancelled entries."""
    if not c:
        return target
    for k, v in src.items():
        w = target.get(k, 0) + c * v
        if w:
            target[k] = canon(w)
        else:
            target.pop(k, None)
    return target


def scale(v: Vec, c: Scalar) -> Vec:
    if not c:
        return {}
    return {k: canon(c * x) for k, x in v.items()}


def vec_sub(a: Vec, b: Vec) -> Vec:
    return add_scaled(dict(a), b, -1)


def dense(v: Vec, n: int) -> list:
    return [v.get(i, 0) for i in range(n)]


def sparse(values: Iterable) -> Vec:
    return {i: canon(x) for i, x in enumerate(values) if x}


def first_difference(a: Vec, b: Vec):
    """Smallest index where ``a`` and ``b`` differ, or None."""
    diff = [k for k in set(a) | set(b) if a.get(k, 0) != b.get(k, 0)]
    return min(diff) if diff else None


class Subspace:
    """A subspace of K^n held as rows in reduced row echelon form."""

    def __init__(self, n: int, vectors: Iterable[Vec] = ()):
        self.n = n
        self.rows: dict[int, Vec] = {}  # pivot column -> row with 1 at pivot
        for v in vectors:
            self.insert(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[Vec]:
        return [dict(self.rows[p]) for p in self.pivots]

    def reduce(self, v: Vec) -> Vec:
        """Remainder of ``v`` modulo the subspace (supported off the pivots)."""
        v = {k: c for k, c in v.items() if c}
        for p in [p for p in v if p in self.rows]:
            c = v.get(p, 0)
            if c:
                add_scaled(v, self.rows[p], -c)
        return v

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def insert(self, v: Vec) -> bool:
        """Add ``v`` to the span; returns True when the dimension grew."""
        r = self.reduce(v)
        if not r:
            return False
        q = min(r)
        r = scale(r, inv(r[q]))
        for row in self.rows.values():
            c = row.get(q, 0)
            if c:
                add_scaled(row, r, -c)
        self.rows[q] = r
        return True

    def complement_coords(self) -> list[int]:
        """Non-pivot coordinates, a canonical complement basis."""
        piv = self.rows
        return [i for i in range(self.n) if i not in piv]


class LinearMap:
    """A linear map K^domain -> K^codomain given by its columns."""

    def __init__(self, domain: int, codomain: int, columns: Sequence[Vec]):
        if len(columns) != domain:
            raise ShapeMismatch(f"{len(columns)} columns for a domain of dimension {domain}")
        for col in columns:
            if any(not (0 <= k < codomain) for k in col):
                raise ShapeMismatch("column index outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self.columns = [dict(c) for c in columns]

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[Scalar]]) -> "LinearMap":
        m = len(rows)
        n = len(rows[0]) if m else 0
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("ragged matrix")
        cols = [{i: canon(rows[i][j]) for i in range(m) if rows[i][j]} for j in range(n)]
        return cls(n, m, cols)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, [{i: 1} for i in range(n)])

    def matrix(self) -> list[list]:
        out = [[0] * self.domain for _ in range(self.codomain)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                out[i][j] = c
        return out

    def row_vectors(self) -> list[Vec]:
        rows: list[Vec] = [{} for _ in range(self.codomain)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows

    def __call__(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            add_scaled(out, self.columns[j], c)
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``."""
        if other.codomain != self.domain:
            raise ShapeMismatch("composition of incompatible maps")
        return LinearMap(other.domain, self.codomain, [self(c) for c in other.columns])

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return self.compose(other)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.domain, self.codomain, self.columns) == (other.domain, other.codomain, other.columns)

    def rank(self) -> int:
        return Subspace(self.codomain, self.columns).dim

    def kernel(self) -> list[Vec]:
        return kernel(self)

    def inverse(self) -> "LinearMap":
        return solve_or_invert(self)

    def __repr__(self):
        return f"LinearMap({self.domain} -> {self.codomain})"


def kernel_of_rows(rows: Iterable[Vec], n: int) -> list[Vec]:
    """Basis of {v : r·v = 0 for every row r}, one vector per free column."""
    space = Subspace(n, rows)
    piv = space.rows
    basis = []
    for f in range(n):
        if f in piv:
            continue
        v = {f: 1}
        for p, row in piv.items():
            c = row.get(f, 0)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def kernel(M: LinearMap) -> list[Vec]:
    """Exact null space basis of ``M``."""
    return kernel_of_rows(M.row_vectors(), M.domain)


def rank(M: LinearMap) -> int:
    return M.rank()


def solve_or_invert(M: LinearMap, rhs: Vec | None = None):
    """Solve ``M v = rhs`` or, with no right-hand side, return ``M⁻¹``.

    Raises :class:`Singular` when the system has no (unique) solution.
    """
    n, m = M.domain, M.codomain
    if rhs is None and n != m:
        raise ShapeMismatch(f"cannot invert a {m}x{n} map")
    # augmented rows [M | rhs or identity]
    rows = M.row_vectors()
    if rhs is None:
        extra = [{n + i: 1} for i in range(m)]
    else:
        if any(not (0 <= k < m) for k in rhs):
            raise ShapeMismatch("right-hand side outside the codomain")
        extra = [{n: rhs[i]} if rhs.get(i) else {} for i in range(m)]
    aug = [{**r, **e} for r, e in zip(rows, extra)]
    width = n + (m if rhs is None else 1)
    space = Subspace(width, aug)
    piv = space.rows
    if any(p >= n for p in piv):
        raise Singular("inconsistent linear system")
    if len(piv) < n:
        raise Singular(f"matrix has rank {len(piv)} < {n}")
    if rhs is not None:
        return {p: row[n] for p, row in piv.items() if row.get(n)}
    cols: list[Vec] = [{} for _ in range(m)]
    for p, row in piv.items():
        for k, c in row.items():
            if k >= n:
                cols[k - n][p] = c
    return LinearMap(m, n, cols)
