"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .errors import FieldMismatch, ShapeMismatch
from .linalg import LinearMap, Vec, add_scaled, first_difference, scale
from .scalars import RATIONAL, FieldSpec, Scalar, canon

Product = tuple  # tuple[tuple[int, Scalar], ...], sparse basis product


def _as_product(v: Vec) -> Product:
    return tuple(sorted((k, c) for k, c in v.items() if c))


class Algebra:
    """An associative unital algebra on the basis ``e_0, ..., e_{n-1}``.

    The product of basis elements is either supplied as a full table
    ``table[i][j] = {k: c}`` (meaning ``e_i e_j = sum c e_k``) or computed on
    demand by ``product(i, j)`` and memoised.
    """

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        basis: Sequence[str],
        unit: Vec,
        table: Sequence[Sequence[Vec]] | None = None,
        product: Callable[[int, int], Vec] | None = None,
    ):
        self.name = name
        self.field = field
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.unit = {k: canon(c) for k, c in unit.items() if c}
        n = self.dim
        if (table is None) == (product is None):
            raise ValueError("give exactly one of table= or product=")
        self._product_fn = product
        self._table: list[list[Product | None]] = [[None] * n for _ in range(n)]
        if table is not None:
            if len(table) != n or any(len(row) != n for row in table):
                raise ShapeMismatch(f"multiplication table is not {n}x{n}")
            for i in range(n):
                for j in range(n):
                    self._table[i][j] = _as_product(table[i][j])

    # products -------------------------------------------------------------
    def basis_product(self, i: int, j: int) -> Product:
        p = self._table[i][j]
        if p is None:
            p = _as_product(self._product_fn(i, j))
            self._table[i][j] = p
        return p

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            row = self._table[i]
            for j, b in v.items():
                p = row[j]
                if p is None:
                    p = self.basis_product(i, j)
                if p:
                    ab = a * b
                    for k, c in p:
                        w = out.get(k, 0) + ab * c
                        if w:
                            out[k] = w
                        else:
                            del out[k]
        return {k: canon(c) for k, c in out.items()}

    def mul_many(self, *vs: Vec) -> Vec:
        out = vs[0]
        for v in vs[1:]:
            out = self.mul(out, v)
        return out

    def table(self) -> list[list[Product]]:
        return [[self.basis_product(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def structure_entries(self) -> Iterable[tuple[int, int, int, Scalar]]:
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in self.basis_product(i, j):
                    yield i, j, k, c

    # elements ---------------------------------------------------------------
    def element(self, coeffs) -> "Element":
        if isinstance(coeffs, dict):
            return Element(self, coeffs)
        if len(coeffs) != self.dim:
            raise ShapeMismatch(f"{len(coeffs)} coefficients for dimension {self.dim}")
        return Element(self, {i: c for i, c in enumerate(coeffs) if c})

    def e(self, i: int) -> "Element":
        return Element(self, {i: 1})

    def one(self) -> "Element":
        return Element(self, self.unit)

    def zero(self) -> "Element":
        return Element(self, {})

    def index(self, label: str) -> int:
        return self.basis.index(label)

    def left_multiplication(self, v: Vec) -> LinearMap:
        return LinearMap(self.dim, self.dim, [self.mul(v, {j: 1}) for j in range(self.dim)])

    def right_multiplication(self, v: Vec) -> LinearMap:
        return LinearMap(self.dim, self.dim, [self.mul({j: 1}, v) for j in range(self.dim)])

    def inverse_of(self, v: Vec) -> Vec:
        """Two-sided inverse by a linear solve of ``v x = 1``."""
        from .linalg import solve_or_invert

        x = solve_or_invert(self.left_multiplication(v), self.unit)
        if self.mul(x, v) != self.unit:
            from .errors import Singular

            raise Singular("element has a one-sided inverse only")
        return x

    def same_structure(self, other: "Algebra") -> bool:
        return self.dim == other.dim and self.unit == other.unit and self.table() == other.table()

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} dim={self.dim} over {self.field}>"


class Element:
    """A vector in an algebra, with arithmetic."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra: Algebra, vec: Vec):
        for k in vec:
            if not 0 <= k < algebra.dim:
                raise ShapeMismatch(f"basis index {k} outside dimension {algebra.dim}")
        self.algebra = algebra
        self.vec = {k: canon(c) for k, c in vec.items() if c}

    @property
    def coeffs(self) -> list:
        return [self.vec.get(i, 0) for i in range(self.algebra.dim)]

    def _same(self, other: "Element"):
        if other.algebra is not self.algebra:
            raise FieldMismatch(f"elements of {self.algebra.name} and {other.algebra.name}")

    def __add__(self, other):
        self._same(other)
        return Element(self.algebra, add_scaled(dict(self.vec), other.vec, 1))

    def __sub__(self, other):
        self._same(other)
        return Element(self.algebra, add_scaled(dict(self.vec), other.vec, -1))

    def __neg__(self):
        return Element(self.algebra, scale(self.vec, -1))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._same(other)
            return Element(self.algebra, self.algebra.mul(self.vec, other.vec))
        return Element(self.algebra, scale(self.vec, other))

    def __rmul__(self, c):
        return Element(self.algebra, scale(self.vec, c))

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.vec == other.vec
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.vec.items())))

    def is_zero(self) -> bool:
        return not self.vec

    def first_difference(self, other: "Element"):
        return first_difference(self.vec, other.vec)

    def __repr__(self):
        if not self.vec:
            return "0"
        parts = [f"({c})*{self.algebra.basis[k]}" for k, c in sorted(self.vec.items())]
        return " + ".join(parts)


def matrix_algebra(n: int, field: FieldSpec = RATIONAL, name: str | None = None) -> Algebra:
    """End(K^n) with basis E_{kb} at index ``k*n + b`` (row k, column b)."""
    basis = [f"E{k},{b}" for k in range(n) for b in range(n)]

    def product(i: int, j: int) -> Vec:
        k, b = divmod(i, n)
        b2, c = divmod(j, n)
        return {k * n + c: 1} if b == b2 else {}

    return Algebra(name or f"End({n})", field, basis, {k * n + k: 1 for k in range(n)}, product=product)


def endomorphism_vector(M: LinearMap) -> Vec:
    """Flatten a square map to End(K^n) coordinates (row-major)."""
    n = M.domain
    return {k * n + b: c for b, col in enumerate(M.columns) for k, c in col.items()}
