"""Elements of tensor products of algebras.

Coefficients are keyed by multi-indices ``(i_1, ..., i_k)``; the dense
order (see :attr:`TensorElement.coeffs`) is row-major with the first factor
slowest.
"""

from __future__ import annotations

from itertools import product as cartesian
from math import prod
from typing import Mapping, Sequence

from .algebra import Algebra, Element
from .errors import FactorMismatch, FieldMismatch, LegMismatch
from .linalg import LinearMap
from .scalars import Scalar, canon


class TensorElement:
    """A vector in ``A_1 ⊗ ... ⊗ A_k``."""

    __slots__ = ("factors", "terms")

    def __init__(self, factors: Sequence[Algebra], terms: Mapping[tuple, Scalar]):
        self.factors = tuple(factors)
        fields = {f.field for f in self.factors}
        if len(fields) > 1:
            raise FieldMismatch("tensor factors over different fields")
        self.terms = {k: canon(c) for k, c in terms.items() if c}

    # construction ---------------------------------------------------------
    @classmethod
    def pure(cls, *elements: Element) -> "TensorElement":
        """``e_1 ⊗ e_2 ⊗ ...`` for single-algebra elements."""
        factors = [e.algebra for e in elements]
        terms: dict = {(): 1}
        for e in elements:
            nxt: dict = {}
            for key, c in terms.items():
                for k, d in e.vec.items():
                    nxt[key + (k,)] = c * d
            terms = nxt
        return cls(factors, terms)

    @classmethod
    def one(cls, factors: Sequence[Algebra]) -> "TensorElement":
        return cls.pure(*(f.one() for f in factors))

    @classmethod
    def from_element(cls, e: Element) -> "TensorElement":
        return cls([e.algebra], {(k,): c for k, c in e.vec.items()})

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.dim for f in self.factors)

    @property
    def coeffs(self) -> list:
        dims = self.shape
        out = [0] * prod(dims)
        for key, c in self.terms.items():
            idx = 0
            for d, k in zip(dims, key):
                idx = idx * d + k
            out[idx] = c
        return out

    # arithmetic --------------------------------------------------------------
    def _check(self, other: "TensorElement"):
        if len(other.factors) != len(self.factors) or any(
            a is not b for a, b in zip(self.factors, other.factors)
        ):
            raise FactorMismatch("tensor elements live in different tensor products")

    def _combine(self, other: "TensorElement", sign: int) -> "TensorElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            w = out.get(k, 0) + sign * c
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return TensorElement(self.factors, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return TensorElement(self.factors, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return TensorElement(self.factors, {k: c * other for k, c in self.terms.items()})

    def __rmul__(self, c):
        return TensorElement(self.factors, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            len(self.factors) == len(other.factors)
            and all(a is b for a, b in zip(self.factors, other.factors))
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def differences(self, other: "TensorElement", limit: int | None = None) -> list[tuple]:
        """Sorted ``(multi_index, lhs, rhs)`` triples where the two differ."""
        self._check(other)
        keys = sorted(k for k in set(self.terms) | set(other.terms)
                      if self.terms.get(k, 0) != other.terms.get(k, 0))
        if limit is not None:
            keys = keys[:limit]
        return [(k, self.terms.get(k, 0), other.terms.get(k, 0)) for k in keys]

    # leg manipulation ----------------------------------------------------------
    def embed(self, legs: Sequence[int], ambient: Sequence[Algebra]) -> "TensorElement":
        return tensor_embed(self, legs, ambient)

    def permute(self, perm: Sequence[int]) -> "TensorElement":
        """Leg ``perm[i]`` of the result is leg ``i`` of ``self``."""
        factors = [None] * len(perm)
        for i, p in enumerate(perm):
            factors[p] = self.factors[i]
        terms = {}
        for key, c in self.terms.items():
            new = [0] * len(perm)
            for i, p in enumerate(perm):
                new[p] = key[i]
            terms[tuple(new)] = c
        return TensorElement(factors, terms)

    def swap(self) -> "TensorElement":
        return self.permute((1, 0))

    def map_leg(self, leg: int, fn: LinearMap, target: Algebra) -> "TensorElement":
        """Apply a linear map to one leg (``id ⊗ fn ⊗ id``)."""
        if fn.domain != self.factors[leg].dim or fn.codomain != target.dim:
            raise LegMismatch("linear map does not fit the leg")
        factors = list(self.factors)
        factors[leg] = target
        out: dict = {}
        for key, c in self.terms.items():
            for k, d in fn.columns[key[leg]].items():
                new = key[:leg] + (k,) + key[leg + 1:]
                w = out.get(new, 0) + c * d
                if w:
                    out[new] = w
                else:
                    out.pop(new, None)
        return TensorElement(factors, out)

    def __repr__(self):
        names = "⊗".join(f.name for f in self.factors)
        return f"TensorElement[{names}]({len(self.terms)} terms)"


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    """Factorwise product in the tensor product algebra."""
    s._check(t)
    prods = [f.basis_product for f in s.factors]
    legs = range(len(prods))
    out: dict = {}
    get = out.get
    for I, c in s.terms.items():
        for J, d in t.terms.items():
            partial = [((), c * d)]
            for leg in legs:
                p = prods[leg](I[leg], J[leg])
                if not p:
                    partial = None
                    break
                if len(p) == 1:
                    (k, w), = p
                    if w == 1:
                        partial = [(key + (k,), v) for key, v in partial]
                    else:
                        partial = [(key + (k,), v * w) for key, v in partial]
                else:
                    partial = [(key + (k,), v * w) for key, v in partial for k, w in p]
            if partial is None:
                continue
            for key, v in partial:
                out[key] = get(key, 0) + v
    return TensorElement(s.factors, out)


def tensor_embed(e, legs: Sequence[int], ambient: Sequence[Algebra]) -> TensorElement:
    """Place ``e`` on the given legs of ``ambient``; the unit elsewhere.

    ``legs[i]`` is the ambient position of the i-th leg of ``e``, so
    ``R.embed((1, 0), [D, D])`` is ``R_21``.
    """
    if isinstance(e, Element):
        e = TensorElement.from_element(e)
    ambient = tuple(ambient)
    legs = tuple(legs)
    if len(legs) != e.arity:
        raise LegMismatch(f"{len(legs)} legs given for an element of arity {e.arity}")
    if len(set(legs)) != len(legs) or any(not 0 <= l < len(ambient) for l in legs):
        raise LegMismatch(f"legs {legs} invalid for an ambient of arity {len(ambient)}")
    for i, l in enumerate(legs):
        if ambient[l] is not e.factors[i]:
            raise LegMismatch(f"leg {l} holds {ambient[l].name}, element factor is {e.factors[i].name}")
    rest = [l for l in range(len(ambient)) if l not in legs]
    unit_terms = [list(ambient[l].unit.items()) for l in rest]
    out: dict = {}
    for combo in cartesian(*unit_terms):
        cu = 1
        for _, c in combo:
            cu = cu * c
        for key, c in e.terms.items():
            new = [0] * len(ambient)
            for i, l in enumerate(legs):
                new[l] = key[i]
            for (k, _), l in zip(combo, rest):
                new[l] = k
            new = tuple(new)
            out[new] = out.get(new, 0) + c * cu
    return TensorElement(ambient, out)


def tensor_inverse(t: TensorElement) -> TensorElement:
    """Two-sided inverse in the tensor product algebra by a linear solve."""
    from .errors import NotInvertible, Singular
    from .linalg import solve_or_invert

    dims = t.shape
    size = prod(dims)
    keys = list(cartesian(*[range(d) for d in dims]))
    index = {k: i for i, k in enumerate(keys)}
    cols = []
    for k in keys:
        col = tensor_multiply(t, TensorElement(t.factors, {k: 1}))
        cols.append({index[key]: c for key, c in col.terms.items()})
    one = TensorElement.one(t.factors)
    try:
        x = solve_or_invert(LinearMap(size, size, cols), {index[k]: c for k, c in one.terms.items()})
    except Singular as exc:
        raise NotInvertible(f"tensor element is not invertible: {exc}") from exc
    xt = TensorElement(t.factors, {keys[i]: c for i, c in x.items()})
    if tensor_multiply(xt, t) != one:
        raise NotInvertible("tensor element has a one-sided inverse only")
    return xt
