"""Hopf algebras as structure constants, axiom checks, duals and pairings.

Conventions: ``comult[i]`` maps ``(j, k)`` to the coefficient of
``e_j ⊗ e_k`` in ``Δ(e_i)``; the antipode is a :class:`LinearMap` whose
column ``i`` is ``S(e_i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .algebra import Algebra, Element
from .errors import ShapeMismatch, Singular
from .linalg import LinearMap, Subspace, Vec, add_scaled, solve_or_invert
from .reports import Report
from .scalars import FieldSpec, Scalar, canon
from .tensors import TensorElement

ANCHOR_STRUCTURE = "hopf-axioms: (m, Delta, epsilon, S)"
ANCHOR_PAIRING = "hopf-pairing:"


class HopfAlgebra(Algebra):
    """A finite-dimensional Hopf algebra.

    ``antipode_inverse`` is computed eagerly; it is ``None`` only for
    (invalid) data whose antipode is singular, which :func:`verify_hopf`
    then reports.
    """

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        basis: Sequence[str],
        unit: Vec,
        comult: Sequence[dict],
        counit: Sequence[Scalar],
        antipode,
        table=None,
        product=None,
        antipode_inverse: LinearMap | None = None,
    ):
        super().__init__(name, field, basis, unit, table=table, product=product)
        n = self.dim
        if len(comult) != n or len(counit) != n:
            raise ShapeMismatch("comultiplication/counit do not match the dimension")
        self.comult = [{jk: canon(c) for jk, c in d.items() if c} for d in comult]
        for d in self.comult:
            if any(not (0 <= j < n and 0 <= k < n) for j, k in d):
                raise ShapeMismatch("comultiplication index out of range")
        self.counit = [canon(c) for c in counit]
        if not isinstance(antipode, LinearMap):
            antipode = LinearMap(n, n, list(antipode))
        if antipode.domain != n or antipode.codomain != n:
            raise ShapeMismatch("antipode has the wrong shape")
        self.antipode = antipode
        if antipode_inverse is None:
            try:
                antipode_inverse = solve_or_invert(antipode)
            except Singular:
                antipode_inverse = None
        self.antipode_inverse = antipode_inverse

    # structure maps on sparse vectors -------------------------------------
    def coproduct(self, v: Vec) -> dict:
        out: dict = {}
        for i, c in v.items():
            for jk, d in self.comult[i].items():
                w = out.get(jk, 0) + c * d
                if w:
                    out[jk] = w
                else:
                    out.pop(jk, None)
        return out

    def eps(self, v: Vec) -> Scalar:
        return canon(sum((c * self.counit[i] for i, c in v.items()), 0))

    def S(self, v: Vec) -> Vec:
        return self.antipode(v)

    def Sinv(self, v: Vec) -> Vec:
        return self.antipode_inverse(v)

    def comult_entries(self):
        for i, d in enumerate(self.comult):
            for (j, k), c in d.items():
                yield i, j, k, c

    def Delta(self, a: Element) -> TensorElement:
        return TensorElement([self, self], self.coproduct(a.vec))


# ----------------------------------------------------------------------
# Iterated coproducts
# ----------------------------------------------------------------------

def _coproduct_leg(A: HopfAlgebra, terms: dict, leg: int) -> dict:
    out: dict = {}
    for key, c in terms.items():
        for (j, k), d in A.comult[key[leg]].items():
            new = key[:leg] + (j, k) + key[leg + 1:]
            w = out.get(new, 0) + c * d
            if w:
                out[new] = w
            else:
                out.pop(new, None)
    return out


def iterated_coproduct(a, k: int, A: HopfAlgebra | None = None, bracketing: str = "left") -> TensorElement:
    """``Δ^{(k)}(a)`` in ``A^{⊗k}`` (Sweedler ``a_1 ⊗ ... ⊗ a_k``).

    ``bracketing='left'`` applies Δ to the first leg each time, ``'right'``
    to the last; coassociativity makes them agree.
    """
    if isinstance(a, Element):
        A = a.algebra
        vec = a.vec
    else:
        vec = a
    if k < 1:
        raise ValueError("k must be at least 1")
    terms = {(i,): c for i, c in vec.items()}
    for step in range(k - 1):
        leg = 0 if bracketing == "left" else step
        terms = _coproduct_leg(A, terms, leg)
    return TensorElement([A] * k, terms)


def coproduct_terms(A: HopfAlgebra, i: int, k: int) -> tuple:
    """Cached ``Δ^{(k)}(e_i)`` as a tuple of ``(multi_index, coeff)``."""
    cache = A.__dict__.setdefault("_copow_cache", {})
    key = (i, k)
    if key not in cache:
        terms = {(i,): 1}
        for _ in range(k - 1):
            terms = _coproduct_leg(A, terms, 0)
        cache[key] = tuple(sorted((t, canon(c)) for t, c in terms.items() if c))
    return cache[key]


# ----------------------------------------------------------------------
# Axiom checks
# ----------------------------------------------------------------------

def fmt_vec(field: FieldSpec, v) -> dict:
    return {",".join(map(str, k)) if isinstance(k, tuple) else str(k): field.format(c)
            for k, c in sorted(v.items())}


def _diff(lhs: dict, rhs: dict) -> dict:
    out = dict(lhs)
    for k, c in rhs.items():
        w = out.get(k, 0) - c
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def witness(field: FieldSpec, at, lhs=None, rhs=None, **extra) -> dict:
    w = {"at": list(at) if isinstance(at, (tuple, list)) else at}
    if lhs is not None:
        w["lhs"] = fmt_vec(field, lhs)
    if rhs is not None:
        w["rhs"] = fmt_vec(field, rhs)
    w.update(extra)
    return w


def check_associative(alg: Algebra, triples=None):
    """First ``(i, j, k)`` with ``(e_i e_j) e_k != e_i (e_j e_k)``, as a witness."""
    n = alg.dim
    bp = alg.basis_product
    it = triples if triples is not None else ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    for i, j, k in it:
        diff: dict = {}
        for t, c in bp(i, j):
            for l, d in bp(t, k):
                diff[l] = diff.get(l, 0) + c * d
        for t, c in bp(j, k):
            for l, d in bp(i, t):
                diff[l] = diff.get(l, 0) - c * d
        if any(diff.values()):
            lhs = alg.mul(alg.mul({i: 1}, {j: 1}), {k: 1})
            rhs = alg.mul({i: 1}, alg.mul({j: 1}, {k: 1}))
            return witness(alg.field, (i, j, k), lhs, rhs)
    return None


def check_unital(alg: Algebra):
    one = alg.unit
    for i in range(alg.dim):
        e = {i: 1}
        left = alg.mul(one, e)
        if left != e:
            return witness(alg.field, (i,), left, e, side="left")
        right = alg.mul(e, one)
        if right != e:
            return witness(alg.field, (i,), right, e, side="right")
    return None


def _tensor_mul2(A: Algebra, B: Algebra, u: dict, v: dict) -> dict:
    out: dict = {}
    for (a, b), c in u.items():
        for (a2, b2), d in v.items():
            pa = A.basis_product(a, a2)
            if not pa:
                continue
            pb = B.basis_product(b, b2)
            cd = c * d
            for k, x in pa:
                for l, y in pb:
                    out[(k, l)] = out.get((k, l), 0) + cd * x * y
    return {k: canon(c) for k, c in out.items() if c}


def verify_hopf(A: HopfAlgebra) -> Report:
    """Check every Hopf algebra axiom exactly; witnesses name the first failure."""
    rep = Report("hopf", A.name)
    n = A.dim
    F = A.field
    rep.add("associativity", ANCHOR_STRUCTURE, check_associative(A))
    rep.add("unit", ANCHOR_STRUCTURE, check_unital(A))

    w = None
    for i in range(n):
        left = _coproduct_leg(A, {(i,): 1}, 0)
        left = _coproduct_leg(A, left, 0)
        right = _coproduct_leg(A, {(i,): 1}, 0)
        right = _coproduct_leg(A, right, 1)
        if _diff(left, right):
            w = witness(F, (i,), left, right)
            break
    rep.add("coassociativity", ANCHOR_STRUCTURE, w)

    w = None
    for i in range(n):
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), c in A.comult[i].items():
            add_scaled(lhs, {k: 1}, c * A.counit[j])
            add_scaled(rhs, {j: 1}, c * A.counit[k])
        if lhs != {i: 1} or rhs != {i: 1}:
            w = witness(F, (i,), lhs, rhs)
            break
    rep.add("counit", ANCHOR_STRUCTURE, w)

    w = None
    one_one = {(a, b): canon(c * d) for a, c in A.unit.items() for b, d in A.unit.items()}
    if A.coproduct(A.unit) != one_one:
        w = witness(F, ("unit",), A.coproduct(A.unit), one_one)
    else:
        for i in range(n):
            for j in range(n):
                lhs = A.coproduct(dict(A.basis_product(i, j)))
                rhs = _tensor_mul2(A, A, A.comult[i], A.comult[j])
                if _diff(lhs, rhs):
                    w = witness(F, (i, j), lhs, rhs)
                    break
            if w:
                break
    rep.add("comultiplication_is_algebra_map", ANCHOR_STRUCTURE, w)

    w = None
    if A.eps(A.unit) != 1:
        w = {"at": ["unit"], "lhs": F.format(A.eps(A.unit)), "rhs": "1"}
    else:
        for i in range(n):
            for j in range(n):
                lhs = A.eps(dict(A.basis_product(i, j)))
                rhs = canon(A.counit[i] * A.counit[j])
                if lhs != rhs:
                    w = {"at": [i, j], "lhs": F.format(lhs), "rhs": F.format(rhs)}
                    break
            if w:
                break
    rep.add("counit_is_algebra_map", ANCHOR_STRUCTURE, w)

    w = None
    for i in range(n):
        target = {k: canon(A.counit[i] * c) for k, c in A.unit.items() if A.counit[i]}
        left: dict = {}
        right: dict = {}
        for (j, k), c in A.comult[i].items():
            add_scaled(left, A.mul(A.S({j: 1}), {k: 1}), c)
            add_scaled(right, A.mul({j: 1}, A.S({k: 1})), c)
        if left != target:
            w = witness(F, (i,), left, target, side="m(S⊗id)Δ")
            break
        if right != target:
            w = witness(F, (i,), right, target, side="m(id⊗S)Δ")
            break
    rep.add("antipode", ANCHOR_STRUCTURE, w)

    rep.add("antipode_invertible", ANCHOR_STRUCTURE,
            None if A.antipode_inverse is not None else {"at": [], "detail": "S is singular"})
    return rep


# ----------------------------------------------------------------------
# Twists and duals
# ----------------------------------------------------------------------

def twist(A: HopfAlgebra, which: str) -> HopfAlgebra:
    """``A^{op}`` (opposite product) or ``A^{cop}`` (opposite coproduct), antipode S⁻¹."""
    if A.antipode_inverse is None:
        raise Singular(f"{A.name} has a singular antipode")
    if which == "op":
        return HopfAlgebra(
            _twisted_name(A.name, "op"), A.field, A.basis, A.unit,
            comult=A.comult, counit=A.counit,
            antipode=A.antipode_inverse, antipode_inverse=A.antipode,
            product=lambda i, j: dict(A.basis_product(j, i)),
        )
    if which == "cop":
        return HopfAlgebra(
            _twisted_name(A.name, "cop"), A.field, A.basis, A.unit,
            comult=[{(k, j): c for (j, k), c in d.items()} for d in A.comult],
            counit=A.counit,
            antipode=A.antipode_inverse, antipode_inverse=A.antipode,
            product=lambda i, j: dict(A.basis_product(i, j)),
        )
    raise ValueError(f"twist must be 'op' or 'cop', not {which!r}")


def _twisted_name(name: str, tag: str) -> str:
    suffix = f"^{tag}"
    return name[: -len(suffix)] if name.endswith(suffix) else name + suffix


def dual(A: HopfAlgebra, name: str | None = None, labels: Sequence[str] | None = None):
    """The dual Hopf algebra on the dual basis, with its (identity) pairing."""
    n = A.dim
    table = [[{} for _ in range(n)] for _ in range(n)]
    for k, i, j, c in A.comult_entries():
        table[i][j][k] = c
    comult: list[dict] = [{} for _ in range(n)]
    for i, j, k, c in A.structure_entries():
        comult[k][(i, j)] = c
    antipode = LinearMap(n, n, [{i: A.antipode.columns[i][j] for i in range(n) if A.antipode.columns[i].get(j)}
                                for j in range(n)])
    antipode_inverse = None
    if A.antipode_inverse is not None:
        Si = A.antipode_inverse
        antipode_inverse = LinearMap(n, n, [{i: Si.columns[i][j] for i in range(n) if Si.columns[i].get(j)}
                                            for j in range(n)])
    Ad = HopfAlgebra(
        name or _dual_name(A.name), A.field,
        labels or [_dual_label(b) for b in A.basis],
        unit={i: c for i, c in enumerate(A.counit) if c},
        comult=comult,
        counit=[A.unit.get(i, 0) for i in range(n)],
        antipode=antipode,
        antipode_inverse=antipode_inverse,
        table=table,
    )
    return Ad, HopfPairing(A, Ad, [[int(i == j) for j in range(n)] for i in range(n)])


def _dual_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


def _dual_label(label: str) -> str:
    return label[:-1] if label.endswith("*") else label + "*"


def same_hopf_structure(A: HopfAlgebra, B: HopfAlgebra) -> bool:
    return (
        A.same_structure(B)
        and A.comult == B.comult
        and A.counit == B.counit
        and A.antipode == B.antipode
    )


# ----------------------------------------------------------------------
# Pairings
# ----------------------------------------------------------------------

@dataclass
class HopfPairing:
    """``matrix[i][j] = ⟨e_i, f_j⟩`` between ``left`` and ``right``."""

    left: HopfAlgebra
    right: HopfAlgebra
    matrix: list

    def __call__(self, a: Vec, x: Vec) -> Scalar:
        P = self.matrix
        return canon(sum((c * d * P[i][j] for i, c in a.items() for j, d in x.items()), 0))

    def is_canonical(self) -> bool:
        n = self.left.dim
        return all(self.matrix[i][j] == int(i == j) for i in range(n) for j in range(n))


def verify_pairing(P: HopfPairing) -> Report:
    """Hopf pairing axioms (products, coproducts, units, antipodes) plus nondegeneracy."""
    A, B, M = P.left, P.right, P.matrix
    F = A.field
    rep = Report("pairing", f"{A.name} x {B.name}")
    if A.dim != B.dim or len(M) != A.dim or any(len(r) != B.dim for r in M):
        raise ShapeMismatch("pairing matrix does not match the algebras")
    n, m = A.dim, B.dim

    def fail(at, lhs, rhs):
        return {"at": list(at), "lhs": F.format(lhs), "rhs": F.format(rhs)}

    w = None
    for i in range(n):
        for j in range(n):
            prod = dict(A.basis_product(i, j))
            for k in range(m):
                lhs = P(prod, {k: 1})
                rhs = canon(sum((c * M[i][p] * M[j][q] for (p, q), c in B.comult[k].items()), 0))
                if lhs != rhs:
                    w = fail((i, j, k), lhs, rhs)
                    break
            if w:
                break
        if w:
            break
    rep.add("pairing_product_coproduct", ANCHOR_PAIRING + " <ab,x> = <a⊗b, Δx>", w)

    w = None
    for i in range(n):
        for j in range(m):
            for k in range(m):
                lhs = P({i: 1}, dict(B.basis_product(j, k)))
                rhs = canon(sum((c * M[p][j] * M[q][k] for (p, q), c in A.comult[i].items()), 0))
                if lhs != rhs:
                    w = fail((i, j, k), lhs, rhs)
                    break
            if w:
                break
        if w:
            break
    rep.add("pairing_coproduct_product", ANCHOR_PAIRING + " <a,xy> = <Δa, x⊗y>", w)

    w = None
    for j in range(m):
        lhs, rhs = P(A.unit, {j: 1}), B.counit[j]
        if lhs != rhs:
            w = fail(("unit_A", j), lhs, rhs)
            break
    if w is None:
        for i in range(n):
            lhs, rhs = P({i: 1}, B.unit), A.counit[i]
            if lhs != rhs:
                w = fail((i, "unit_B"), lhs, rhs)
                break
    rep.add("pairing_units_counits", ANCHOR_PAIRING + " <1,-> = ε, <-,1> = ε", w)

    w = None
    for i in range(n):
        Si = A.S({i: 1})
        for j in range(m):
            lhs, rhs = P(Si, {j: 1}), P({i: 1}, B.S({j: 1}))
            if lhs != rhs:
                w = fail((i, j), lhs, rhs)
                break
        if w:
            break
    rep.add("pairing_antipode", ANCHOR_PAIRING + " <Sa,x> = <a,Sx>", w)

    r = Subspace(m, [{j: c for j, c in enumerate(row) if c} for row in M]).dim
    rep.add("pairing_nondegenerate", "non-degenerate Hopf pairing",
            None if r == n == m else {"at": [], "detail": f"pairing matrix has rank {r}"})
    return rep


@dataclass
class DualBasisPair:
    """Dual bases ``(a_i)`` of A and ``(x^i)`` of A* with ``⟨a_i, x^j⟩ = δ_ij``.

    Both families are stored as coordinate vectors in the stored bases.
    """

    pairing: HopfPairing
    a: list = dc_field(default_factory=list)
    x: list = dc_field(default_factory=list)

    @classmethod
    def from_pairing(cls, P: HopfPairing) -> "DualBasisPair":
        n = P.left.dim
        if P.is_canonical():
            a = [{i: 1} for i in range(n)]
            return cls(P, a, [{i: 1} for i in range(n)])
        Pinv = solve_or_invert(LinearMap.from_matrix(P.matrix))
        return cls(P, [{i: 1} for i in range(n)], [dict(c) for c in Pinv.columns])

    def check(self) -> bool:
        n = len(self.a)
        return all(self.pairing(self.a[i], self.x[j]) == int(i == j) for i in range(n) for j in range(n))
