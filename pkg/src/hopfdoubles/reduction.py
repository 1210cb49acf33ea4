"""Quantum Hamiltonian reduction at the augmentation ideal.

The main use is ``V = H(T(A)^op)`` with the moment map ``mu_L`` restricted
to ``A ⊂ D(A)``, where the reduction is isomorphic to ``H(A)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import Algebra
from .doubles import DoublePackage
from .errors import IllDefinedProduct, NotHomomorphism, NotInvariant
from .hopf import HopfAlgebra, _diff, check_associative, witness
from .linalg import LinearMap, Subspace, Vec, add_scaled, kernel_of_rows
from .reports import Report
from .scalars import canon

A_REDUCTION = "V//mu(A) = (V/Vmu(I))^A, a∘v = mu(a_1) v mu(S a_2)"
A_AUGMENTATION = "augmentation ideal I_A = ker ε"
A_PHI = "inv-iso: a#x ↦ (a ⊗ x_1 S x_3) ⊗ x_2"
A_RESIDUAL = "mu_R(u) + mu_L(I_A) is A-invariant; phi^-1 ∘ mu_R = hom"


def augmentation_ideal(A: HopfAlgebra) -> tuple[list[Vec], Report]:
    """Basis of ``ker ε`` and a report on its ideal and ad-stability properties."""
    n = A.dim
    basis = kernel_of_rows([{i: c for i, c in enumerate(A.counit) if c}], n)
    space = Subspace(n, basis)
    rep = Report("augmentation", A.name)
    rep.add("dimension_n_minus_1", A_AUGMENTATION,
            None if space.dim == n - 1 else {"at": [], "detail": f"dim {space.dim}"})
    w = None
    for v in basis:
        for a in range(n):
            for prod in (A.mul({a: 1}, v), A.mul(v, {a: 1})):
                if not space.contains(prod):
                    w = witness(A.field, (a,), prod)
                    break
            if w:
                break
        if w:
            break
    rep.add("two_sided_ideal", A_AUGMENTATION, w)
    w = None
    S_images = [A.S({k: 1}) for k in range(n)]
    for v in basis:
        for a in range(n):
            ad: Vec = {}
            for (p, q), c in A.comult[a].items():
                add_scaled(ad, A.mul(A.mul({p: 1}, v), S_images[q]), c)
            if not space.contains(ad):
                w = witness(A.field, (a,), ad)
                break
        if w:
            break
    rep.add("ad_stable", A_AUGMENTATION, w)
    return [space.rows[p] for p in space.pivots], rep


@dataclass
class ReductionResult:
    ambient: Algebra
    ideal: Subspace
    quotient_dim: int
    invariant_basis: list[Vec]
    mult_table: list[list[Vec]]
    unit: Vec
    report: Report = field(default_factory=lambda: Report("reduction", ""))

    @property
    def dim(self) -> int:
        return len(self.invariant_basis)

    @property
    def ideal_subspace(self) -> list[Vec]:
        return self.ideal.basis()

    def coordinates(self, v: Vec) -> Vec:
        """Coordinates of the class of ``v`` in the invariant basis.

        Raises :class:`NotInvariant` when the class is not A-invariant.
        """
        r = self.ideal.reduce(v)
        out: Vec = {}
        rest = dict(r)
        for k, (p, b) in enumerate(zip(self._lead, self.invariant_basis)):
            c = rest.get(p, 0)
            if c:
                out[k] = c
                add_scaled(rest, b, -c)
        if rest:
            raise NotInvariant("class is not in the invariant subspace")
        return out

    def project(self, v: Vec) -> Vec:
        return self.coordinates(v)

    @property
    def include(self) -> LinearMap:
        return LinearMap(self.dim, self.ambient.dim, [dict(b) for b in self.invariant_basis])

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, c in u.items():
            for j, d in v.items():
                add_scaled(out, self.mult_table[i][j], c * d)
        return out

    def as_algebra(self, name: str | None = None) -> Algebra:
        return Algebra(name or f"{self.ambient.name}//mu", self.ambient.field,
                       [f"r{k}" for k in range(self.dim)], self.unit, table=self.mult_table)


def hamiltonian_reduce(V: Algebra, H: HopfAlgebra, mu: Sequence[Vec], ideal_basis: Sequence[Vec],
                       check_representatives: bool = True) -> ReductionResult:
    """Compute ``(V / V mu(I))^H`` and its induced product.

    ``mu[h]`` is the image of the h-th basis vector of ``H``.
    """
    def mu_of(v: Vec) -> Vec:
        out: Vec = {}
        for i, c in v.items():
            add_scaled(out, mu[i], c)
        return out

    rep = Report("reduction", V.name)
    N = V.dim
    mu_I = [mu_of(i) for i in ideal_basis]
    ideal = Subspace(N)
    for v in range(N):
        for m in mu_I:
            ideal.insert(V.mul({v: 1}, m))
    comp = ideal.complement_coords()
    rep.info["ambient_dim"] = N
    rep.info["ideal_dim"] = ideal.dim
    rep.info["quotient_dim"] = len(comp)

    # left ideal closure (idempotence of the single spanning pass)
    w = None
    for b in ideal.basis()[:64]:
        for v in range(N):
            if not ideal.contains(V.mul({v: 1}, b)):
                w = {"at": [v], "detail": "V·(Vmu(I)) not contained in Vmu(I)"}
                break
        if w:
            break
    rep.add("left_ideal_closed", A_REDUCTION, w)

    S_mu = [mu_of(H.S({k: 1})) for k in range(H.dim)]

    def act(a: int, v: Vec) -> Vec:
        out: Vec = {}
        for (p, q), c in H.comult[a].items():
            add_scaled(out, V.mul(V.mul(mu[p], v), S_mu[q]), c)
        return out

    # the action descends: a∘(ideal) ⊆ ideal
    w = None
    for b in ideal.basis():
        for a in range(H.dim):
            if not ideal.contains(act(a, b)):
                w = {"at": [a], "detail": "action does not preserve Vmu(I)"}
                break
        if w:
            break
    rep.add("action_descends_to_quotient", A_REDUCTION, w)

    # invariants: joint kernel of (a∘ − ε(a)) on quotient coordinates
    pos = {c: k for k, c in enumerate(comp)}
    m = len(comp)
    rows_by_out: dict = {}
    for a in range(H.dim):
        eps = H.counit[a]
        for k, c in enumerate(comp):
            img = ideal.reduce(act(a, {c: 1}))
            if eps:
                img = _diff(img, {c: eps})
            for j, val in img.items():
                rows_by_out.setdefault((a, pos[j]), {})[k] = val
    kern = kernel_of_rows(rows_by_out.values(), m)
    inv_space = Subspace(m, kern)
    invariant_basis = [{comp[k]: c for k, c in inv_space.rows[p].items()} for p in inv_space.pivots]
    lead = [comp[p] for p in inv_space.pivots]

    res = ReductionResult(V, ideal, m, invariant_basis, [], {}, rep)
    res._lead = lead
    rep.info["invariant_dim"] = res.dim

    try:
        table = [[res.coordinates(V.mul(b1, b2)) for b2 in invariant_basis] for b1 in invariant_basis]
        closed = None
    except NotInvariant:
        table, closed = None, {"at": [], "detail": "product of invariants left the invariant subspace"}
    rep.add("invariants_closed_under_product", A_REDUCTION, closed)
    if table is None:
        raise IllDefinedProduct("induced product is not closed", rep)
    res.mult_table = table
    try:
        res.unit = res.coordinates(V.unit)
        rep.add("unit_is_invariant", A_REDUCTION)
    except NotInvariant:
        rep.add("unit_is_invariant", A_REDUCTION, {"at": [], "detail": "1 is not invariant"})

    if check_representatives:
        # independence of representatives: w·r ∈ V mu(I) for every ideal vector w
        # (r·w is in the left ideal automatically)
        w = None
        for b in ideal.basis():
            for j, r in enumerate(invariant_basis):
                if not ideal.contains(V.mul(b, r)):
                    w = {"at": [j], "detail": "product depends on representative"}
                    break
            if w:
                break
        rep.add("product_well_defined", A_REDUCTION, w)
        if w is not None:
            raise IllDefinedProduct("induced product depends on representatives", rep)

    alg = res.as_algebra()
    rep.add("induced_product_associative", A_REDUCTION, check_associative(alg))
    from .hopf import check_unital

    rep.add("induced_product_unital", A_REDUCTION, check_unital(alg) if res.unit else {"at": []})
    return res


# ----------------------------------------------------------------------
# The reduction H(T(A)^op) // mu_L(A) and the isomorphism with H(A)
# ----------------------------------------------------------------------

def mu_L_on_A(pkg: DoublePackage) -> list[Vec]:
    big = pkg.big_heisenberg
    return [big.x(pkg.d_from_a({i: 1})) for i in range(pkg.n)]


def reduce_big_heisenberg(pkg: DoublePackage) -> ReductionResult:
    """``H(T(A)^op) // mu_L(A)`` at the augmentation ideal."""
    ideal_basis, aug = augmentation_ideal(pkg.base)
    res = hamiltonian_reduce(pkg.big_heisenberg.algebra, pkg.base, mu_L_on_A(pkg), ideal_basis)
    res.report.extend(aug)
    return res


@dataclass
class PhiIsomorphism:
    matrix: LinearMap          # H(A) -> reduction coordinates
    inverse: LinearMap
    representatives: list[Vec]  # phi(e_h) in the ambient algebra
    report: Report


def phi_representative(pkg: DoublePackage, a: int, x: int) -> Vec:
    """``(a ⊗ x_1 S x_3) # x_2`` in ``T(A)^op # D(A)^cop``."""
    from .hopf import coproduct_terms

    Ad, n = pkg.dual, pkg.n
    big = pkg.big_heisenberg
    out: Vec = {}
    for (p, q, r), c in coproduct_terms(Ad, x, 3):
        t_leg = Ad.mul({p: 1}, Ad.S({r: 1}))
        if not t_leg:
            continue
        b = {a * n + j: d for j, d in t_leg.items()}
        add_scaled(out, big.pair(b, pkg.d_from_x({q: 1})), c)
    return out


def build_phi(pkg: DoublePackage, red: ReductionResult) -> PhiIsomorphism:
    from .linalg import solve_or_invert
    from .errors import Singular

    n = pkg.n
    H = pkg.heisenberg.algebra
    rep = Report("phi", H.name)
    reps = [phi_representative(pkg, a, x) for a in range(n) for x in range(n)]
    cols = []
    bad = None
    for h, v in enumerate(reps):
        try:
            cols.append(red.coordinates(v))
        except NotInvariant:
            bad = {"at": [h], "detail": "phi(h) is not invariant modulo the ideal"}
            cols.append({})
    rep.add("image_is_invariant", A_PHI, bad)
    if bad:
        raise NotInvariant("phi does not land in the invariants", rep)
    M = LinearMap(H.dim, red.dim, cols)
    try:
        Minv = solve_or_invert(M)
        rep.add("bijective", A_PHI)
    except Singular as exc:
        rep.add("bijective", A_PHI, {"at": [], "detail": str(exc)})
        raise NotHomomorphism("phi is not bijective", rep) from exc
    rep.add("unital", A_PHI, None if M(H.unit) == red.unit else witness(H.field, ("unit",), M(H.unit), red.unit))
    w = None
    for p in range(H.dim):
        for q in range(H.dim):
            lhs = M(dict(H.basis_product(p, q)))
            rhs = red.mul(cols[p], cols[q])
            if _diff(lhs, rhs):
                w = witness(H.field, (p, q), lhs, rhs)
                break
        if w:
            break
    rep.add("multiplicative", A_PHI, w)
    if not rep.passed:
        raise NotHomomorphism("phi is not an algebra isomorphism", rep)
    return PhiIsomorphism(M, Minv, reps, rep)


def residual_moment_map(pkg: DoublePackage, red: ReductionResult, phi: PhiIsomorphism) -> Report:
    D = pkg.drinfeld
    mm = pkg.moment_maps
    rep = Report("residual", D.name)
    coords = []
    w = None
    for d in range(D.dim):
        try:
            coords.append(red.coordinates(mm.mu_R_abstract.columns[d]))
        except NotInvariant:
            w = {"at": [d], "detail": "mu_R(d) is not invariant modulo the ideal"}
            break
    rep.add("mu_R_descends_to_invariants", A_RESIDUAL, w)
    if w is None:
        w2 = None
        for d in range(D.dim):
            lhs = phi.inverse(coords[d])
            rhs = mm.mu_R_explicit.columns[d]
            if _diff(lhs, rhs):
                w2 = witness(D.field, (d,), lhs, rhs)
                break
        rep.add("phi_inverse_mu_R_equals_explicit", A_RESIDUAL, w2)
    return rep
