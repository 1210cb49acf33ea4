"""Drinfeld double D(A), its dual T(A), Heisenberg doubles and moment maps.

Basis conventions (n = dim A, f^i the dual basis of A*):

* D(A) = (A*)^cop ⊗ A: ``f^i ⊗ e_j`` at index ``i*n + j``.
* T(A) = D(A)*: ``e_i ⊗ f^j`` at index ``i*n + j`` (dual to the D basis).
* H(A) = A # A*: ``e_i # f^j`` at index ``i*n + j``.
* End(A): matrix unit ``E_{kb}`` at index ``k*n + b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .actions import (
    ModuleAlgebraAction,
    SmashAlgebra,
    adjoint_action,
    double_action_on_A,
    left_coregular,
    smash_product,
)
from .algebra import Algebra, endomorphism_vector, matrix_algebra
from .errors import AxiomFailure, FormulaMismatch, HomomorphismFailure, Singular, SingularU
from .hopf import (
    DualBasisPair,
    HopfAlgebra,
    HopfPairing,
    _diff,
    _tensor_mul2,
    coproduct_terms,
    dual,
    twist,
    verify_hopf,
    witness,
)
from .linalg import LinearMap, Subspace, Vec, add_scaled, solve_or_invert
from .reports import Report
from .scalars import canon
from .tensors import TensorElement, tensor_multiply

A_DRINFELD = "drinfeld-mult: (x⊗a)(y⊗b) = <a_1,y_3><a_3,S^-1 y_1> x y_2 ⊗ a_2 b"
A_COALG = "D(A) ≅ (A*)^cop ⊗ A as a coalgebra"
A_EMBED = "a ↦ 1⊗a, x ↦ x⊗1 are Hopf embeddings"
A_RMATRIX = "R Δ_D(d) = Δ_D^op(d) R"
A_RINV = "R^-1 = (S_D ⊗ id)(R)"
A_YBE = "R12 R13 R23 = R23 R13 R12"
A_U = "u d u^-1 = S_D^2(d), u = S a_i S x^i"
A_TDUAL = "T(A) = D(A)*: Δ_T and S_T by dualizing drinfeld-mult"
A_HEIS = "heis-left / heis-right actions of H(A) on A"
A_IOTA = "iota: a⊗x ↦ a_r S^-1(a) S^-1(a_t) ⊗ x^t S(x) x^r"
A_CHIRAL = "chiral-sub / commuting-subs"
A_MU = "mu_L: u ↦ 1#u; mu-prime: u ↦ iota^-1(1#u); hom: by ↦ b_1 a_r Sb_2 a_t # S^-1x^t S^-1y x^r"
A_PULLBACK = "pullback: rho_L ∘ mu_R = d-on-a-dual"


def _mul3(alg: Algebra, a: Vec, b: Vec, c: Vec) -> Vec:
    return alg.mul(alg.mul(a, b), c)


def check_homomorphism(images: list[Vec], src: Algebra, dst: Algebra, pairs=None):
    """Witness that ``images`` (basis images) is not a unital algebra map."""
    def apply(v: Vec) -> Vec:
        out: Vec = {}
        for i, c in v.items():
            add_scaled(out, images[i], c)
        return out

    if apply(src.unit) != dst.unit:
        return witness(dst.field, ("unit",), apply(src.unit), dst.unit)
    n = src.dim
    it = pairs if pairs is not None else ((i, j) for i in range(n) for j in range(n))
    for i, j in it:
        lhs = apply(dict(src.basis_product(i, j)))
        rhs = dst.mul(images[i], images[j])
        if _diff(lhs, rhs):
            return witness(dst.field, (i, j), lhs, rhs)
    return None


# ----------------------------------------------------------------------
# Heisenberg doubles (generic over the base Hopf algebra)
# ----------------------------------------------------------------------

class HeisenbergDouble:
    """``H(B) = B # B*`` with the left coregular action of ``B*`` on ``B``.

    ``dual`` must be the canonical dual of ``base`` (identity pairing).
    """

    def __init__(self, base: HopfAlgebra, dual_alg: HopfAlgebra, check: str = "auto"):
        self.base = base
        self.dual = dual_alg
        self.n = base.dim
        self.action = left_coregular(dual_alg, base)
        self.algebra: SmashAlgebra = smash_product(
            base, dual_alg, self.action, check=check, name=f"H({base.name})",
            verify_action=base.dim <= 36,
        )

    def pair(self, a: Vec, x: Vec) -> Vec:
        return self.algebra.pair(a, x)

    def a(self, v: Vec) -> Vec:
        return self.algebra.embed_carrier(v)

    def x(self, v: Vec) -> Vec:
        return self.algebra.embed_actor(v)

    # representations on the base ------------------------------------------
    @cached_property
    def end(self) -> Algebra:
        return matrix_algebra(self.n, self.base.field, name=f"End({self.base.name})")

    @cached_property
    def rho_L(self) -> LinearMap:
        """``(a#x)·_L b = ⟨x, b_2⟩ a b_1``."""
        B, n = self.base, self.n
        cols = []
        for i in range(n):
            for j in range(n):
                col: Vec = {}
                for b in range(n):
                    img: Vec = {}
                    for (p, q), c in B.comult[b].items():
                        if q == j:
                            add_scaled(img, dict(B.basis_product(i, p)), c)
                    for k, c in img.items():
                        col[k * n + b] = c
                cols.append(col)
        return LinearMap(n * n, n * n, cols)

    @cached_property
    def rho_R(self) -> LinearMap:
        """``(a#x)·_R b = ⟨x, S b_1⟩ b_2 S⁻¹(a)``, i.e. ``(b ↼ S x) S⁻¹(a)``.

        This is the reading that iota intertwines with ``rho_L``; the variant
        ``(b ↼ S⁻¹x) S(a)`` is also an action but is not ``rho_L ∘ iota``.
        """
        B, n = self.base, self.n
        S = B.antipode
        cols = []
        for i in range(n):
            Sinv_a = B.Sinv({i: 1})
            for j in range(n):
                col: Vec = {}
                for b in range(n):
                    img: Vec = {}
                    for (p, q), c in B.comult[b].items():
                        w = S.columns[p].get(j, 0)
                        if w:
                            add_scaled(img, B.mul({q: 1}, Sinv_a), c * w)
                    for k, c in img.items():
                        col[k * n + b] = c
                cols.append(col)
        return LinearMap(n * n, n * n, cols)

    # the automorphism iota ----------------------------------------------------
    @cached_property
    def iota(self) -> LinearMap:
        """``a ⊗ x ↦ Σ_{r,t} a_r S⁻¹(a) S⁻¹(a_t) ⊗ x^t S(x) x^r``."""
        B, Bd, n = self.base, self.dual, self.n
        Sinv_t = [B.Sinv({t: 1}) for t in range(n)]
        cols = []
        for i in range(n):
            Sinv_a = B.Sinv({i: 1})
            left = [[_mul3(B, {r: 1}, Sinv_a, Sinv_t[t]) for t in range(n)] for r in range(n)]
            for j in range(n):
                Sx = Bd.S({j: 1})
                col: Vec = {}
                for t in range(n):
                    xt_Sx = Bd.mul({t: 1}, Sx)
                    if not xt_Sx:
                        continue
                    for r in range(n):
                        lft = left[r][t]
                        if not lft:
                            continue
                        rgt = Bd.mul(xt_Sx, {r: 1})
                        for k, c in lft.items():
                            for l, d in rgt.items():
                                key = k * n + l
                                col[key] = col.get(key, 0) + c * d
                cols.append({k: canon(c) for k, c in col.items() if c})
        return LinearMap(n * n, n * n, cols)

    @cached_property
    def iota_inverse(self) -> LinearMap:
        return solve_or_invert(self.iota)

    def iota_apply(self, v: Vec) -> Vec:
        return self.iota(v)

    # closed forms from the corollary, used as a cross-check of the iota matrix
    def chiral_a_closed_form(self, i: int) -> Vec:
        """``a ↦ a_r S⁻¹(a) S⁻¹(a_t) ⊗ x^t x^r``."""
        B, Bd, n = self.base, self.dual, self.n
        out: Vec = {}
        Sinv_a = B.Sinv({i: 1})
        for r in range(n):
            for t in range(n):
                lft = _mul3(B, {r: 1}, Sinv_a, B.Sinv({t: 1}))
                rgt = dict(Bd.basis_product(t, r))
                add_scaled(out, self.pair(lft, rgt), 1)
        return out

    def chiral_x_closed_form(self, j: int) -> Vec:
        """``x ↦ a_r S⁻¹(a_t) ⊗ x^t S(x) x^r``."""
        B, Bd, n = self.base, self.dual, self.n
        out: Vec = {}
        Sx = Bd.S({j: 1})
        for r in range(n):
            for t in range(n):
                lft = B.mul({r: 1}, B.Sinv({t: 1}))
                rgt = _mul3(Bd, {t: 1}, Sx, {r: 1})
                add_scaled(out, self.pair(lft, rgt), 1)
        return out


def verify_heisenberg(hd: HeisenbergDouble, full_associativity: bool = True) -> Report:
    """H(B) associative, rho_L an isomorphism, iota an automorphism with rho_R = rho_L ∘ iota."""
    from .hopf import check_associative, check_unital

    H = hd.algebra
    n = hd.n
    rep = Report("heisenberg", H.name)
    if full_associativity:
        rep.add("heisenberg_associative", "H(A) = A # A* smash product", check_unital(H) or check_associative(H))
    end = hd.end
    rho_L = hd.rho_L
    images_L = [rho_L.columns[h] for h in range(H.dim)]
    rep.add("rho_L_homomorphism", A_HEIS, check_homomorphism(images_L, H, end))
    r = rho_L.rank()
    rep.info["rho_L_rank"] = r
    rep.add("rho_L_bijective", A_HEIS, None if r == n * n else {"at": [], "detail": f"rank {r} != {n * n}"})
    images_R = [hd.rho_R.columns[h] for h in range(H.dim)]
    rep.add("rho_R_homomorphism", A_HEIS, check_homomorphism(images_R, H, end))

    iota = hd.iota
    ri = iota.rank()
    rep.add("iota_bijective", A_IOTA, None if ri == H.dim else {"at": [], "detail": f"rank {ri}"})
    w = None
    for h in range(H.dim):
        lhs = hd.rho_R.columns[h]
        rhs = rho_L(iota.columns[h])
        if _diff(lhs, rhs):
            w = witness(H.field, (h,), lhs, rhs)
            break
    rep.add("rho_R_equals_rho_L_iota", A_IOTA, w)
    rep.add("iota_automorphism", A_IOTA, check_homomorphism(iota.columns, H, H))
    return rep


def chiral_embeddings(hd: HeisenbergDouble) -> Report:
    """The four inclusions A, A* -> H(A) and the commutant relations between them."""
    B, Bd, H, n = hd.base, hd.dual, hd.algebra, hd.n
    iota = hd.iota
    maps = {
        "a_to_a#1": [hd.a({i: 1}) for i in range(n)],
        "x_to_1#x": [hd.x({j: 1}) for j in range(n)],
        "a_to_iota(a#1)": [iota(hd.a({i: 1})) for i in range(n)],
        "x_to_iota(1#x)": [iota(hd.x({j: 1})) for j in range(n)],
    }
    sources = {"a_to_a#1": B, "x_to_1#x": Bd, "a_to_iota(a#1)": B, "x_to_iota(1#x)": Bd}
    rep = Report("chiral", H.name)
    for name, imgs in maps.items():
        rep.add(f"{name}_homomorphism", A_CHIRAL, check_homomorphism(imgs, sources[name], H))

    w = None
    for i in range(n):
        if w:
            break
        ci = hd.chiral_a_closed_form(i)
        if _diff(ci, maps["a_to_iota(a#1)"][i]):
            w = witness(H.field, ("a", i), ci, maps["a_to_iota(a#1)"][i])
            break
        cx = hd.chiral_x_closed_form(i)
        if _diff(cx, maps["x_to_iota(1#x)"][i]):
            w = witness(H.field, ("x", i), cx, maps["x_to_iota(1#x)"][i])
    rep.add("closed_forms_match_iota", A_CHIRAL + " (dual-basis reading of x^t x^r)", w)

    for first, second, label in [("a_to_a#1", "a_to_iota(a#1)", "A#1 commutes with iota(A#1)"),
                                 ("x_to_1#x", "x_to_iota(1#x)", "1#A* commutes with iota(1#A*)")]:
        w = None
        for i in range(n):
            for j in range(n):
                p, q = maps[first][i], maps[second][j]
                lhs, rhs = H.mul(p, q), H.mul(q, p)
                if _diff(lhs, rhs):
                    w = witness(H.field, (i, j), lhs, rhs)
                    break
            if w:
                break
        rep.add(label.replace(" ", "_"), A_CHIRAL, w)
    return rep


# ----------------------------------------------------------------------
# The Drinfeld double
# ----------------------------------------------------------------------

def _build_drinfeld(A: HopfAlgebra, Ad: HopfAlgebra) -> HopfAlgebra:
    n = A.dim
    Sinv = A.antipode_inverse
    # cross[j][k] = (1⊗e_j)(f^k⊗1) as {(t, q): c} meaning f^t ⊗ e_q
    cross = [[None] * n for _ in range(n)]
    for j in range(n):
        a3 = coproduct_terms(A, j, 3)
        for k in range(n):
            y3 = coproduct_terms(Ad, k, 3)
            out: dict = {}
            for (p, q, r), c in a3:
                for (s, t, u), d in y3:
                    if p != u:
                        continue
                    # <a_3, S⁻¹ y_1> = coefficient of f^s in the dual basis image: S⁻¹(e_r)[s]
                    w = Sinv.columns[r].get(s, 0)
                    if w:
                        key = (t, q)
                        out[key] = out.get(key, 0) + c * d * w
            cross[j][k] = {key: canon(v) for key, v in out.items() if v}

    def product(left: int, right: int) -> Vec:
        i, j = divmod(left, n)
        k, l = divmod(right, n)
        out: Vec = {}
        for (t, q), c in cross[j][k].items():
            xs = Ad.basis_product(i, t)
            if not xs:
                continue
            bs = A.basis_product(q, l)
            for s, d in xs:
                for b, e in bs:
                    key = s * n + b
                    out[key] = out.get(key, 0) + c * d * e
        return {k2: canon(v) for k2, v in out.items() if v}

    table = [[product(p, q) for q in range(n * n)] for p in range(n * n)]
    comult = []
    for i in range(n):
        for j in range(n):
            d: dict = {}
            for (s, t), c in Ad.comult[i].items():
                for (p, q), e in A.comult[j].items():
                    key = (t * n + p, s * n + q)
                    d[key] = d.get(key, 0) + c * e
            comult.append(d)
    counit = [canon(Ad.counit[i] * A.counit[j]) for i in range(n) for j in range(n)]
    unit = {i * n + j: canon(c * e) for i, c in Ad.unit.items() for j, e in A.unit.items()}
    basis = [f"{Ad.basis[i]}⊗{A.basis[j]}" for i in range(n) for j in range(n)]

    plain = Algebra(f"D({A.name})", A.field, basis, unit, table=table)

    def emb_a(v: Vec) -> Vec:
        return {k * n + j: canon(c * e) for k, c in Ad.unit.items() for j, e in v.items()}

    def emb_x(v: Vec) -> Vec:
        return {i * n + l: canon(c * e) for i, c in v.items() for l, e in A.unit.items()}

    antipode = []
    for i in range(n):
        sx = emb_x(Ad.Sinv({i: 1}))
        for j in range(n):
            antipode.append(plain.mul(emb_a(A.S({j: 1})), sx))
    D = HopfAlgebra(f"D({A.name})", A.field, basis, unit, comult, counit, antipode, table=table)
    return D


@dataclass
class DoublePackage:
    """D(A), T(A), H(A) and the canonical elements built from a Hopf algebra A."""

    base: HopfAlgebra
    dual: HopfAlgebra
    pairing: HopfPairing
    dual_bases: DualBasisPair
    drinfeld: HopfAlgebra
    reports: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.base.dim

    # embeddings into D(A) -----------------------------------------------------
    def d_from_a(self, v: Vec) -> Vec:
        n = self.n
        return {k * n + j: canon(c * e) for k, c in self.dual.unit.items() for j, e in v.items()}

    def d_from_x(self, v: Vec) -> Vec:
        n = self.n
        return {i * n + l: canon(c * e) for i, c in v.items() for l, e in self.base.unit.items()}

    # derived objects ------------------------------------------------------------
    @cached_property
    def R(self) -> TensorElement:
        D = self.drinfeld
        terms: dict = {}
        for a_i, x_i in zip(self.dual_bases.a, self.dual_bases.x):
            for p, c in self.d_from_a(a_i).items():
                for q, d in self.d_from_x(x_i).items():
                    terms[(p, q)] = terms.get((p, q), 0) + c * d
        return TensorElement([D, D], terms)

    @cached_property
    def R_inverse(self) -> TensorElement:
        """``(S_D ⊗ id)(R)``."""
        D = self.drinfeld
        return self.R.map_leg(0, D.antipode, D)

    @cached_property
    def u(self) -> Vec:
        """``u = Σ S(a_i) S(x^i)`` with each S the antipode of its own factor.

        ``S(x^i)`` is taken in A* before embedding; inside D(A) that is
        ``S_D⁻¹`` because A* sits in D(A) with the opposite coproduct.
        Using ``S_D`` on both factors does not give ``u d u⁻¹ = S_D²(d)``.
        """
        D = self.drinfeld
        out: Vec = {}
        for a_i, x_i in zip(self.dual_bases.a, self.dual_bases.x):
            add_scaled(out, D.mul(D.S(self.d_from_a(a_i)), self.d_from_x(self.dual.S(x_i))), 1)
        return out

    @cached_property
    def u_inverse(self) -> Vec:
        try:
            return self.drinfeld.inverse_of(self.u)
        except Singular as exc:
            raise SingularU(f"u is not invertible in {self.drinfeld.name}") from exc

    @cached_property
    def tdual(self) -> HopfAlgebra:
        A, Ad, n = self.base, self.dual, self.n
        labels = [f"{A.basis[i]}⊗{Ad.basis[j]}" for i in range(n) for j in range(n)]
        T, _ = dual(self.drinfeld, name=f"T({A.name})", labels=labels)
        return T

    @cached_property
    def heisenberg(self) -> HeisenbergDouble:
        return HeisenbergDouble(self.base, self.dual)

    @cached_property
    def double_action(self) -> ModuleAlgebraAction:
        return double_action_on_A(self.drinfeld, self.base)

    @cached_property
    def rho_D(self) -> LinearMap:
        """Representation matrix of the D(A)-action on A, into End(A)."""
        act, n = self.double_action, self.n
        cols = []
        for d in range(n * n):
            col: Vec = {}
            for b in range(n):
                for k, c in act.table[d][b].items():
                    col[k * n + b] = c
            cols.append(col)
        return LinearMap(n * n, n * n, cols)

    @cached_property
    def big_base(self) -> HopfAlgebra:
        """``T(A)^op``."""
        return twist(self.tdual, "op")

    @cached_property
    def big_dual(self) -> HopfAlgebra:
        """``D(A)^cop``, the canonical dual of ``T(A)^op``."""
        return twist(self.drinfeld, "cop")

    @cached_property
    def big_heisenberg(self) -> HeisenbergDouble:
        """``H(T(A)^op) = T(A)^op # D(A)^cop``."""
        return HeisenbergDouble(self.big_base, self.big_dual, check="sample")

    @cached_property
    def moment_maps(self) -> "MomentMapPair":
        return build_moment_maps(self)


def build_drinfeld_double(A: HopfAlgebra, verify: bool = True) -> DoublePackage:
    """Construct D(A) from the explicit multiplication formula; fail fast on any axiom."""
    Ad, P = dual(A)
    D = _build_drinfeld(A, Ad)
    pkg = DoublePackage(A, Ad, P, DualBasisPair.from_pairing(P), D)
    if verify:
        rep = verify_drinfeld(pkg)
        pkg.reports["drinfeld"] = rep
        if not rep.passed:
            raise AxiomFailure(f"{D.name} failed: {[c.name for c in rep.failures()]}", rep)
    return pkg


def tensor_coalgebra(X: HopfAlgebra, Y: HopfAlgebra):
    """Comultiplication and counit of the tensor coalgebra ``X ⊗ Y``."""
    m = Y.dim
    comult = []
    for i in range(X.dim):
        for j in range(m):
            d: dict = {}
            for (p, q), c in X.comult[i].items():
                for (r, s), e in Y.comult[j].items():
                    key = (p * m + r, q * m + s)
                    d[key] = d.get(key, 0) + c * e
            comult.append({k: canon(v) for k, v in d.items() if v})
    counit = [canon(X.counit[i] * Y.counit[j]) for i in range(X.dim) for j in range(m)]
    return comult, counit


def verify_drinfeld(pkg: DoublePackage) -> Report:
    A, Ad, D = pkg.base, pkg.dual, pkg.drinfeld
    rep = Report("drinfeld", D.name)
    rep.extend(verify_hopf(D), prefix="D_")
    for c in rep.checks:
        if c.name in ("D_associativity", "D_unit"):
            c.anchor = A_DRINFELD

    comult, counit = tensor_coalgebra(twist(Ad, "cop"), A)
    w = None
    for i in range(D.dim):
        if D.comult[i] != comult[i]:
            w = witness(D.field, (i,), D.comult[i], comult[i])
            break
    if w is None and D.counit != counit:
        w = {"at": ["counit"], "detail": "counit differs"}
    rep.add("coalgebra_is_Acop_dual_tensor_A", A_COALG, w)

    # Hopf embeddings of A and (A*)^cop
    n = A.dim
    for label, emb, src in [("A", pkg.d_from_a, A), ("A*cop", pkg.d_from_x, twist(Ad, "cop"))]:
        images = [emb({i: 1}) for i in range(n)]
        w = check_homomorphism(images, src, D)
        if w is None:
            for i in range(n):
                lhs = D.coproduct(images[i])
                rhs: dict = {}
                for (p, q), c in src.comult[i].items():
                    for k, d in images[p].items():
                        for l, e in images[q].items():
                            rhs[(k, l)] = rhs.get((k, l), 0) + c * d * e
                if _diff(lhs, rhs):
                    w = witness(D.field, ("comult", i), lhs, rhs)
                    break
                if D.eps(images[i]) != src.counit[i]:
                    w = {"at": ["counit", i]}
                    break
                lhs = D.S(images[i])
                rhs2: Vec = {}
                for k, c in src.S({i: 1}).items():
                    add_scaled(rhs2, images[k], c)
                if _diff(lhs, rhs2):
                    w = witness(D.field, ("antipode", i), lhs, rhs2)
                    break
        rep.add(f"hopf_embedding_{label}", A_EMBED, w)
    return rep


def universal_R(pkg: DoublePackage) -> Report:
    """Check the intertwining property, the inverse formula and Yang-Baxter for R."""
    D = pkg.drinfeld
    R = pkg.R
    rep = Report("R-matrix", D.name)
    w = None
    for d in range(D.dim):
        delta = TensorElement([D, D], D.comult[d])
        lhs = tensor_multiply(R, delta)
        rhs = tensor_multiply(delta.swap(), R)
        if lhs != rhs:
            w = {"at": [d], "differences": lhs.differences(rhs, limit=3)}
            break
    rep.add("r_intertwines_coproduct", A_RMATRIX, w)

    Rinv = pkg.R_inverse
    one = TensorElement.one([D, D])
    w = None
    for side, prod in (("Rinv*R", tensor_multiply(Rinv, R)), ("R*Rinv", tensor_multiply(R, Rinv))):
        if prod != one:
            w = {"at": [side], "differences": prod.differences(one, limit=3)}
            break
    rep.add("r_inverse", A_RINV, w)

    ambient = [D, D, D]
    R12 = R.embed((0, 1), ambient)
    R13 = R.embed((0, 2), ambient)
    R23 = R.embed((1, 2), ambient)
    lhs = R12 * R13 * R23
    rhs = R23 * R13 * R12
    rep.add("ybe", A_YBE,
            None if lhs == rhs else {"at": [], "differences": lhs.differences(rhs, limit=3)})
    return rep


def u_element(pkg: DoublePackage) -> Report:
    D = pkg.drinfeld
    rep = Report("u-element", D.name)
    try:
        uinv = pkg.u_inverse
    except SingularU as exc:
        rep.add("u_invertible", A_U, {"at": [], "detail": str(exc)})
        return rep
    rep.add("u_invertible", A_U)
    u = pkg.u
    w = None
    for d in range(D.dim):
        lhs = D.mul(D.mul(u, {d: 1}), uinv)
        rhs = D.S(D.S({d: 1}))
        if _diff(lhs, rhs):
            w = witness(D.field, (d,), lhs, rhs)
            break
    rep.add("u_conjugation_is_S_squared", A_U, w)
    return rep


# ----------------------------------------------------------------------
# T(A): dualized D(A) versus the explicit formulas
# ----------------------------------------------------------------------

def explicit_tdual_structure(pkg: DoublePackage):
    """Δ_T and S_T of T(A) ≅ A^op ⊗ A* from the closed formulas."""
    A, Ad, n = pkg.base, pkg.dual, pkg.n
    Sinv_t = [A.Sinv({t: 1}) for t in range(n)]
    comult = []
    antipode = []
    for i in range(n):
        Sinv_a = A.Sinv({i: 1})
        for j in range(n):
            # Δ_T(a⊗x) = (a_1 ⊗ x^r x_1 x^t) ⊗ (S⁻¹(a_t) a_2 a_r ⊗ x_2)
            d: dict = {}
            for (p, q), c in A.comult[i].items():
                for (s, u), e in Ad.comult[j].items():
                    for r in range(n):
                        for t in range(n):
                            left = _mul3(Ad, {r: 1}, {s: 1}, {t: 1})
                            if not left:
                                continue
                            right = _mul3(A, Sinv_t[t], {q: 1}, {r: 1})
                            for k, x in left.items():
                                for l, y in right.items():
                                    key = (p * n + k, l * n + u)
                                    d[key] = d.get(key, 0) + c * e * x * y
            comult.append({k: canon(v) for k, v in d.items() if v})
            # S_T(a⊗x) = a_r S⁻¹(a) S⁻¹(a_t) ⊗ x^t S(x) x^r
            Sx = Ad.S({j: 1})
            col: Vec = {}
            for r in range(n):
                for t in range(n):
                    left = _mul3(A, {r: 1}, Sinv_a, Sinv_t[t])
                    right = _mul3(Ad, {t: 1}, Sx, {r: 1})
                    for k, x in left.items():
                        for l, y in right.items():
                            col[k * n + l] = col.get(k * n + l, 0) + x * y
            antipode.append({k: canon(v) for k, v in col.items() if v})
    return comult, antipode


def build_tdual(pkg: DoublePackage, raise_on_mismatch: bool = True) -> Report:
    T = pkg.tdual
    rep = Report("tdual", T.name)
    comult, antipode = explicit_tdual_structure(pkg)
    w = None
    for i in range(T.dim):
        if T.comult[i] != comult[i]:
            w = witness(T.field, (i,), T.comult[i], comult[i])
            break
    rep.add("tdual_comult_formula", A_TDUAL, w)
    w = None
    for i in range(T.dim):
        if T.antipode.columns[i] != antipode[i]:
            w = witness(T.field, (i,), T.antipode.columns[i], antipode[i])
            break
    rep.add("tdual_antipode_formula", A_TDUAL, w)
    D = pkg.drinfeld
    ok = T.counit == [D.unit.get(i, 0) for i in range(D.dim)]
    rep.add("tdual_counit_is_evaluation_at_1", A_TDUAL, None if ok else {"at": ["counit"]})
    # algebra structure A^op ⊗ A*
    A, Ad, n = pkg.base, pkg.dual, pkg.n
    w = None
    for p in range(T.dim):
        i, j = divmod(p, n)
        for q in range(T.dim):
            k, l = divmod(q, n)
            expect = {a * n + b: canon(c * d) for a, c in A.basis_product(k, i) for b, d in Ad.basis_product(j, l)}
            got = dict(T.basis_product(p, q))
            if got != expect:
                w = witness(T.field, (p, q), got, expect)
                break
        if w:
            break
    rep.add("tdual_algebra_is_Aop_tensor_Adual", A_TDUAL, w)
    rep.extend(verify_hopf(T), prefix="T_")
    if raise_on_mismatch and not rep.passed:
        raise FormulaMismatch("T(A) constructions disagree", rep)
    return rep


# ----------------------------------------------------------------------
# Moment maps
# ----------------------------------------------------------------------

@dataclass
class MomentMapPair:
    mu_L: LinearMap
    mu_R_abstract: LinearMap
    mu_R_explicit: LinearMap
    mu_R_oracle: LinearMap


def mu_R_explicit_generators(pkg: DoublePackage):
    """Images of ``1⊗b`` and ``y⊗1`` under the explicit formula for mu_R, in H(A)."""
    A, Ad, n = pkg.base, pkg.dual, pkg.n
    hd = pkg.heisenberg
    H = hd.algebra
    S_images = [A.S({k: 1}) for k in range(n)]
    Sinv_x = [Ad.Sinv({t: 1}) for t in range(n)]
    gen_a = []
    for b in range(n):
        # b ↦ b_1 a_r S(b_2) a_t # S⁻¹(x^t) x^r
        out: Vec = {}
        for (p, q), c in A.comult[b].items():
            for r in range(n):
                pr = A.mul({p: 1}, {r: 1})
                if not pr:
                    continue
                prs = A.mul(pr, S_images[q])
                for t in range(n):
                    left = A.mul(prs, {t: 1})
                    right = Ad.mul(Sinv_x[t], {r: 1})
                    if left and right:
                        add_scaled(out, H.pair(left, right), c)
        gen_a.append(out)
    gen_x = []
    for y in range(n):
        # y ↦ a_r a_t # S⁻¹(x^t) S⁻¹(y) x^r
        out = {}
        for r in range(n):
            for t in range(n):
                left = A.mul({r: 1}, {t: 1})
                right = _mul3(Ad, Sinv_x[t], Sinv_x[y], {r: 1})
                if left and right:
                    add_scaled(out, H.pair(left, right), 1)
        gen_x.append(out)
    return gen_a, gen_x


def build_moment_maps(pkg: DoublePackage) -> MomentMapPair:
    n = pkg.n
    D = pkg.drinfeld
    big = pkg.big_heisenberg
    mu_L = LinearMap(D.dim, big.algebra.dim, [big.x({d: 1}) for d in range(D.dim)])
    # mu_R(d) = iota^{-1}(1 # d)
    iota_inv = big.iota_inverse
    mu_R_abstract = LinearMap(D.dim, big.algebra.dim, [iota_inv(big.x({d: 1})) for d in range(D.dim)])

    H = pkg.heisenberg.algebra
    gen_a, gen_x = mu_R_explicit_generators(pkg)
    cols = []
    for i in range(n):
        for j in range(n):
            cols.append(H.mul(gen_x[i], gen_a[j]))
    mu_R_explicit = LinearMap(D.dim, H.dim, cols)

    rho_L = pkg.heisenberg.rho_L
    rho_L_inv = solve_or_invert(rho_L)
    mu_R_oracle = rho_L_inv.compose(pkg.rho_D)
    return MomentMapPair(mu_L, mu_R_abstract, mu_R_explicit, mu_R_oracle)


def moment_maps(pkg: DoublePackage) -> Report:
    D = pkg.drinfeld
    mm = pkg.moment_maps
    big = pkg.big_heisenberg.algebra
    H = pkg.heisenberg.algebra
    rep = Report("moment", D.name)
    rep.add("mu_L_homomorphism", A_MU, check_homomorphism(mm.mu_L.columns, D, big))
    rep.add("mu_R_abstract_homomorphism", A_MU, check_homomorphism(mm.mu_R_abstract.columns, D, big))
    rep.add("mu_R_explicit_homomorphism", A_MU, check_homomorphism(mm.mu_R_explicit.columns, D, H))
    w = None
    for d in range(D.dim):
        for e in range(D.dim):
            p, q = mm.mu_L.columns[d], mm.mu_R_abstract.columns[e]
            lhs, rhs = big.mul(p, q), big.mul(q, p)
            if _diff(lhs, rhs):
                w = witness(big.field, (d, e), lhs, rhs)
                break
        if w:
            break
    rep.add("mu_L_mu_R_commute", A_MU, w)
    w = None
    for d in range(D.dim):
        if _diff(mm.mu_R_explicit.columns[d], mm.mu_R_oracle.columns[d]):
            w = witness(H.field, (d,), mm.mu_R_explicit.columns[d], mm.mu_R_oracle.columns[d])
            break
    rep.add("mu_R_explicit_equals_oracle", A_MU + " vs rho_L^-1 ∘ rho_D", w)
    return rep


def pullback_check(pkg: DoublePackage) -> Report:
    """rho_L ∘ mu_R_explicit equals the D(A)-action on A, coefficientwise."""
    D = pkg.drinfeld
    rep = Report("pullback", D.name)
    rho_L = pkg.heisenberg.rho_L
    mm = pkg.moment_maps
    w = None
    for d in range(D.dim):
        lhs = rho_L(mm.mu_R_explicit.columns[d])
        rhs = pkg.rho_D.columns[d]
        if _diff(lhs, rhs):
            w = witness(D.field, (d,), lhs, rhs)
            break
    rep.add("pullback_equals_double_action", A_PULLBACK, w)
    return rep
