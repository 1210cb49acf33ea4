"""Canonical elements R, ℒ, Θ, Ω and the RTT form of the moment map mu_R.

Leg conventions: in ``D(A) ⊗ D(A) ⊗ H(A)`` the two D(A) legs come first and
``X_1``, ``X_2`` denote ``X`` placed on legs (0, 2) and (1, 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .doubles import DoublePackage
from .errors import NotInvertible
from .reports import Report
from .tensors import TensorElement, tensor_inverse, tensor_multiply

A_HEIS_RELS = "heis-rels: RΘ1Θ2 = Θ2Θ1R, RΩ1Ω2 = Ω2Ω1R, RΘ1Ω2^-1 = Ω2^-1Θ1"
A_REF_EQ = "ref-eq: L1 R12 L2 R21 = R12 L2 R21 L1"
A_MU_RTT = "(id⊗mu_R)(R12) = Θ~, (id⊗mu_R)(R21) = ΩΩ~, (id⊗mu_R)(L) = ΩΩ~Θ~"
A_U_RTT = "Θ^-1 Ω^-1 = u1 Ω~ Θ~"
A_RTT_FINAL = "RTT-final: (id⊗mu_R)(L) = Ω u1^-1 Θ Ω^-1"
A_FRT = "L ↦ ΩΘΩ^-1 respects ref-eq but differs from (id⊗mu_R)(L)"
CORRECTED = " [corrected form]"


@dataclass
class CanonicalElement:
    name: str
    value: TensorElement


def _mul(*ts: TensorElement) -> TensorElement:
    out = ts[0]
    for t in ts[1:]:
        out = tensor_multiply(out, t)
    return out


class Canonical:
    """The canonical elements of a double package.

    Each identity is checked twice. The *printed* forms use the elements
    exactly as displayed: ``X~ = (id⊗iota)(X)``, ``L̂ = Ω u1⁻¹ Θ Ω⁻¹`` and
    ``L̂′ = Ω Θ Ω⁻¹``. The *corrected* forms are the ones that hold with the
    conventions fixed by the double, the Heisenberg double and ``mu_R``:

    * ``X~ = (id⊗iota⁻¹)(X)``;
    * ``L̂ = Ω u1⁻¹ Θ⁻¹ Ω⁻¹`` and ``L̂′ = Ω Θ⁻¹ Ω⁻¹``, which is what
      ``Θ⁻¹Ω⁻¹ = u1 Ω~Θ~`` gives when substituted into ``ΩΩ~Θ~``;
    * ``R Ω2 Ω1 = Ω1 Ω2 R``, because ``Ω1Ω2 = (Δ_D^op ⊗ id)(Ω)`` when A*
      sits in D(A) with the opposite coproduct.
    """

    def __init__(self, pkg: DoublePackage):
        self.pkg = pkg
        self.D = pkg.drinfeld
        self.hd = pkg.heisenberg
        self.H = self.hd.algebra
        D, H = self.D, self.H
        theta: dict = {}
        omega: dict = {}
        for a_i, x_i in zip(pkg.dual_bases.a, pkg.dual_bases.x):
            for p, c in pkg.d_from_a(a_i).items():
                for q, d in self.hd.x(x_i).items():
                    theta[(p, q)] = theta.get((p, q), 0) + c * d
            for p, c in pkg.d_from_x(x_i).items():
                for q, d in self.hd.a(a_i).items():
                    omega[(p, q)] = omega.get((p, q), 0) + c * d
        self.R12 = pkg.R
        self.R21 = pkg.R.swap()
        self.L = tensor_multiply(self.R21, self.R12)
        self.Theta = TensorElement([D, H], theta)
        self.Omega = TensorElement([D, H], omega)
        self.u1 = TensorElement([D, H], {(d, h): c * e for d, c in pkg.u.items() for h, e in H.unit.items()})
        self.one = TensorElement.one([D, H])

    @cached_property
    def ThetaTilde(self) -> TensorElement:
        return self.Theta.map_leg(1, self.hd.iota, self.H)

    @cached_property
    def OmegaTilde(self) -> TensorElement:
        return self.Omega.map_leg(1, self.hd.iota, self.H)

    @cached_property
    def ThetaTildeCorrected(self) -> TensorElement:
        return self.Theta.map_leg(1, self.hd.iota_inverse, self.H)

    @cached_property
    def OmegaTildeCorrected(self) -> TensorElement:
        return self.Omega.map_leg(1, self.hd.iota_inverse, self.H)

    # inverses by linear solve -----------------------------------------------------
    @cached_property
    def Theta_inv(self) -> TensorElement:
        return _inverse(self.Theta, "Theta")

    @cached_property
    def Omega_inv(self) -> TensorElement:
        return _inverse(self.Omega, "Omega")

    @cached_property
    def u1_inv(self) -> TensorElement:
        return _inverse(self.u1, "u1")

    @cached_property
    def LHat(self) -> TensorElement:
        return _mul(self.Omega, self.u1_inv, self.Theta, self.Omega_inv)

    @cached_property
    def LHatPrime(self) -> TensorElement:
        return _mul(self.Omega, self.Theta, self.Omega_inv)

    @cached_property
    def LHatCorrected(self) -> TensorElement:
        return _mul(self.Omega, self.u1_inv, self.Theta_inv, self.Omega_inv)

    @cached_property
    def LHatPrimeCorrected(self) -> TensorElement:
        return _mul(self.Omega, self.Theta_inv, self.Omega_inv)

    @cached_property
    def mu_R_of_L(self) -> TensorElement:
        return mu_R_leg(self, self.L)

    def elements(self) -> list[CanonicalElement]:
        names = ["R12", "R21", "L", "Theta", "Omega", "ThetaTilde", "OmegaTilde", "LHat", "LHatPrime", "u1"]
        return [CanonicalElement(n, getattr(self, n)) for n in names]


def _inverse(t: TensorElement, name: str) -> TensorElement:
    try:
        return tensor_inverse(t)
    except NotInvertible as exc:
        raise NotInvertible(f"{name} is not invertible") from exc


def build_canonical(pkg: DoublePackage) -> tuple[Canonical, Report]:
    can = Canonical(pkg)
    rep = Report("canonical", pkg.drinfeld.name)
    for name in ("Theta", "Omega"):
        try:
            inv = getattr(can, f"{name}_inv")
            x = getattr(can, name)
            ok = tensor_multiply(x, inv) == can.one and tensor_multiply(inv, x) == can.one
            rep.add(f"{name}_invertible", "canonical elements", None if ok else {"at": [name]})
        except NotInvertible as exc:
            rep.add(f"{name}_invertible", "canonical elements", {"at": [name], "detail": str(exc)})
    ok = can.R21 == can.R12.permute((1, 0))
    rep.add("R21_is_swap_of_R12", "R21 = flip(R12)", None if ok else {"at": []})
    return can, rep


def _compare(rep: Report, name: str, anchor: str, lhs: TensorElement, rhs: TensorElement):
    if lhs == rhs:
        rep.add(name, anchor)
    else:
        diffs = lhs.differences(rhs)
        F = lhs.factors[0].field
        rep.add(name, anchor, {
            "at": list(diffs[0][0]),
            "count": len(diffs),
            "differences": [[list(k), F.format(a), F.format(b)] for k, a, b in diffs[:20]],
        })


def check_heis_rels(can: Canonical, corrected: bool = True) -> Report:
    D, H = can.D, can.H
    amb = [D, D, H]
    R = can.R12.embed((0, 1), amb)
    T1, T2 = can.Theta.embed((0, 2), amb), can.Theta.embed((1, 2), amb)
    O1, O2 = can.Omega.embed((0, 2), amb), can.Omega.embed((1, 2), amb)
    O2inv = can.Omega_inv.embed((1, 2), amb)
    rep = Report("heis-rels", H.name)
    _compare(rep, "R_Theta1_Theta2", A_HEIS_RELS, _mul(R, T1, T2), _mul(T2, T1, R))
    _compare(rep, "R_Omega1_Omega2", A_HEIS_RELS, _mul(R, O1, O2), _mul(O2, O1, R))
    _compare(rep, "R_Theta1_Omega2inv", A_HEIS_RELS, _mul(R, T1, O2inv), _mul(O2inv, T1))
    if corrected:
        _compare(rep, "R_Omega2_Omega1_corrected", A_HEIS_RELS + CORRECTED, _mul(R, O2, O1), _mul(O1, O2, R))
    return rep


def check_reflection(can: Canonical, X: TensorElement | None = None, name: str = "L") -> Report:
    """Reflection equation for ℒ (in D^3) or for an element X of D ⊗ H(A)."""
    D = can.D
    rep = Report("reflection", f"{name} over {D.name}")
    if X is None:
        amb = [D, D, D]
        R12 = can.R12.embed((0, 1), amb)
        R21 = can.R12.embed((1, 0), amb)
        R13 = can.R12.embed((0, 2), amb)
        R31 = can.R12.embed((2, 0), amb)
        R23 = can.R12.embed((1, 2), amb)
        R32 = can.R12.embed((2, 1), amb)
        X1 = tensor_multiply(R31, R13)
        X2 = tensor_multiply(R32, R23)
    else:
        amb = [D, D, X.factors[1]]
        R12 = can.R12.embed((0, 1), amb)
        R21 = can.R12.embed((1, 0), amb)
        X1 = X.embed((0, 2), amb)
        X2 = X.embed((1, 2), amb)
    _compare(rep, f"reflection_equation_{name}", A_REF_EQ, _mul(X1, R12, X2, R21), _mul(R12, X2, R21, X1))
    return rep


def check_all_reflections(can: Canonical, corrected: bool = True) -> Report:
    rep = Report("reflection", can.D.name)
    rep.extend(check_reflection(can))
    rep.extend(check_reflection(can, can.LHat, "LHat"))
    rep.extend(check_reflection(can, can.LHatPrime, "LHatPrime"))
    if corrected:
        rep.extend(check_reflection(can, can.LHatCorrected, "LHat_corrected"))
        rep.extend(check_reflection(can, can.LHatPrimeCorrected, "LHatPrime_corrected"))
    return rep


def mu_R_leg(can: Canonical, X: TensorElement) -> TensorElement:
    """``(id ⊗ mu_R)(X)`` for X in D ⊗ D, using the explicit mu_R."""
    return X.map_leg(1, can.pkg.moment_maps.mu_R_explicit, can.H)


def check_mu_r_rtt(can: Canonical, corrected: bool = True) -> Report:
    rep = Report("mu-rtt", can.H.name)
    muR12 = mu_R_leg(can, can.R12)
    muR21 = mu_R_leg(can, can.R21)
    muL = can.mu_R_of_L
    forms = [("", can.ThetaTilde, can.OmegaTilde, can.LHat, "")]
    if corrected:
        forms.append(("_corrected", can.ThetaTildeCorrected, can.OmegaTildeCorrected, can.LHatCorrected, CORRECTED))
    for suffix, TT, OT, LH, tag in forms:
        _compare(rep, "mu_R_of_R12_is_ThetaTilde" + suffix, A_MU_RTT + tag, muR12, TT)
        _compare(rep, "mu_R_of_R21_is_Omega_OmegaTilde" + suffix, A_MU_RTT + tag, muR21,
                 tensor_multiply(can.Omega, OT))
        _compare(rep, "mu_R_of_L_is_Omega_OmegaTilde_ThetaTilde" + suffix, A_MU_RTT + tag, muL,
                 _mul(can.Omega, OT, TT))
        _compare(rep, "ThetaInv_OmegaInv_is_u1_OmegaTilde_ThetaTilde" + suffix, A_U_RTT + tag,
                 tensor_multiply(can.Theta_inv, can.Omega_inv), _mul(can.u1, OT, TT))
        _compare(rep, "rtt_final" + suffix, A_RTT_FINAL + tag, muL, LH)
    return rep


def frt_presentation_check(can: Canonical, corrected: bool = True) -> Report:
    """L̂′ solves the reflection equation; record how far ℒ ↦ L̂′ is from mu_R.

    The discrepancy recorded is ``L̂′ − (id⊗mu_R)(ℒ)``, the sign under which
    it equals ``Ω (1 − u1⁻¹) Θ Ω⁻¹``.
    """
    rep = Report("frt", can.H.name)
    muL = can.mu_R_of_L
    forms = [("", can.LHatPrime, can.Theta, "")]
    if corrected:
        forms.append(("_corrected", can.LHatPrimeCorrected, can.Theta_inv, CORRECTED))
    for suffix, LP, T, tag in forms:
        rep.extend(check_reflection(can, LP, name="LHatPrime" + suffix))
        discrepancy = LP - muL
        predicted = _mul(can.Omega, can.one - can.u1_inv, T, can.Omega_inv)
        rep.info["discrepancy_terms" + suffix] = len(discrepancy.terms)
        rep.info["discrepancy_is_zero" + suffix] = discrepancy.is_zero()
        _compare(rep, "discrepancy_equals_Omega_(1-u1inv)_Theta_OmegaInv" + suffix, A_FRT + tag,
                 discrepancy, predicted)
    return rep
