"""Named check suites, as run by ``hopfdoubles check``."""

from __future__ import annotations

from typing import Callable

from .doubles import (
    DoublePackage,
    build_drinfeld_double,
    build_tdual,
    chiral_embeddings,
    moment_maps,
    pullback_check,
    u_element,
    universal_R,
    verify_drinfeld,
    verify_heisenberg,
)
from .errors import AxiomFailure, InvalidInput
from .hopf import DualBasisPair, HopfAlgebra, dual, same_hopf_structure, twist, verify_hopf, verify_pairing
from .reports import Report, combine, timed

SUITES = ["hopf", "pairing", "double", "ybe", "tdual", "iota", "moment", "reduction", "rtt", "all"]

# suites whose ambient spaces grow like dim(A)^4; larger inputs need --heavy
HEAVY_SUITES = {"reduction", "rtt"}
HEAVY_DIM = 8


class NeedsHeavy(InvalidInput):
    """The requested suite is too expensive without ``--heavy``."""


def suite_hopf(A: HopfAlgebra, pkg=None) -> Report:
    rep = verify_hopf(A)
    Ad, _ = dual(A)
    Add, _ = dual(Ad)
    rep.add("dual_dual_is_identity", "A** = A",
            None if same_hopf_structure(Add, A) else {"at": [], "detail": "A** differs from A"})
    opop = twist(twist(A, "op"), "op")
    copcop = twist(twist(A, "cop"), "cop")
    ok = same_hopf_structure(opop, A) and same_hopf_structure(copcop, A)
    rep.add("op_op_and_cop_cop_are_identity", "(A^op)^op = A", None if ok else {"at": []})
    return rep


def suite_pairing(A: HopfAlgebra, pkg=None) -> Report:
    _, P = dual(A)
    rep = verify_pairing(P)
    ok = DualBasisPair.from_pairing(P).check()
    rep.add("dual_bases", "<a_i, x^j> = δ_ij", None if ok else {"at": []})
    return rep


def suite_double(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    rep = Report("double", pkg.drinfeld.name)
    rep.extend(pkg.reports.get("drinfeld") or verify_drinfeld(pkg))
    rep.extend(universal_R(pkg))
    rep.extend(u_element(pkg))
    return rep


def suite_ybe(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    return universal_R(pkg)


def suite_tdual(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    return build_tdual(pkg, raise_on_mismatch=False)


def suite_iota(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    rep = Report("iota", pkg.heisenberg.algebra.name)
    rep.extend(verify_heisenberg(pkg.heisenberg))
    rep.extend(chiral_embeddings(pkg.heisenberg))
    return rep


def suite_moment(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    rep = moment_maps(pkg)
    rep.extend(pullback_check(pkg))
    return rep


def suite_reduction(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    from .reduction import build_phi, reduce_big_heisenberg, residual_moment_map

    rep = Report("reduction", A.name)
    try:
        red = reduce_big_heisenberg(pkg)
        rep.extend(red.report)
        rep.add("dimension_is_n_squared", "heis-iso",
                None if red.dim == A.dim ** 2 else {"at": [], "detail": f"dim {red.dim}"})
        phi = build_phi(pkg, red)
        rep.extend(phi.report)
        rep.extend(residual_moment_map(pkg, red, phi))
    except AxiomFailure as exc:
        if isinstance(exc.report, Report):
            rep.extend(exc.report)
        if rep.passed:
            rep.add("construction", "reduction", {"at": [], "detail": str(exc)})
    return rep


def suite_rtt(A: HopfAlgebra, pkg: DoublePackage) -> Report:
    from .rtt import build_canonical, check_all_reflections, check_heis_rels, check_mu_r_rtt, frt_presentation_check

    can, rep = build_canonical(pkg)
    rep.suite = "rtt"
    rep.extend(check_heis_rels(can))
    rep.extend(check_all_reflections(can))
    rep.extend(check_mu_r_rtt(can))
    frt = frt_presentation_check(can)
    # the L̂′ reflection checks already appear in check_all_reflections
    for c in frt.checks:
        if c.name.startswith("discrepancy"):
            rep.checks.append(c)
    rep.info.update(frt.info)
    return rep


RUNNERS: dict[str, Callable] = {
    "hopf": suite_hopf,
    "pairing": suite_pairing,
    "double": suite_double,
    "ybe": suite_ybe,
    "tdual": suite_tdual,
    "iota": suite_iota,
    "moment": suite_moment,
    "reduction": suite_reduction,
    "rtt": suite_rtt,
}

NEEDS_PACKAGE = {"double", "ybe", "tdual", "iota", "moment", "reduction", "rtt"}


def run_suite(suite: str, A: HopfAlgebra, heavy: bool = False) -> Report:
    """Run one suite (or ``all``). Axiom failures come back as failed checks."""
    if suite not in SUITES:
        raise InvalidInput(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    if suite != "all" and suite in HEAVY_SUITES and A.dim > HEAVY_DIM and not heavy:
        raise NeedsHeavy(f"suite {suite} on an algebra of dimension {A.dim} needs --heavy "
                         f"(ambient dimension {A.dim ** 4})")
    reports = []
    skipped = []
    with timed(Report("pre", A.name)) as pre_rep:
        base = verify_hopf(A)
    base.wall_time = pre_rep.wall_time
    if not base.passed:
        # nothing downstream is meaningful on a non-Hopf input
        base.suite = suite
        return base
    pkg = None
    for name in names:
        if name in HEAVY_SUITES and A.dim > HEAVY_DIM and not heavy:
            skipped.append(name)
            continue
        rep = Report(name, A.name)
        with timed(rep):
            if name in NEEDS_PACKAGE and pkg is None:
                try:
                    pkg = build_drinfeld_double(A, verify=False)
                except AxiomFailure as exc:
                    rep.add("construction", name, {"at": [], "detail": str(exc)})
                    reports.append(rep)
                    break
            try:
                inner = RUNNERS[name](A, pkg)
            except AxiomFailure as exc:
                inner = Report(name, A.name)
                if isinstance(exc.report, Report):
                    inner.extend(exc.report)
                if inner.passed:
                    inner.add("construction", name, {"at": [], "detail": str(exc)})
            rep.checks, rep.info = inner.checks, inner.info
            rep.algebra = inner.algebra
        reports.append(rep)
    if suite != "all":
        return reports[0]
    out = combine("all", A.name, reports)
    if skipped:
        out.info["skipped_without_heavy"] = skipped
    return out
