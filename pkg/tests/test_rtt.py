from __future__ import annotations

import pytest

from hopfdoubles.rtt import (
    build_canonical,
    check_all_reflections,
    check_heis_rels,
    check_mu_r_rtt,
    check_reflection,
    frt_presentation_check,
)
from hopfdoubles.tensors import TensorElement, tensor_multiply

from conftest import SMALL, package


def canonical(name):
    can, rep = build_canonical(package(name))
    assert rep.passed, rep.to_text()
    return can


def corrected_only(rep):
    return [c for c in rep.checks if c.name.endswith("_corrected")]


@pytest.mark.parametrize("name", SMALL)
def test_canonical_inverses(name):
    can = canonical(name)
    assert tensor_multiply(can.Theta, can.Theta_inv) == can.one == tensor_multiply(can.Theta_inv, can.Theta)
    assert tensor_multiply(can.Omega, can.Omega_inv) == can.one == tensor_multiply(can.Omega_inv, can.Omega)


@pytest.mark.parametrize("name", SMALL)
def test_reflection_equation_for_L(name):
    can = canonical(name)
    assert check_reflection(can).passed


@pytest.mark.parametrize("name", SMALL)
def test_corrected_forms_hold(name):
    can = canonical(name)
    reports = [check_heis_rels(can), check_all_reflections(can), check_mu_r_rtt(can), frt_presentation_check(can)]
    checks = [c for r in reports for c in corrected_only(r)]
    assert len(checks) == 10
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
    # the relations that need no correction
    heis = reports[0]
    assert heis.get("R_Theta1_Theta2").passed and heis.get("R_Theta1_Omega2inv").passed


@pytest.mark.parametrize("name", ["trivial", "group:Z/2"])
def test_printed_forms_hold_on_small_groups(name):
    can = canonical(name)
    for rep in (check_heis_rels(can, corrected=False), check_all_reflections(can, corrected=False),
                check_mu_r_rtt(can, corrected=False), frt_presentation_check(can, corrected=False)):
        assert rep.passed, rep.to_text()


def test_sweedler_omega_relation_needs_swapped_legs():
    # R Ω1 Ω2 and Ω2 Ω1 R differ on Sweedler, while R Ω2 Ω1 = Ω1 Ω2 R holds
    can = canonical("sweedler")
    factors = [can.D, can.D, can.H]
    O1 = can.Omega.embed((0, 2), factors)
    O2 = can.Omega.embed((1, 2), factors)
    R = can.R12.embed((0, 1), factors)
    m = lambda *ts: ts[0] if len(ts) == 1 else tensor_multiply(ts[0], m(*ts[1:]))
    assert m(R, O1, O2) != m(O2, O1, R)
    assert m(R, O2, O1) == m(O1, O2, R)


def test_discrepancy_values():
    # number of nonzero coefficients in L̂′ − (id⊗mu_R)(ℒ)
    expected = {"trivial": (0, 0), "group:Z/2": (4, 4), "group:Z/3": (12, 12), "sweedler": (31, 36)}
    for name, (printed, corrected) in expected.items():
        info = frt_presentation_check(canonical(name)).info
        assert (info["discrepancy_terms"], info["discrepancy_terms_corrected"]) == (printed, corrected)
        assert info["discrepancy_is_zero"] == (printed == 0)


def test_canonical_element_shapes():
    can = canonical("sweedler")
    assert can.R12.shape == (16, 16)
    assert can.Theta.shape == (16, 16) and can.Theta.factors[1] is can.H
    assert isinstance(can.L, TensorElement) and can.L.shape == (16, 16)
