from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from hopfdoubles.catalog import CATALOG_NAMES, catalog_build, sweedler_algebra, taft_algebra
from hopfdoubles.errors import BadField, UnknownName
from hopfdoubles.hopf import (
    DualBasisPair,
    HopfAlgebra,
    dual,
    iterated_coproduct,
    same_hopf_structure,
    twist,
    verify_hopf,
    verify_pairing,
)
from hopfdoubles.scalars import FieldSpec
from hopfdoubles.tensors import TensorElement, tensor_multiply

from conftest import algebra


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_algebras_are_hopf(name):
    A = algebra(name)
    rep = verify_hopf(A)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("name", ["sweedler", "group:S3", "taft:3", "dual_group:S3"])
def test_dual_dual_and_twists_are_involutive(name):
    A = algebra(name)
    Ad, P = dual(A)
    assert verify_pairing(P).passed
    assert DualBasisPair.from_pairing(P).check()
    Add, _ = dual(Ad)
    assert same_hopf_structure(Add, A)
    assert same_hopf_structure(twist(twist(A, "op"), "op"), A)
    assert same_hopf_structure(twist(twist(A, "cop"), "cop"), A)
    assert verify_hopf(twist(A, "op")).passed
    assert verify_hopf(twist(A, "cop")).passed


def test_catalog_dimensions():
    dims = {name: algebra(name).dim for name in CATALOG_NAMES}
    assert dims["trivial"] == 1 and dims["group:Z/4"] == 4 and dims["group:S3"] == 6
    assert dims["sweedler"] == 4 and dims["taft:3"] == 9 and dims["taft:4"] == 16
    assert algebra("taft:3").field == FieldSpec.cyclotomic(3)


def test_sweedler_antipode_has_order_four():
    A = algebra("sweedler")
    x, g, gx = 1, 2, 3
    assert A.S({x: 1}) == {gx: -1}
    S2 = A.antipode @ A.antipode
    assert S2({x: 1}) == {x: -1}
    assert S2({g: 1}) == {g: 1}
    S4 = S2 @ S2
    assert all(S4({i: 1}) == {i: 1} for i in range(4))


def test_taft2_matches_sweedler():
    T = taft_algebra(2)  # over Q(zeta_2) = Q with zeta = -1
    S = sweedler_algebra()
    assert [[T.basis_product(i, j) for j in range(4)] for i in range(4)] == \
           [[S.basis_product(i, j) for j in range(4)] for i in range(4)]
    assert T.comult == S.comult and T.counit == S.counit and T.antipode == S.antipode


def test_group_z2_antipode_is_identity():
    A = algebra("group:Z/2")
    assert A.dim == 2
    assert all(A.S({i: 1}) == {i: 1} for i in range(2))


def test_unknown_name():
    with pytest.raises(UnknownName):
        catalog_build("group:Z/9")
    with pytest.raises(UnknownName):
        catalog_build("quaternion")


def vectors(A, lo=-2, hi=2):
    return st.dictionaries(st.integers(0, A.dim - 1), st.integers(lo, hi), max_size=4).map(
        lambda d: {k: v for k, v in d.items() if v})


@pytest.mark.parametrize("name", ["sweedler", "taft:3", "group:S3"])
@settings(max_examples=40)
@given(data=st.data())
def test_structure_maps_on_random_elements(name, data):
    A = algebra(name)
    a = data.draw(vectors(A))
    b = data.draw(vectors(A))
    ab = A.mul(a, b)
    # Δ(ab) = Δ(a)Δ(b)
    lhs = TensorElement([A, A], A.coproduct(ab))
    rhs = tensor_multiply(TensorElement([A, A], A.coproduct(a)), TensorElement([A, A], A.coproduct(b)))
    assert lhs == rhs
    # S(ab) = S(b)S(a), ε(ab) = ε(a)ε(b)
    assert A.S(ab) == A.mul(A.S(b), A.S(a))
    assert A.eps(ab) == A.eps(a) * A.eps(b)
    # coassociativity via the two bracketings of the iterated coproduct
    e = A.element(a)
    assert iterated_coproduct(e, 3, bracketing="left") == iterated_coproduct(e, 3, bracketing="right")


def _mutated_sweedler(where):
    A = sweedler_algebra()
    table = [[dict(A.basis_product(i, j)) for j in range(4)] for i in range(4)]
    comult = [dict(d) for d in A.comult]
    antipode = [dict(c) for c in A.antipode.columns]
    kind, key = where
    if kind == "mult":
        i, j, k = key
        table[i][j][k] = table[i][j].get(k, 0) + 1
    elif kind == "comult":
        i, jk = key
        comult[i][jk] = comult[i].get(jk, 0) + 1
    else:
        i, j = key
        antipode[i][j] = antipode[i].get(j, 0) + 1
    return HopfAlgebra("sweedler-mutant", A.field, A.basis, A.unit, comult, A.counit, antipode, table=table)


@pytest.mark.parametrize("where", [("mult", (1, 1, 0)), ("comult", (1, (1, 1))), ("antipode", (2, 0))])
def test_verify_hopf_detects_corruption(where):
    rep = verify_hopf(_mutated_sweedler(where))
    assert not rep.passed
    assert all(c.witness and "at" in c.witness for c in rep.failures())


def test_catalog_field_must_match():
    with pytest.raises(BadField):
        catalog_build("taft:3", field=FieldSpec())


def test_every_single_entry_mutation_of_sweedler_is_detected():
    from test_acceptance import _positions, mutate

    A = algebra("sweedler")
    missed = [pos for pos in _positions(A) if verify_hopf(mutate(A, pos)).passed]
    assert missed == []
