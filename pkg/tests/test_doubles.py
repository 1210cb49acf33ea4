from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from hopfdoubles.doubles import (
    build_tdual,
    chiral_embeddings,
    moment_maps,
    pullback_check,
    u_element,
    universal_R,
    verify_drinfeld,
    verify_heisenberg,
)
from hopfdoubles.tensors import TensorElement, tensor_multiply

from conftest import SMALL, package


# -- independent oracle for the double's product and coproduct ------------

def triple_coproduct(H, i):
    """(Δ⊗id)Δ(e_i) as {(p, q, r): c}, by two explicit loops."""
    out = {}
    for (pq, r), c in H.comult[i].items():
        for (p, q), d in H.comult[pq].items():
            out[(p, q, r)] = out.get((p, q, r), 0) + c * d
    return out


def double_product_oracle(A, Ad, left, right):
    """(x⊗a)(y⊗b) = Σ ⟨a_1, y_3⟩⟨a_3, S⁻¹y_1⟩ x y_2 ⊗ a_2 b with ⟨e_i, f^j⟩ = δ_ij."""
    n = A.dim
    i, j = divmod(left, n)
    k, l = divmod(right, n)
    out = {}
    for (p, q, r), c in triple_coproduct(A, j).items():
        s_inv_er = A.Sinv({r: 1})
        for (s, t, u), d in triple_coproduct(Ad, k).items():
            if p != u or not s_inv_er.get(s):
                continue
            w = c * d * s_inv_er[s]
            for xy, e in Ad.basis_product(i, t):
                for ab, f in A.basis_product(q, l):
                    key = xy * n + ab
                    out[key] = out.get(key, 0) + w * e * f
    return {key: v for key, v in out.items() if v}


def double_coproduct_oracle(A, Ad, idx):
    """Δ(x⊗a) = (x_2⊗a_1) ⊗ (x_1⊗a_2) on (A*)^cop ⊗ A."""
    n = A.dim
    i, j = divmod(idx, n)
    out = {}
    for (x1, x2), c in Ad.comult[i].items():
        for (a1, a2), d in A.comult[j].items():
            key = (x2 * n + a1, x1 * n + a2)
            out[key] = out.get(key, 0) + c * d
    return {key: v for key, v in out.items() if v}


@pytest.mark.parametrize("name", ["group:Z/3", "sweedler", "taft:3"])
def test_double_structure_matches_oracle(name):
    pkg = package(name)
    A, Ad, D = pkg.base, pkg.dual, pkg.drinfeld
    N = D.dim
    for left in range(N):
        assert dict(D.comult[left]) == double_coproduct_oracle(A, Ad, left)
        for right in range(N):
            got = {k: v for k, v in D.basis_product(left, right) if v}
            assert got == double_product_oracle(A, Ad, left, right), (left, right)


@pytest.mark.parametrize("name", SMALL + ["taft:3"])
def test_double_suite(name):
    pkg = package(name)
    for rep in (verify_drinfeld(pkg), universal_R(pkg), u_element(pkg)):
        assert rep.passed, rep.to_text()


@pytest.mark.parametrize("n", [2, 3])
def test_double_of_abelian_group_is_commutative(n):
    D = package(f"group:Z/{n}").drinfeld
    assert D.dim == n * n
    for i in range(D.dim):
        for j in range(D.dim):
            assert D.mul({i: 1}, {j: 1}) == D.mul({j: 1}, {i: 1})


def test_double_of_sweedler_is_not_commutative():
    D = package("sweedler").drinfeld
    assert D.dim == 16
    assert any(D.mul({i: 1}, {j: 1}) != D.mul({j: 1}, {i: 1}) for i in range(16) for j in range(16))


def test_u_for_z2():
    # u = Σ_g δ_g ⊗ g, and u² = 1 since g² = 1
    pkg = package("group:Z/2")
    assert pkg.u == {0: 1, 3: 1}
    assert pkg.drinfeld.mul(pkg.u, pkg.u) == pkg.drinfeld.unit


def test_r_times_inverse_is_one():
    pkg = package("sweedler")
    D = pkg.drinfeld
    one = TensorElement.one([D, D])
    assert tensor_multiply(pkg.R, pkg.R_inverse) == one == tensor_multiply(pkg.R_inverse, pkg.R)


def d_vectors(dim):
    return st.dictionaries(st.integers(0, dim - 1), st.integers(-2, 2), min_size=1, max_size=3).map(
        lambda d: {k: v for k, v in d.items() if v})


@settings(max_examples=60)
@given(data=st.data())
def test_double_comultiplication_is_multiplicative(data):
    D = package("sweedler").drinfeld
    a = data.draw(d_vectors(D.dim))
    b = data.draw(d_vectors(D.dim))
    lhs = TensorElement([D, D], D.coproduct(D.mul(a, b)))
    rhs = tensor_multiply(TensorElement([D, D], D.coproduct(a)), TensorElement([D, D], D.coproduct(b)))
    assert lhs == rhs


@settings(max_examples=60)
@given(data=st.data())
def test_u_conjugation_on_random_elements(data):
    pkg = package("sweedler")
    D = pkg.drinfeld
    d = data.draw(d_vectors(D.dim))
    lhs = D.mul(D.mul(pkg.u, d), pkg.u_inverse)
    assert lhs == D.S(D.S(d))


@pytest.mark.parametrize("name", SMALL)
def test_tdual_formulas(name):
    pkg = package(name)
    rep = build_tdual(pkg, raise_on_mismatch=False)
    assert rep.passed, rep.to_text()
    assert pkg.tdual.dim == pkg.n ** 2


@pytest.mark.parametrize("name", SMALL + ["taft:3"])
def test_heisenberg_suite(name):
    pkg = package(name)
    hd = pkg.heisenberg
    rep = verify_heisenberg(hd)
    assert rep.passed, rep.to_text()
    assert rep.info["rho_L_rank"] == pkg.n ** 2
    rep = chiral_embeddings(hd)
    assert rep.passed, rep.to_text()


def test_rho_L_sends_unit_to_identity():
    hd = package("sweedler").heisenberg
    unit = hd.algebra.unit
    assert hd.rho_L(unit) == hd.end.unit
    assert hd.iota(unit) == unit


@pytest.mark.parametrize("name", SMALL)
def test_moment_suite(name):
    pkg = package(name)
    rep = moment_maps(pkg)
    assert rep.passed, rep.to_text()
    rep = pullback_check(pkg)
    assert rep.passed, rep.to_text()


def test_big_heisenberg_dimension():
    pkg = package("sweedler")
    assert pkg.big_heisenberg.algebra.dim == 256
    mm = pkg.moment_maps
    assert mm.mu_R_explicit == mm.mu_R_oracle
    assert mm.mu_L.domain == mm.mu_R_abstract.domain == 16
