from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfdoubles.errors import ShapeMismatch, Singular
from hopfdoubles.linalg import LinearMap, Subspace, kernel, solve_or_invert


def dense_rank(rows):
    """Textbook Gaussian elimination over Fractions, used as the oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


@st.composite
def matrices(draw, square=False):
    m = draw(st.integers(1, 6))
    n = m if square else draw(st.integers(1, 6))
    entry = st.integers(-3, 3)
    # bias towards rank deficiency by repeating rows
    rows = [draw(st.lists(entry, min_size=n, max_size=n)) for _ in range(m)]
    if m > 1 and draw(st.booleans()):
        rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1 % m])]
    return rows


def apply(rows, v):
    return [sum(Fraction(r[j]) * v.get(j, 0) for j in range(len(r))) for r in rows]


@settings(max_examples=300)
@given(matrices())
def test_rank_nullity_against_dense_oracle(rows):
    M = LinearMap.from_matrix(rows)
    r = M.rank()
    assert r == dense_rank(rows)
    ker = kernel(M)
    assert len(ker) == M.domain - r
    for v in ker:
        assert all(x == 0 for x in apply(rows, v))
    assert Subspace(M.domain, ker).dim == len(ker)


@settings(max_examples=300)
@given(matrices(square=True))
def test_inverse_or_singular(rows):
    M = LinearMap.from_matrix(rows)
    if dense_rank(rows) < len(rows):
        with pytest.raises(Singular):
            M.inverse()
        return
    Minv = M.inverse()
    assert M @ Minv == LinearMap.identity(M.domain)
    assert Minv @ M == LinearMap.identity(M.domain)


@given(matrices(square=True), st.lists(st.integers(-4, 4), min_size=6, max_size=6))
def test_solve(rows, target):
    M = LinearMap.from_matrix(rows)
    rhs = {i: c for i, c in enumerate(target[: M.codomain]) if c}
    if dense_rank(rows) < len(rows):
        with pytest.raises(Singular):
            solve_or_invert(M, rhs)
        return
    v = solve_or_invert(M, rhs)
    assert M(v) == rhs


def test_subspace_reduce_and_complement():
    S = Subspace(4, [{0: 1, 1: 1}, {1: 2, 2: 2}])
    assert S.dim == 2
    assert S.contains({0: 1, 2: -1})
    assert not S.contains({3: 1})
    assert S.complement_coords() == [2, 3]
    assert S.insert({0: 2, 1: 2}) is False
    assert S.insert({3: 5}) is True and S.dim == 3


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        LinearMap.from_matrix([[1, 2], [3]])
    with pytest.raises(ShapeMismatch):
        LinearMap(2, 2, [{0: 1}])
    with pytest.raises(ShapeMismatch):
        LinearMap(1, 1, [{0: 1}]) @ LinearMap(1, 2, [{1: 1}])


def test_explicit_zero_entries_are_ignored():
    S = Subspace(3, [{0: 0, 1: 2}, {0: 0, 2: 0}])
    assert S.dim == 1
    assert S.pivots == [1]
