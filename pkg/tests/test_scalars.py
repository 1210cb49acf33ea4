from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfdoubles.errors import DivisionByZero, FieldMismatch, NotCyclotomic, ParseError
from hopfdoubles.scalars import (
    RATIONAL,
    Cyclotomic,
    FieldSpec,
    canon,
    cyclotomic_polynomial,
    div,
    euler_phi,
    inv,
    root_of_unity,
)


# -- oracle: Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)} -----------------------

def mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _exact_div(num, den):
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = Fraction(num[k + len(den) - 1], den[-1])
        quot[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert all(c == 0 for c in num)
    return [int(c) for c in quot]


def phi_by_mobius(n: int) -> list[int]:
    top, bottom = [1], [1]
    for d in range(1, n + 1):
        if n % d:
            continue
        m = mobius(n // d)
        factor = [-1] + [0] * (d - 1) + [1]
        if m == 1:
            top = _mul(top, factor)
        elif m == -1:
            bottom = _mul(bottom, factor)
    return _exact_div(top, bottom)


@pytest.mark.parametrize("n", range(1, 37))
def test_cyclotomic_polynomial_matches_mobius_product(n):
    assert cyclotomic_polynomial(n) == phi_by_mobius(n)


def test_small_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == [-1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


# -- field axioms -----------------------------------------------------------

ORDERS = [3, 4, 5, 8, 12]
small_q = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def elements(draw, order=None):
    n = order if order is not None else draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(small_q, min_size=euler_phi(n), max_size=euler_phi(n)))
    return n, Cyclotomic.make(n, coeffs)


@st.composite
def triples(draw):
    n = draw(st.sampled_from(ORDERS))
    return [draw(elements(n))[1] for _ in range(3)]


@settings(max_examples=1000)
@given(triples())
def test_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@settings(max_examples=1000)
@given(elements())
def test_inverse(pair):
    n, a = pair
    if a == 0:
        with pytest.raises(DivisionByZero):
            inv(a)
        return
    assert a * inv(a) == 1
    assert div(a, a) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 12])
def test_root_of_unity_has_exact_order(n):
    z = root_of_unity(FieldSpec.cyclotomic(n))
    powers = [z ** k for k in range(1, n + 1)]
    assert powers[-1] == 1
    assert all(p != 1 for p in powers[:-1])
    # sum of all n-th roots of unity vanishes for n > 1
    if n > 1:
        total = 0
        for p in powers:
            total = total + p
        assert total == 0


def test_rational_values_are_demoted():
    z = root_of_unity(FieldSpec.cyclotomic(4))
    assert z * z == -1
    assert type(z * z) is int
    assert canon(Fraction(6, 3)) == 2 and type(canon(Fraction(6, 3))) is int


def test_division_keeps_exactness():
    assert div(1, 3) == Fraction(1, 3)
    assert div(6, 3) == 2 and type(div(6, 3)) is int
    with pytest.raises(DivisionByZero):
        div(1, 0)


def test_mixed_orders_rejected():
    a = root_of_unity(FieldSpec.cyclotomic(3))
    b = root_of_unity(FieldSpec.cyclotomic(5))
    with pytest.raises(FieldMismatch):
        a + b


@settings(max_examples=300)
@given(elements())
def test_format_parse_round_trip(pair):
    n, a = pair
    F = FieldSpec.cyclotomic(n)
    assert F.parse(F.format(a)) == a
    assert F.format(F.parse(F.format(a))) == F.format(a)


@given(small_q)
def test_rational_format_round_trip(q):
    assert RATIONAL.parse(RATIONAL.format(q)) == q


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1.5", "[1,2]"])
def test_rational_parse_rejects(text):
    with pytest.raises(ParseError):
        RATIONAL.parse(text)


def test_cyclotomic_parse_rejects_wrong_length():
    with pytest.raises(ParseError):
        FieldSpec.cyclotomic(5).parse("[1,2]")


def test_rationals_have_no_root_of_unity():
    with pytest.raises(NotCyclotomic):
        root_of_unity(RATIONAL)


def test_field_json_round_trip():
    for F in (RATIONAL, FieldSpec.cyclotomic(3)):
        assert FieldSpec.from_json(F.to_json()) == F
    with pytest.raises(ParseError):
        FieldSpec.from_json({"kind": "real"})
