"""Exact scalars: rationals and cyclotomic fields Q(zeta_n).

Rational scalars are plain ``int`` (when integral) or ``fractions.Fraction``.
A cyclotomic scalar that happens to be rational is stored the same way, so
only genuinely irrational values are :class:`Cyclotomic` instances.  This
keeps the hot loops of the tensor code on Python integers.

Division must go through :func:`div` / :func:`inv`; ``int / int`` would
produce a float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, FieldMismatch, NotCyclotomic, ParseError

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, "Cyclotomic"]

__all__ = [
    "FieldSpec",
    "RATIONAL",
    "Cyclotomic",
    "Scalar",
    "canon",
    "div",
    "inv",
    "scalar_arith",
    "cyclotomic_polynomial",
    "root_of_unity",
    "euler_phi",
]


def canon(x):
    """Canonical representative of a scalar (integral Fractions become ints)."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


# ----------------------------------------------------------------------
# Integer polynomials (coefficient lists, lowest degree first)
# ----------------------------------------------------------------------

def _poly_trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_divmod_monic(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], _poly_trim(num)
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                num[k - dd + j] -= c * den[j]
    return _poly_trim(quot), _poly_trim(num[:dd] or [0])


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, list(_cyclotomic(d)))
            assert rem == [0]
    return tuple(num)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    return list(_cyclotomic(n))


def euler_phi(n: int) -> int:
    return len(_cyclotomic(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows give x^d mod Phi_n for d = phi(n) .. 2 phi(n) - 2."""
    phi_poly = _cyclotomic(n)
    deg = len(phi_poly) - 1
    rows = []
    cur = [-c for c in phi_poly[:deg]]  # x^deg
    for _ in range(max(deg - 1, 0)):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [c - top * p for c, p in zip(cur, phi_poly[:deg])]
    return tuple(rows)


# ----------------------------------------------------------------------
# Cyclotomic elements
# ----------------------------------------------------------------------

class Cyclotomic:
    """An irrational element of Q(zeta_n) as a residue modulo Phi_n.

    Construct through :meth:`make`, which demotes rational values.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: tuple):
        self.order = order
        self.coeffs = coeffs
        self._hash = None

    @staticmethod
    def make(order: int, coeffs) -> Scalar:
        coeffs = tuple(canon(c) for c in coeffs)
        deg = euler_phi(order)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for order {order}")
        if any(coeffs[1:]):
            return Cyclotomic(order, coeffs)
        return coeffs[0]

    @staticmethod
    def from_poly(order: int, poly) -> Scalar:
        """Reduce an arbitrary-degree polynomial in zeta_n."""
        phi_poly = _cyclotomic(order)
        deg = len(phi_poly) - 1
        poly = list(poly)
        for k in range(len(poly) - 1, deg - 1, -1):
            c = poly[k]
            if c:
                poly[k] = 0
                for j in range(deg):
                    poly[k - deg + j] -= c * phi_poly[j]
        poly = (poly + [0] * deg)[:deg]
        return Cyclotomic.make(order, poly)

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Cyclotomic") -> None:
        if other.order != self.order:
            raise FieldMismatch(
                f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )

    def __add__(self, other):
        if isinstance(other, Cyclotomic):
            self._check(other)
            return Cyclotomic.make(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, (canon(self.coeffs[0] + other),) + self.coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (Cyclotomic, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Cyclotomic):
            self._check(other)
            a, b = self.coeffs, other.coeffs
            deg = len(a)
            prod = [0] * (2 * deg - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            out = prod[:deg]
            for k, row in enumerate(_reduction_table(self.order)):
                c = prod[deg + k]
                if c:
                    for j in range(deg):
                        if row[j]:
                            out[j] += c * row[j]
            return Cyclotomic.make(self.order, out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return 0
            return Cyclotomic(self.order, tuple(canon(c * other) for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        # solve (self * c) = 1 via the multiplication matrix over Q
        deg = len(self.coeffs)
        cols = []
        for k in range(deg):
            basis = [0] * deg
            basis[k] = 1
            prod = self * Cyclotomic.make(self.order, basis) if k else self
            cols.append(coefficients_of(prod, self.order))
        rows = [[Fraction(cols[c][r]) for c in range(deg)] + [Fraction(int(r == 0))] for r in range(deg)]
        for c in range(deg):
            p = next(r for r in range(c, deg) if rows[r][c] != 0)
            rows[c], rows[p] = rows[p], rows[c]
            pv = rows[c][c]
            rows[c] = [v / pv for v in rows[c]]
            for r in range(deg):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        return Cyclotomic.make(self.order, [row[-1] for row in rows])

    def __truediv__(self, other):
        return div(self, other)

    def __rtruediv__(self, other):
        return div(other, self)

    def __pow__(self, k: int):
        if k < 0:
            return inv(self) ** (-k)
        result: Scalar = 1
        base: Scalar = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return False  # rational values are never stored as Cyclotomic
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Cyclotomic({self.order}, {list(map(str, self.coeffs))})"


def coefficients_of(x: Scalar, order: int) -> tuple:
    """Coefficient vector of ``x`` in the power basis of Q(zeta_order)."""
    if isinstance(x, Cyclotomic):
        if x.order != order:
            raise FieldMismatch(f"element of Q(zeta_{x.order}) used in Q(zeta_{order})")
        return x.coeffs
    return (x,) + (0,) * (euler_phi(order) - 1)


def inv(x: Scalar) -> Scalar:
    if isinstance(x, Cyclotomic):
        return x.inverse()
    if not x:
        raise DivisionByZero("division by zero")
    if type(x) is int:
        return Fraction(1, x) if x not in (1, -1) else x
    return canon(1 / x)


def div(a: Scalar, b: Scalar) -> Scalar:
    if not isinstance(b, Cyclotomic) and not b:
        raise DivisionByZero("division by zero")
    if type(a) is int and type(b) is int:
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    if isinstance(a, Cyclotomic) or isinstance(b, Cyclotomic):
        return a * inv(b)
    return canon(Fraction(a) / b)


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Exact field operation ``op`` in {'add', 'sub', 'mul', 'div'}."""
    if isinstance(a, Cyclotomic) and isinstance(b, Cyclotomic) and a.order != b.order:
        raise FieldMismatch(f"Q(zeta_{a.order}) vs Q(zeta_{b.order})")
    if op == "add":
        return canon(a + b)
    if op == "sub":
        return canon(a - b)
    if op == "mul":
        return canon(a * b)
    if op == "div":
        return div(a, b)
    raise ValueError(f"unknown operation {op!r}")


# ----------------------------------------------------------------------
# Field descriptors
# ----------------------------------------------------------------------

_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals or the cyclotomic field Q(zeta_order)."""

    kind: str = "rational"
    order: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.order is not None:
                raise ValueError("rational field carries no order")
        elif self.kind == "cyclotomic":
            if not isinstance(self.order, int) or self.order < 1:
                raise ValueError(f"cyclotomic order must be a positive integer, got {self.order!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @staticmethod
    def cyclotomic(n: int) -> "FieldSpec":
        return FieldSpec("cyclotomic", n)

    @property
    def degree(self) -> int:
        return 1 if self.kind == "rational" else euler_phi(self.order)

    def __str__(self):
        return "Q" if self.kind == "rational" else f"Q(zeta_{self.order})"

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "cyclotomic", "order": self.order}

    @staticmethod
    def from_json(obj) -> "FieldSpec":
        try:
            return FieldSpec(obj["kind"], obj.get("order"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad field description {obj!r}: {exc}") from exc

    def contains(self, x) -> bool:
        if isinstance(x, Cyclotomic):
            return self.kind == "cyclotomic" and x.order == self.order
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def check(self, x) -> Scalar:
        if not self.contains(x):
            raise FieldMismatch(f"{x!r} is not an element of {self}")
        return canon(x)

    def coefficients(self, x: Scalar) -> tuple:
        if self.kind == "rational":
            return (self.check(x),)
        return coefficients_of(x, self.order)

    def from_coefficients(self, coeffs) -> Scalar:
        if self.kind == "rational":
            (c,) = coeffs
            return canon(c)
        return Cyclotomic.make(self.order, coeffs)

    # string round trip ----------------------------------------------------
    def format(self, x: Scalar) -> str:
        if self.kind == "rational":
            return _format_rational(self.check(x))
        return "[" + ",".join(_format_rational(c) for c in self.coefficients(x)) + "]"

    def parse(self, text: str) -> Scalar:
        if not isinstance(text, str):
            raise ParseError(f"scalar must be a string, got {text!r}")
        if self.kind == "rational":
            return _parse_rational(text)
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ParseError(f"cyclotomic scalar must look like [c0,c1,...]: {text!r}")
        parts = [p for p in s[1:-1].split(",")]
        if len(parts) != self.degree:
            raise ParseError(f"expected {self.degree} coefficients in {text!r}")
        return Cyclotomic.make(self.order, [_parse_rational(p) for p in parts])

    def root_of_unity(self) -> Scalar:
        return root_of_unity(self)


RATIONAL = FieldSpec()


def _format_rational(x: Rational) -> str:
    x = canon(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_rational(text: str) -> Rational:
    m = _FRACTION_RE.match(text)
    if not m:
        raise ParseError(f"not a rational scalar: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return canon(Fraction(num, den))


def root_of_unity(spec: FieldSpec) -> Scalar:
    """The generator zeta_n of a cyclotomic field (the class of x)."""
    if spec.kind != "cyclotomic":
        raise NotCyclotomic(f"{spec} has no distinguished root of unity")
    return Cyclotomic.from_poly(spec.order, [0, 1])
