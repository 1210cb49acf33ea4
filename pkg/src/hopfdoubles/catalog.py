"""Builtin Hopf algebras.

Names: ``trivial``, ``group:Z/n`` (n <= 4), ``group:S3``,
``dual_group:Z/n``, ``dual_group:S3``, ``sweedler``, ``taft:n``.
``ℤ`` is accepted in place of ``Z``.
"""

from __future__ import annotations

from itertools import permutations

from .algebra import Algebra
from .errors import AxiomFailure, BadField, UnknownName
from .hopf import HopfAlgebra, _tensor_mul2, dual, verify_hopf
from .scalars import RATIONAL, FieldSpec, Scalar, root_of_unity

CATALOG_NAMES = [
    "trivial",
    "group:Z/1", "group:Z/2", "group:Z/3", "group:Z/4", "group:S3",
    "dual_group:Z/2", "dual_group:Z/3", "dual_group:Z/4", "dual_group:S3",
    "sweedler",
    "taft:2", "taft:3", "taft:4",
]


def _group_algebra(name: str, labels: list[str], mul, inv) -> HopfAlgebra:
    n = len(labels)
    table = [[{mul(i, j): 1} for j in range(n)] for i in range(n)]
    return HopfAlgebra(
        name, RATIONAL, labels, unit={0: 1},
        comult=[{(i, i): 1} for i in range(n)],
        counit=[1] * n,
        antipode=[{inv(i): 1} for i in range(n)],
        table=table,
    )


def cyclic_group_algebra(n: int) -> HopfAlgebra:
    labels = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    return _group_algebra(f"group:Z/{n}", labels, lambda i, j: (i + j) % n, lambda i: (-i) % n)


def _cycle_label(p: tuple) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        c, t = [], s
        while t not in seen:
            seen.add(t)
            c.append(str(t))
            t = p[t]
        cycles.append("(" + "".join(c) + ")")
    return "".join(cycles) or "()"


def symmetric_group_algebra() -> HopfAlgebra:
    elems = list(permutations(range(3)))  # identity first
    index = {p: i for i, p in enumerate(elems)}

    def mul(i, j):  # (p q)(s) = p(q(s))
        p, q = elems[i], elems[j]
        return index[tuple(p[q[s]] for s in range(3))]

    def inv(i):
        p = elems[i]
        r = [0] * 3
        for s, t in enumerate(p):
            r[t] = s
        return index[tuple(r)]

    return _group_algebra("group:S3", [_cycle_label(p) for p in elems], mul, inv)


def _monomial_label(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("g" if a == 1 else f"g^{a}")
    if b:
        parts.append("x" if b == 1 else f"x^{b}")
    return "".join(parts) or "1"


def taft_algebra(n: int, field: FieldSpec | None = None, zeta: Scalar | None = None,
                 name: str | None = None) -> HopfAlgebra:
    """Taft algebra: g^n = 1, x^n = 0, xg = ζ gx, Δ(x) = x⊗1 + g⊗x.

    Basis ``g^a x^b`` at index ``a*n + b``.
    """
    if field is None:
        field = FieldSpec.cyclotomic(n)
    if zeta is None:
        zeta = root_of_unity(field)
    powers = [1]
    for _ in range(n * n):
        powers.append(powers[-1] * zeta)

    def idx(a, b):
        return (a % n) * n + b

    table = [[{} for _ in range(n * n)] for _ in range(n * n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d < n:
                        # x^b g^c = ζ^{bc} g^c x^b
                        table[idx(a, b)][idx(c, d)] = {idx(a + c, b + d): powers[(b * c) % n]}
    basis = [_monomial_label(a, b) for a in range(n) for b in range(n)]
    plain = Algebra(f"taft:{n}", field, basis, {0: 1}, table=table)

    g = idx(1, 0)
    x = idx(0, 1)
    g_inv = idx(n - 1, 0)
    delta_g = {(g, g): 1}
    delta_x = {(x, 0): 1, (g, x): 1}
    one_one = {(0, 0): 1}

    def power2(base, k):
        out = one_one
        for _ in range(k):
            out = _tensor_mul2(plain, plain, out, base)
        return out

    comult = []
    antipode = []
    s_g = {g_inv: 1}
    s_x = plain.mul({g_inv: -1}, {x: 1})
    for a in range(n):
        for b in range(n):
            comult.append(_tensor_mul2(plain, plain, power2(delta_g, a), power2(delta_x, b)))
            v = {0: 1}
            for _ in range(b):
                v = plain.mul(v, s_x)
            for _ in range(a):
                v = plain.mul(v, s_g)
            antipode.append(v)
    counit = [1 if b == 0 else 0 for a in range(n) for b in range(n)]
    return HopfAlgebra(name or f"taft:{n}", field, basis, {0: 1}, comult, counit, antipode, table=table)


def sweedler_algebra() -> HopfAlgebra:
    """The 4-dimensional Sweedler algebra over Q (the Taft algebra at ζ = -1)."""
    return taft_algebra(2, RATIONAL, -1, name="sweedler")


def trivial_algebra() -> HopfAlgebra:
    return HopfAlgebra("trivial", RATIONAL, ["1"], {0: 1}, [{(0, 0): 1}], [1], [{0: 1}],
                       table=[[{0: 1}]])


def _normalize(name: str) -> str:
    return name.strip().replace("ℤ", "Z").replace("catalog:", "")


def catalog_build(name: str, field: FieldSpec | None = None, verify: bool = True) -> HopfAlgebra:
    """Build a catalog algebra by name; verified unless ``verify=False``."""
    key = _normalize(name)
    if key == "trivial":
        A = trivial_algebra()
    elif key == "sweedler":
        A = sweedler_algebra()
    elif key.startswith("group:") or key.startswith("dual_group:"):
        kind, _, grp = key.partition(":")
        if grp == "S3":
            A = symmetric_group_algebra()
        elif grp.startswith("Z/") and grp[2:].isdigit() and 1 <= int(grp[2:]) <= 4:
            A = cyclic_group_algebra(int(grp[2:]))
        else:
            raise UnknownName(f"unknown group {grp!r} (use Z/1..Z/4 or S3)")
        if kind == "dual_group":
            A, _ = dual(A, name=f"dual_group:{grp}", labels=[f"δ_{b}" for b in A.basis])
    elif key.startswith("taft:"):
        arg = key[5:]
        if not arg.isdigit() or int(arg) < 2:
            raise UnknownName(f"taft needs an integer order >= 2, got {arg!r}")
        n = int(arg)
        if field is not None and field != FieldSpec.cyclotomic(n):
            raise BadField(f"taft:{n} lives over Q(zeta_{n}), not {field}")
        A = taft_algebra(n)
    else:
        raise UnknownName(f"unknown catalog algebra {name!r}; known: {', '.join(CATALOG_NAMES)}")
    if field is not None and field != A.field:
        raise BadField(f"{A.name} is defined over {A.field}, not {field}")
    if verify:
        rep = verify_hopf(A)
        if not rep.passed:
            raise AxiomFailure(f"catalog algebra {A.name} failed verification", rep)
    return A
