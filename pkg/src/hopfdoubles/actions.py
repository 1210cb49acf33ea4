"""Module-algebra actions and smash products."""

from __future__ import annotations

import random
from typing import Sequence

from .algebra import Algebra
from .errors import ActionInvalid, AxiomFailure
from .hopf import HopfAlgebra, _diff, check_associative, check_unital, witness
from .linalg import Vec, add_scaled
from .reports import Report
from .scalars import canon

ANCHOR_MODULE_ALGEBRA = "module algebra: a·1 = ε(a)1, a·(mn) = (a_1·m)(a_2·n)"
ANCHOR_SMASH = "smash product (m#x)(n#y) = m(x_1·n)#x_2y"


class ModuleAlgebraAction:
    """An action of a Hopf algebra ``actor`` on an algebra ``carrier``.

    ``table[h][m]`` is the sparse vector ``e_h · e_m``.
    """

    def __init__(self, name: str, actor: HopfAlgebra, carrier: Algebra, table: Sequence[Sequence[Vec]]):
        self.name = name
        self.actor = actor
        self.carrier = carrier
        self.table = [[{k: canon(c) for k, c in v.items() if c} for v in row] for row in table]

    def act(self, h: Vec, m: Vec) -> Vec:
        out: Vec = {}
        for i, c in h.items():
            row = self.table[i]
            for j, d in m.items():
                add_scaled(out, row[j], c * d)
        return out

    def restrict(self, inclusion: Sequence[Vec], actor: HopfAlgebra, name: str | None = None) -> "ModuleAlgebraAction":
        """Pull back along ``inclusion[i]`` = image of the i-th basis vector of ``actor``."""
        M = self.carrier.dim
        table = [[self.act(inc, {m: 1}) for m in range(M)] for inc in inclusion]
        return ModuleAlgebraAction(name or f"{self.name}|{actor.name}", actor, self.carrier, table)

    def __eq__(self, other):
        if not isinstance(other, ModuleAlgebraAction):
            return NotImplemented
        return self.table == other.table

    def __repr__(self):
        return f"<ModuleAlgebraAction {self.name}: {self.actor.name} on {self.carrier.name}>"


def verify_module_algebra(action: ModuleAlgebraAction) -> Report:
    H, M = action.actor, action.carrier
    F = M.field
    rep = Report("module-algebra", action.name)

    w = None
    for h in range(H.dim):
        lhs = action.act({h: 1}, M.unit)
        rhs = {k: canon(H.counit[h] * c) for k, c in M.unit.items() if H.counit[h]}
        if lhs != rhs:
            w = witness(F, (h,), lhs, rhs)
            break
    rep.add("unit_law", ANCHOR_MODULE_ALGEBRA, w)

    w = None
    for h in range(H.dim):
        for m in range(M.dim):
            hm = [action.table[p][m] for p in range(H.dim)]
            for n in range(M.dim):
                lhs = action.act({h: 1}, dict(M.basis_product(m, n)))
                rhs: Vec = {}
                for (p, q), c in H.comult[h].items():
                    if hm[p]:
                        add_scaled(rhs, M.mul(hm[p], action.table[q][n]), c)
                if _diff(lhs, rhs):
                    w = witness(F, (h, m, n), lhs, rhs)
                    break
            if w:
                break
        if w:
            break
    rep.add("leibniz_law", ANCHOR_MODULE_ALGEBRA, w)

    w = None
    for h in range(H.dim):
        for k in range(H.dim):
            hk = dict(H.basis_product(h, k))
            for m in range(M.dim):
                lhs = action.act(hk, {m: 1})
                rhs = action.act({h: 1}, action.table[k][m])
                if _diff(lhs, rhs):
                    w = witness(F, (h, k, m), lhs, rhs)
                    break
            if w:
                break
        if w:
            break
    rep.add("module_law", "module law (hk)·m = h·(k·m)", w)
    return rep


# ----------------------------------------------------------------------
# Named actions
# ----------------------------------------------------------------------

def adjoint_action(A: HopfAlgebra) -> ModuleAlgebraAction:
    """``a ▷ b = a_1 b S(a_2)``."""
    n = A.dim
    S_images = [A.S({k: 1}) for k in range(n)]
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            v: Vec = {}
            for (p, q), c in A.comult[a].items():
                add_scaled(v, A.mul(dict(A.basis_product(p, b)), S_images[q]), c)
            row.append(v)
        table.append(row)
    return ModuleAlgebraAction(f"ad({A.name})", A, A, table)


def left_coregular(actor: HopfAlgebra, carrier: HopfAlgebra) -> ModuleAlgebraAction:
    """``a ⇀ x = ⟨a, x_2⟩ x_1`` for the canonical pairing of ``actor`` and ``carrier``."""
    n = carrier.dim
    table = [[{} for _ in range(n)] for _ in range(actor.dim)]
    for x in range(n):
        for (p, q), c in carrier.comult[x].items():
            table[q][x][p] = table[q][x].get(p, 0) + c
    return ModuleAlgebraAction(f"coreg_L({actor.name} on {carrier.name})", actor, carrier, table)


def right_coregular(actor: HopfAlgebra, carrier: HopfAlgebra) -> ModuleAlgebraAction:
    """``x ↼ a = ⟨a, x_1⟩ x_2``; a left action of ``actor`` (which should be an op-twist)."""
    n = carrier.dim
    table = [[{} for _ in range(n)] for _ in range(actor.dim)]
    for x in range(n):
        for (p, q), c in carrier.comult[x].items():
            table[p][x][q] = table[p][x].get(q, 0) + c
    return ModuleAlgebraAction(f"coreg_R({actor.name} on {carrier.name})", actor, carrier, table)


def coregular_actions(A: HopfAlgebra, A_dual: HopfAlgebra | None = None):
    """Left coregular action of A on A*, right coregular action of A^op on A*."""
    from .hopf import dual, twist

    if A_dual is None:
        A_dual, _ = dual(A)
    return left_coregular(A, A_dual), right_coregular(twist(A, "op"), A_dual)


def double_action_on_A(D: HopfAlgebra, A: HopfAlgebra) -> ModuleAlgebraAction:
    """The action of D(A) on A: ``(1⊗a)·b = a_1 b S a_2``, ``(x⊗1)·b = b ↼ S⁻¹x``.

    Extended to the basis by ``(x⊗a)·b = (x⊗1)·((1⊗a)·b)``.
    """
    n = A.dim
    if D.dim != n * n:
        raise ValueError("D is not a double of A")
    ad = adjoint_action(A)
    # S_{A*}^{-1}(f^i) = sum_k S_A^{-1}(e_k)[i] f^k
    Sinv = A.antipode_inverse
    s_dual_inv = [{k: Sinv.columns[k][i] for k in range(n) if Sinv.columns[k].get(i)} for i in range(n)]
    # b ↼ f^k = sum Δ_b^{(k, q)} e_q
    harpoon = [[{} for _ in range(n)] for _ in range(n)]
    for b in range(n):
        for (p, q), c in A.comult[b].items():
            harpoon[p][b][q] = harpoon[p][b].get(q, 0) + c
    x_part = []
    for i in range(n):
        rows = []
        for b in range(n):
            v: Vec = {}
            for k, c in s_dual_inv[i].items():
                add_scaled(v, harpoon[k][b], c)
            rows.append(v)
        x_part.append(rows)
    table = []
    for i in range(n):
        for j in range(n):
            row = []
            for b in range(n):
                v: Vec = {}
                for b2, c in ad.table[j][b].items():
                    add_scaled(v, x_part[i][b2], c)
                row.append(v)
            table.append(row)
    return ModuleAlgebraAction(f"D({A.name}) on {A.name}", D, A, table)


# ----------------------------------------------------------------------
# Smash products
# ----------------------------------------------------------------------

class SmashAlgebra(Algebra):
    """``M # H`` on ``M ⊗ H``, basis ``m_i # h_j`` at index ``i*dim(H) + j``."""

    def __init__(self, action: ModuleAlgebraAction, name: str | None = None):
        M, H = action.carrier, action.actor
        self.action = action
        self.carrier = M
        self.actor = H
        dH = H.dim
        basis = [f"{m}#{h}" for m in M.basis for h in H.basis]
        unit = {i * dH + j: canon(c * d) for i, c in M.unit.items() for j, d in H.unit.items()}

        def product(a: int, b: int) -> Vec:
            m, x = divmod(a, dH)
            n, y = divmod(b, dH)
            out: Vec = {}
            for (p, q), c in H.comult[x].items():
                moved = action.table[p][n]
                if not moved:
                    continue
                left = M.mul({m: 1}, moved)
                if not left:
                    continue
                right = H.basis_product(q, y)
                for k, d in left.items():
                    for l, e in right:
                        key = k * dH + l
                        w = out.get(key, 0) + c * d * e
                        if w:
                            out[key] = w
                        else:
                            out.pop(key, None)
            return out

        super().__init__(name or f"{M.name}#{H.name}", M.field, basis, unit, product=product)

    def embed_carrier(self, v: Vec) -> Vec:
        dH = self.actor.dim
        return {m * dH + j: canon(c * d) for m, c in v.items() for j, d in self.actor.unit.items()}

    def embed_actor(self, v: Vec) -> Vec:
        dH = self.actor.dim
        return {i * dH + h: canon(c * d) for i, c in self.carrier.unit.items() for h, d in v.items()}

    def pair(self, m: Vec, h: Vec) -> Vec:
        """The vector ``m # h``."""
        dH = self.actor.dim
        return {i * dH + j: canon(c * d) for i, c in m.items() for j, d in h.items()}


def smash_product(M: Algebra, H: HopfAlgebra, action: ModuleAlgebraAction,
                  check: str = "auto", name: str | None = None, verify_action: bool = True) -> SmashAlgebra:
    """Build ``M # H``; rejects invalid actions.

    ``check`` is ``'full'`` (all basis triples), ``'sample'`` (a fixed pseudo
    random sample of triples) or ``'auto'`` (full up to dimension 64).
    """
    if action.carrier is not M or action.actor is not H:
        raise ActionInvalid("action does not match the given algebras")
    if verify_action:
        rep = verify_module_algebra(action)
        if not rep.passed:
            raise ActionInvalid(f"{action.name} is not a module-algebra action", rep)
    S = SmashAlgebra(action, name)
    n = S.dim
    if check == "auto":
        check = "full" if n <= 64 else "sample"
    if check != "none":
        triples = None
        if check == "sample":
            rng = random.Random(0)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(500)]
        w = check_unital(S) or check_associative(S, triples)
        if w is not None:
            raise AxiomFailure(f"smash product {S.name} is not associative and unital", w)
    return S
