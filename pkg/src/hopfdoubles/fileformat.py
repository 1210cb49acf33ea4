"""JSON algebra files.

Scalars are strings (``"p/q"`` or ``"[c0,c1,...]"``), sparse entries are
sorted, and the writer is deterministic, so emit → load → emit reproduces
the same bytes.  ``mult`` entries ``[i, j, k, c]`` mean ``e_i e_j`` has
coefficient c on ``e_k``; ``comult`` entries ``[i, j, k, c]`` mean ``Δ(e_i)``
has coefficient c on ``e_j ⊗ e_k``; ``antipode`` entries ``[i, j, c]`` mean
``S(e_i)`` has coefficient c on ``e_j``.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .algebra import Algebra
from .errors import ParseError, ShapeMismatch
from .hopf import HopfAlgebra
from .reports import algebra_schema
from .scalars import FieldSpec

FORMAT_TAG = "hopfdoubles-algebra/1"


def to_document(alg: Algebra) -> dict:
    F = alg.field
    n = alg.dim
    doc = {
        "format": FORMAT_TAG,
        "name": alg.name,
        "field": F.to_json(),
        "dim": n,
        "basis": list(alg.basis),
        "is_hopf": isinstance(alg, HopfAlgebra),
        "unit": [F.format(alg.unit.get(i, 0)) for i in range(n)],
    }
    mult = []
    for i in range(n):
        for j in range(n):
            for k, c in sorted(alg.basis_product(i, j)):
                if c:
                    mult.append([i, j, k, F.format(c)])
    doc["mult"] = mult
    if isinstance(alg, HopfAlgebra):
        doc["counit"] = [F.format(c) for c in alg.counit]
        doc["comult"] = [[i, j, k, F.format(c)]
                         for i in range(n) for (j, k), c in sorted(alg.comult[i].items()) if c]
        doc["antipode"] = [[i, j, F.format(c)]
                           for i in range(n) for j, c in sorted(alg.antipode.columns[i].items()) if c]
    return doc


def dumps(alg: Algebra) -> str:
    """Deterministic text: one key per line, one sparse entry per line."""
    doc = to_document(alg)
    lines = ["{"]
    keys = list(doc)
    for pos, key in enumerate(keys):
        value = doc[key]
        tail = "," if pos < len(keys) - 1 else ""
        head = f"  {json.dumps(key)}: "
        if key in ("mult", "comult", "antipode") and value:
            lines.append(head + "[")
            for e_pos, entry in enumerate(value):
                sep = "," if e_pos < len(value) - 1 else ""
                lines.append("    " + json.dumps(entry, ensure_ascii=False) + sep)
            lines.append("  ]" + tail)
        else:
            lines.append(head + json.dumps(value, ensure_ascii=False) + tail)
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit(alg: Algebra, path: str | Path) -> None:
    Path(path).write_text(dumps(alg), encoding="utf-8")


def from_document(doc) -> Algebra:
    """Build an algebra from a parsed document; no axiom checks here."""
    try:
        jsonschema.validate(doc, algebra_schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ParseError(f"algebra file does not match the schema at {where}: {exc.message}") from exc
    F = FieldSpec.from_json(doc["field"])
    n = doc["dim"]
    basis = doc["basis"]
    if len(basis) != n:
        raise ShapeMismatch(f"basis has {len(basis)} labels, dim is {n}")

    def vector(name: str) -> list:
        vals = doc[name]
        if len(vals) != n:
            raise ShapeMismatch(f"{name} has length {len(vals)}, dim is {n}")
        return [F.parse(v) for v in vals]

    def idx(*ks):
        for k in ks:
            if not 0 <= k < n:
                raise ShapeMismatch(f"index {k} out of range for dimension {n}")

    unit = {i: c for i, c in enumerate(vector("unit")) if c}
    table = [[{} for _ in range(n)] for _ in range(n)]
    for i, j, k, c in doc["mult"]:
        idx(i, j, k)
        val = F.parse(c)
        if val:
            table[i][j][k] = table[i][j].get(k, 0) + val
    if not doc["is_hopf"]:
        return Algebra(doc["name"], F, basis, unit, table=table)
    counit = vector("counit")
    comult = [{} for _ in range(n)]
    for i, j, k, c in doc["comult"]:
        idx(i, j, k)
        val = F.parse(c)
        if val:
            comult[i][(j, k)] = comult[i].get((j, k), 0) + val
    antipode = [{} for _ in range(n)]
    for i, j, c in doc["antipode"]:
        idx(i, j)
        val = F.parse(c)
        if val:
            antipode[i][j] = antipode[i].get(j, 0) + val
    return HopfAlgebra(doc["name"], F, basis, unit, comult, counit, antipode, table=table)


def loads(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return from_document(doc)


def load(path: str | Path) -> Algebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)
