"""JSON file formats for algebras, modules and reports (``"format": 1``).

Scalars are strings (``"3/7"`` over Q, ``"4"`` over F_p) so nothing ever passes
through a float.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import FDAlgebra, make_algebra, radical, trace_form, trace_form_regime, quotient_algebra
from .errors import InvalidAlgebra, InvalidModule, ZadkitError
from .exactlin import Field, Mat, nullspace
from .modules import FDModule, make_module

FORMAT = 1


class FormatError(ZadkitError):
    pass


def field_to_json(F: Field) -> dict:
    return {"name": "Q"} if F.kind == "Q" else {"name": "Fp", "p": F.p}


def field_from_json(obj) -> Field:
    if obj == "Q" or (isinstance(obj, dict) and obj.get("name") == "Q"):
        return Field.Q()
    if isinstance(obj, dict) and obj.get("name") == "Fp":
        try:
            return Field.Fp(int(obj["p"]))
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad prime field descriptor {obj!r}: {exc}") from None
    raise FormatError(f"unknown field descriptor {obj!r}")


def scalar(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


def vec_to_json(v) -> list:
    return [scalar(x) for x in v]


def vec_from_json(F: Field, v) -> tuple:
    try:
        return tuple(F(x if isinstance(x, str) else int(x)) for x in v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar in {v!r}: {exc}") from None


def mat_to_json(m: Mat) -> list:
    return [vec_to_json(r) for r in m.entries]


def mat_from_json(F: Field, rows, size: int) -> Mat:
    if len(rows) != size or any(len(r) != size for r in rows):
        raise FormatError(f"expected a {size}x{size} matrix")
    return Mat(F, size, size, tuple(vec_from_json(F, r) for r in rows))


# algebras -------------------------------------------------------------------------

def algebra_to_json(a: FDAlgebra, name: str | None = None, sparse: bool = True) -> dict:
    n = a.dim
    if sparse:
        sc = {"sparse": [[i, j, k, scalar(a.sc[i][j][k])]
                         for i in range(n) for j in range(n) for k in range(n) if a.sc[i][j][k] != 0]}
    else:
        sc = {"dense": [[vec_to_json(a.sc[i][j]) for j in range(n)] for i in range(n)]}
    out: dict[str, Any] = {"format": FORMAT, "kind": "algebra", "field": field_to_json(a.field),
                           "dim": n, "unit": vec_to_json(a.unit), "structure_constants": sc}
    if name:
        out["name"] = name
    if a.labels:
        out["labels"] = list(a.labels)
    if a.declared_radical is not None:
        out["radical"] = [vec_to_json(v) for v in a.declared_radical]
    return out


def algebra_from_json(obj: dict, check: bool = True) -> FDAlgebra:
    if not isinstance(obj, dict) or obj.get("kind", "algebra") != "algebra":
        raise FormatError("not an algebra document")
    if obj.get("format") != FORMAT:
        raise FormatError(f"unsupported format {obj.get('format')!r}")
    F = field_from_json(obj.get("field"))
    try:
        n = int(obj["dim"])
        unit = vec_from_json(F, obj["unit"])
        scobj = obj["structure_constants"]
    except KeyError as exc:
        raise FormatError(f"missing key {exc}") from None
    if len(unit) != n:
        raise FormatError("unit vector length differs from dim")
    sc = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    if "sparse" in scobj:
        for entry in scobj["sparse"]:
            i, j, k, val = entry
            if not all(0 <= t < n for t in (i, j, k)):
                raise FormatError(f"structure constant index out of range: {entry!r}")
            sc[i][j][k] = F.norm(sc[i][j][k] + vec_from_json(F, [val])[0])
    elif "dense" in scobj:
        dense = scobj["dense"]
        if len(dense) != n or any(len(r) != n for r in dense):
            raise FormatError("dense structure constants have the wrong shape")
        sc = [[list(vec_from_json(F, dense[i][j])) for j in range(n)] for i in range(n)]
        if any(len(c) != n for r in sc for c in r):
            raise FormatError("dense structure constants have the wrong shape")
    else:
        raise FormatError("structure_constants needs 'sparse' or 'dense'")
    rad = obj.get("radical")
    rad_vecs = None if rad is None else [vec_from_json(F, v) for v in rad]
    try:
        a = make_algebra(F, sc, unit, obj.get("labels"), rad_vecs, "declared", validate=check)
    except InvalidAlgebra as exc:
        raise FormatError(f"structure constants do not define a unital associative algebra: {exc}") from None
    if check and rad_vecs is not None and trace_form_regime(a):
        _verify_declared_radical(a)
    return a


def _verify_declared_radical(a: FDAlgebra) -> None:
    rad = radical(a)  # checks nilpotent ideal
    quo = a if rad.is_zero() else quotient_algebra(a, rad)[0]
    if not nullspace(trace_form(quo)).is_zero():
        raise FormatError("declared radical leaves a non-semisimple quotient")


# modules ----------------------------------------------------------------------------

def module_to_json(v: FDModule, algebra_ref: str | dict | None = None, name: str | None = None) -> dict:
    out: dict[str, Any] = {"format": FORMAT, "kind": "module",
                           "algebra": algebra_ref if algebra_ref is not None else algebra_to_json(v.algebra),
                           "dim": v.dim, "action": [mat_to_json(m) for m in v.action]}
    if name:
        out["name"] = name
    return out


def module_from_json(obj: dict, base: Path | None = None, algebra: FDAlgebra | None = None,
                     check: bool = True) -> FDModule:
    if not isinstance(obj, dict) or obj.get("kind") != "module":
        raise FormatError("not a module document")
    if obj.get("format") != FORMAT:
        raise FormatError(f"unsupported format {obj.get('format')!r}")
    if algebra is None:
        ref = obj.get("algebra")
        if isinstance(ref, str):
            path = Path(ref) if base is None else base / ref
            algebra = load_algebra(path)
        elif isinstance(ref, dict):
            algebra = algebra_from_json(ref)
        else:
            raise FormatError("module needs an algebra reference")
    m = int(obj.get("dim", -1))
    action = obj.get("action")
    if action is None or len(action) != algebra.dim:
        raise FormatError(f"expected {algebra.dim} action matrices")
    mats = [mat_from_json(algebra.field, rows, m) for rows in action]
    try:
        return make_module(algebra, mats, validate=check)
    except InvalidModule as exc:
        raise FormatError(f"action matrices do not define a module: {exc}") from None


# files --------------------------------------------------------------------------------

def read_json(path: Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path: Path, obj) -> None:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(dumps(obj))


def load_algebra(path: Path) -> FDAlgebra:
    return algebra_from_json(read_json(path))


def load_module(path: Path, algebra: FDAlgebra | None = None) -> FDModule:
    path = Path(path)
    return module_from_json(read_json(path), path.parent, algebra)


def load_any(path: Path, check: bool = True):
    obj = read_json(path)
    kind = obj.get("kind", "algebra") if isinstance(obj, dict) else None
    if kind == "algebra":
        return algebra_from_json(obj, check)
    if kind == "module":
        return module_from_json(obj, Path(path).parent, check=check)
    raise FormatError(f"{path}: not an algebra or module document")
