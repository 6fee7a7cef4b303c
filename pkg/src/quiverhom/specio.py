"""JSON algebra/module spec files and built-in fixtures.

Algebra file::

    {"field": {"kind": "rational"} | {"kind": "prime", "p": 2},
     "quiver": {"vertices": ["1", "2"],
                "arrows": [{"name": "a", "from": "1", "to": "2"}]},
     "relations": {"radical_power": 2, "monomials": [["a", "b"]]}}

Module file::

    {"side": "right" | "left",
     "construct": {"kind": "simple", "vertex": v}
                | {"kind": "projective", "vertex": v}
                | {"kind": "cyclic_quotient", "vertex": v, "kill": [["a"], ...]}
                | {"kind": "explicit", "dims": {v: n, ...},
                   "action": {arrow: [[...], ...], ...}}}

For explicit left modules, arrow ``a: i -> j`` of the algebra acts from the
space at ``j`` to the space at ``i``.  Matrix entries are integers or
``"num/den"`` strings.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources
from pathlib import Path as FsPath
from typing import Optional

from .algebra import BoundQuiverAlgebra, NonAdmissibleError, Quiver, QuiverError, RelationSet, build_algebra
from .exactla import FieldSpec
from .modrep import Module, ModuleError, Side, cyclic_quotient, from_matrices, projective, simple


class SpecError(ValueError):
    """Unreadable or invalid spec file."""


BUILTIN_ALGEBRAS = ("paper", "dualnumbers", "point")


def _fixture_bytes(*parts: str) -> bytes:
    return resources.files("quiverhom").joinpath("fixtures", *parts).read_bytes()


def builtin_module_names() -> list[str]:
    d = resources.files("quiverhom").joinpath("fixtures", "modules")
    return sorted(p.name[:-5] for p in d.iterdir() if p.name.endswith(".json"))


def parse_field(obj) -> FieldSpec:
    if obj is None:
        return FieldSpec()
    if isinstance(obj, str):
        return field_from_flag(obj)
    try:
        return FieldSpec(obj.get("kind", "rational"), obj.get("p"))
    except (AttributeError, ValueError) as e:
        raise SpecError(f"bad field: {e}") from None


def field_from_flag(s: str) -> FieldSpec:
    """``rational`` or ``prime<p>`` (e.g. ``prime2``)."""
    if s == "rational":
        return FieldSpec()
    if s.startswith("prime") and s[5:].isdigit():
        try:
            return FieldSpec("prime", int(s[5:]))
        except ValueError as e:
            raise SpecError(str(e)) from None
    raise SpecError(f"bad field {s!r}; expected 'rational' or 'prime<p>'")


def algebra_from_dict(obj: dict, field: Optional[FieldSpec] = None) -> BoundQuiverAlgebra:
    try:
        q = obj["quiver"]
        quiver = Quiver(
            tuple(str(v) for v in q["vertices"]),
            tuple((str(a["name"]), str(a["from"]), str(a["to"])) for a in q.get("arrows", [])),
        )
        rel = obj.get("relations") or {}
        unknown = set(rel) - {"radical_power", "monomials"}
        if unknown:
            raise SpecError(f"unknown relation keys {sorted(unknown)}")
        relations = RelationSet(rel.get("radical_power"), tuple(tuple(m) for m in rel.get("monomials", [])))
        if field is None:
            field = parse_field(obj.get("field"))
        return build_algebra(field, quiver, relations)
    except (KeyError, TypeError) as e:
        raise SpecError(f"malformed algebra spec: {e!r}") from None


def module_from_dict(A: BoundQuiverAlgebra, obj: dict) -> Module:
    try:
        side = Side(obj.get("side", "right"))
        c = obj["construct"]
        kind = c["kind"]
        if kind == "simple":
            return simple(A, c["vertex"], side)
        if kind == "projective":
            return projective(A, c["vertex"], side)
        if kind == "cyclic_quotient":
            return cyclic_quotient(A, c["vertex"], side, [tuple(k) for k in c.get("kill", [])])
        if kind == "explicit":
            dims_map = {str(k): int(v) for k, v in c["dims"].items()}
            unknown = set(dims_map) - set(A.vertices)
            if unknown:
                raise SpecError(f"unknown vertices {sorted(unknown)}")
            dims = [dims_map.get(v, 0) for v in A.vertices]
            return from_matrices(A, side, dims, dict(c.get("action", {})))
        raise SpecError(f"unknown construct kind {kind!r}")
    except (KeyError, TypeError) as e:
        raise SpecError(f"malformed module spec: {e!r}") from None


def load_source(arg: str, kind: str) -> tuple[dict, bytes]:
    """Read a spec from a file path, or from a built-in fixture name."""
    p = FsPath(arg)
    if p.is_file():
        raw = p.read_bytes()
    elif kind == "algebra" and arg in BUILTIN_ALGEBRAS:
        raw = _fixture_bytes(f"{arg}.json")
    elif kind == "module" and arg in builtin_module_names():
        raw = _fixture_bytes("modules", f"{arg}.json")
    else:
        raise SpecError(f"no such {kind} file or built-in fixture: {arg!r}")
    try:
        return json.loads(raw.decode("utf-8")), raw
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise SpecError(f"{arg}: invalid JSON ({e})") from None


def digest(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


def load_algebra(arg: str, field: Optional[FieldSpec] = None) -> tuple[BoundQuiverAlgebra, bytes]:
    obj, raw = load_source(arg, "algebra")
    return algebra_from_dict(obj, field), raw


def load_module(A: BoundQuiverAlgebra, arg: str) -> tuple[Module, bytes]:
    obj, raw = load_source(arg, "module")
    return module_from_dict(A, obj), raw


INPUT_ERRORS = (SpecError, QuiverError, NonAdmissibleError, ModuleError, ZeroDivisionError)
