"""Deterministic JSON encodings.

* rationals: strings ``"p/q"`` (``"3"`` for integers); ints are accepted on input;
* a root set: ``{"basis": ["e1", …], "gram": [[…]], "roots": [[…], …]}`` with
  coordinate vectors over ``basis`` in canonical order;
* a radical group: ``{"free_rank": 1, "torsion": [2]}``; its elements are flat
  integer lists (free coordinates, then torsion residues); ``{"free": […],
  "torsion": […]}`` is accepted on input;
* a radical subset: ``{"finite": [[…], …]}`` or
  ``{"cosets": {"subgroup": [[…], …], "reps": [[…], …]}}``;
* an extended affine datum: ``{"quotient": <root set>, "radical": <group>,
  "layers": [{"root": […], "subset": <subset>}, …]}``;
* a structure datum: ``{"label": "B(1,1)", "F": <subset>, "S": …, "rho": […]}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .catalog import Model, TypeLabel
from .extaffine import EarsDatum, StructureDatum
from .form import GramForm, format_rational, parse_rational
from .lattice import BasisSymbol, CosetUnion, FiniteSet, LatticeElement, RadicalGroup, RadicalSubset
from .rootsys import RootSet

__all__ = [
    "DataError",
    "dumps",
    "vector_to_json",
    "element_from_vector",
    "rootset_to_json",
    "rootset_from_json",
    "model_to_json",
    "group_to_json",
    "group_from_json",
    "radical_element_from_json",
    "subset_to_json",
    "subset_from_json",
    "ears_to_json",
    "ears_from_json",
    "structure_to_json",
    "structure_from_json",
]


class DataError(ValueError):
    """Malformed JSON input."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _rat(x: Fraction) -> str:
    return format_rational(x)


def _parse_rat(x: Any) -> Fraction:
    try:
        return parse_rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise DataError(f"not a rational: {x!r}") from e


def vector_to_json(x: LatticeElement, basis: Sequence[BasisSymbol]) -> List[str]:
    return [_rat(c) for c in x.vector(basis)]


def element_from_vector(vec: Any, basis: Sequence[BasisSymbol]) -> LatticeElement:
    if not isinstance(vec, list) or len(vec) != len(basis):
        raise DataError(f"expected a coordinate vector of length {len(basis)}, got {vec!r}")
    return LatticeElement.from_vector(basis, [_parse_rat(c) for c in vec])


def _basis_from_json(data: Any) -> tuple:
    if not isinstance(data, list):
        raise DataError("basis must be a list of symbols")
    try:
        return tuple(BasisSymbol.parse(str(s)) for s in data)
    except ValueError as e:
        raise DataError(str(e)) from e


def rootset_to_json(R: RootSet) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "basis": [str(s) for s in R.basis],
        "gram": [[_rat(x) for x in row] for row in R.form.gram],
        "roots": [vector_to_json(r, R.basis) for r in R.roots],
    }
    if R.name:
        out["name"] = R.name
    return out


def rootset_from_json(data: Any) -> RootSet:
    if not isinstance(data, dict) or not {"basis", "gram", "roots"} <= data.keys():
        raise DataError('a root set needs "basis", "gram" and "roots"')
    basis = _basis_from_json(data["basis"])
    gram = data["gram"]
    if not isinstance(gram, list) or any(not isinstance(r, list) for r in gram):
        raise DataError("gram must be a matrix")
    try:
        form = GramForm(basis, tuple(tuple(_parse_rat(x) for x in row) for row in gram))
    except ValueError as e:
        raise DataError(str(e)) from e
    if not isinstance(data["roots"], list):
        raise DataError("roots must be a list of vectors")
    roots = [element_from_vector(v, basis) for v in data["roots"]]
    return RootSet(form, roots, name=data.get("name"))


def model_to_json(m: Model) -> Dict[str, Any]:
    R = m.rootset
    out = {"label": str(m.label)}
    out.update(rootset_to_json(R))
    out["base"] = [vector_to_json(b, R.basis) for b in m.base.elements]
    out["base_kind"] = m.base.kind
    out["components"] = [c.name for c in m.components]
    if m.distinguished is not None:
        out["distinguished"] = vector_to_json(m.distinguished, R.basis)
    return out


def group_to_json(g: RadicalGroup) -> Dict[str, Any]:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def group_from_json(data: Any) -> RadicalGroup:
    if not isinstance(data, dict):
        raise DataError('a radical group is {"free_rank": n, "torsion": [...]}')
    try:
        return RadicalGroup(int(data.get("free_rank", 0)), tuple(int(m) for m in data.get("torsion", [])))
    except (TypeError, ValueError) as e:
        raise DataError(str(e)) from e


def _int_vec(v: Any, n: int) -> List[int]:
    if isinstance(v, dict) and set(v) <= {"free", "torsion"}:  # split form {"free": [...], "torsion": [...]}
        parts = [v.get("free", []), v.get("torsion", [])]
        if not all(isinstance(p, list) for p in parts):
            raise DataError(f"expected integer lists under free/torsion, got {v!r}")
        v = parts[0] + parts[1]
    if not isinstance(v, list) or len(v) != n or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise DataError(f"expected an integer vector of length {n}, got {v!r}")
    return v


def radical_element_from_json(v: Any, g: RadicalGroup) -> List[int]:
    """An element of ``g`` as a flat list or as ``{"free": […], "torsion": […]}``."""
    return _int_vec(v, g.dim)


def subset_to_json(s: RadicalSubset) -> Dict[str, Any]:
    if isinstance(s, FiniteSet):
        return {"finite": [list(e) for e in s.elements()]}
    assert isinstance(s, CosetUnion)
    return {"cosets": {"subgroup": [list(e) for e in s.subgroup_generators()], "reps": [list(r) for r in s.reps]}}


def subset_from_json(data: Any, g: RadicalGroup) -> RadicalSubset:
    if isinstance(data, dict) and "finite" in data:
        return RadicalSubset.finite(g, [_int_vec(v, g.dim) for v in data["finite"]])
    if isinstance(data, dict) and "cosets" in data:
        c = data["cosets"]
        if not isinstance(c, dict):
            raise DataError('"cosets" must hold "subgroup" and "reps"')
        gens = [_int_vec(v, g.dim) for v in c.get("subgroup", [])]
        reps = [_int_vec(v, g.dim) for v in c.get("reps", [])]
        try:
            return RadicalSubset.cosets(g, gens, reps)
        except ValueError as e:
            raise DataError(str(e)) from e
    if data == "whole":
        return RadicalSubset.whole(g)
    raise DataError(f'a subset is {{"finite": ...}}, {{"cosets": ...}} or "whole", got {data!r}')


def ears_to_json(E: EarsDatum) -> Dict[str, Any]:
    Q = E.quotient
    out = {
        "quotient": rootset_to_json(Q),
        "radical": group_to_json(E.radical),
        "layers": [{"root": vector_to_json(r, Q.basis), "subset": subset_to_json(E.layers[r])} for r in Q.roots],
    }
    if E.base is not None:
        out["base"] = [vector_to_json(b, Q.basis) for b in E.base]
    return out


def ears_from_json(data: Any) -> EarsDatum:
    if not isinstance(data, dict) or not {"quotient", "radical", "layers"} <= data.keys():
        raise DataError('an extended affine datum needs "quotient", "radical" and "layers"')
    Q = rootset_from_json(data["quotient"])
    g = group_from_json(data["radical"])
    layers = {}
    for entry in data["layers"]:
        if not isinstance(entry, dict) or not {"root", "subset"} <= entry.keys():
            raise DataError('each layer is {"root": [...], "subset": {...}}')
        layers[element_from_vector(entry["root"], Q.basis)] = subset_from_json(entry["subset"], g)
    base = data.get("base")
    try:
        return EarsDatum(Q, g, layers, base=[element_from_vector(b, Q.basis) for b in base] if base else None)
    except ValueError as e:
        raise DataError(str(e)) from e


_FIELDS = ("F", "S", "L1", "L2", "E1", "E2")


def structure_to_json(d: StructureDatum) -> Dict[str, Any]:
    out: Dict[str, Any] = {"label": str(d.label), "part": d.part}
    for name, s in d.subsets().items():
        out[name] = subset_to_json(s)
    out["rho"] = [None if r is None else _rat(r) for r in d.rho]
    return out


def structure_from_json(data: Any, g: RadicalGroup, label: Optional[TypeLabel] = None) -> StructureDatum:
    """Read a structure datum; ``"L"`` is accepted for ``"L2"`` (part (iii))."""
    if not isinstance(data, dict):
        raise DataError("a structure datum is a JSON object")
    if label is None:
        if "label" not in data:
            raise DataError('a structure datum needs a "label"')
        try:
            label = TypeLabel.parse(str(data["label"]))
        except ValueError as e:
            raise DataError(str(e)) from e
    data = dict(data)
    if "L" in data:
        data.setdefault("L2", data.pop("L"))
    if "F" not in data:
        raise DataError('a structure datum needs "F"')
    kw = {name: subset_from_json(data[name], g) for name in _FIELDS if name in data}
    rho = tuple(None if r is None else _parse_rat(r) for r in data.get("rho", []))
    return StructureDatum(label, rho=rho, **kw)
