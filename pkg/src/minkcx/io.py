"""JSON documents for complexes and families.

Coordinates are written as integers when integral and as ``"p/q"`` strings
otherwise, so no binary float ever enters a document.

ComplexDoc::

    {"n": 3, "facets": [[1, 2], [2, 3]]}
    {"n": 3, "facets": [], "void": true}

FamilyDoc (a polytope is one hull, or a Minkowski sum of hulls)::

    {"dim": 2, "polytopes": [{"vertices": [[0, 0], [1, 0]]},
                             {"summands": [[[0, 0], [1, 0]], [[0, 0], [0, "1/2"]]]}],
     "mu": [1, 1]}

DiscreteFamilyDoc::

    {"dim": 1, "sets": [[[0], [1]], [[0], ["1/2"]]], "mu": ["3/2"]}
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .complex import SimplicialComplex, from_facets, void_complex
from .errors import MinkcxError, ParseError
from .polytope import LatticePolytope, PolytopeFamily, make_polytope, make_sum
from .realize import DiscreteFamily


def format_scalar(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v) -> list:
    return [format_scalar(a) for a in v]


def _scalar(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(f"{where}: expected an integer or a 'p/q' string, got {value!r}")


def _point(value: Any, dim: int, where: str) -> tuple:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a coordinate list")
    if len(value) != dim:
        raise ParseError(f"{where}: expected {dim} coordinates, got {len(value)}")
    return tuple(_scalar(c, f"{where}[{k}]") for k, c in enumerate(value))


def _field(obj: Any, key: str, kind, where: str = "$"):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    val = obj[key]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise ParseError(f"{where}.{key}: expected an integer")
    if kind is list and not isinstance(val, list):
        raise ParseError(f"{where}.{key}: expected a list")
    return val


# -- complexes


def complex_to_doc(cx: SimplicialComplex) -> dict:
    doc = {"n": cx.n, "facets": cx.facet_lists()}
    if cx.is_void:
        doc["void"] = True
    return doc


def complex_from_doc(obj: Any) -> SimplicialComplex:
    n = _field(obj, "n", int)
    if n < 0:
        raise ParseError("$.n: must be nonnegative")
    facets = _field(obj, "facets", list)
    is_void = obj.get("void", False)
    if not isinstance(is_void, bool):
        raise ParseError("$.void: expected a boolean")
    parsed = []
    for j, F in enumerate(facets):
        if not isinstance(F, list):
            raise ParseError(f"$.facets[{j}]: expected a list of vertices")
        for k, v in enumerate(F):
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError(f"$.facets[{j}][{k}]: expected an integer vertex")
            if not 1 <= v <= n:
                raise ParseError(f"$.facets[{j}][{k}]: vertex {v} out of range 1..{n}")
        parsed.append(F)
    if is_void:
        if parsed:
            raise ParseError("$.void: a void complex cannot list facets")
        return void_complex(n)
    return from_facets(n, parsed)


# -- polytope families


def polytope_to_doc(P: LatticePolytope) -> dict:
    if len(P.parts) == 1:
        return {"vertices": [format_vector(v) for v in P.parts[0]]}
    return {"summands": [[format_vector(v) for v in part] for part in P.parts]}


def family_to_doc(fam: PolytopeFamily) -> dict:
    return {
        "dim": fam.dim,
        "polytopes": [polytope_to_doc(P) for P in fam.members],
        "mu": format_vector(fam.basepoint),
    }


def _vertex_list(value, dim, where):
    if not isinstance(value, list) or not value:
        raise ParseError(f"{where}: expected a nonempty list of points")
    return [_point(p, dim, f"{where}[{k}]") for k, p in enumerate(value)]


def family_from_doc(obj: Any) -> PolytopeFamily:
    dim = _field(obj, "dim", int)
    if dim < 0:
        raise ParseError("$.dim: must be nonnegative")
    polys = _field(obj, "polytopes", list)
    members = []
    for i, entry in enumerate(polys):
        where = f"$.polytopes[{i}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: expected an object")
        if "vertices" in entry:
            members.append(make_polytope(dim, _vertex_list(entry["vertices"], dim, f"{where}.vertices")))
        elif "summands" in entry:
            parts = entry["summands"]
            if not isinstance(parts, list) or not parts:
                raise ParseError(f"{where}.summands: expected a nonempty list")
            members.append(
                make_sum(dim, [_vertex_list(p, dim, f"{where}.summands[{k}]") for k, p in enumerate(parts)])
            )
        else:
            raise ParseError(f"{where}: needs 'vertices' or 'summands'")
    mu = _point(_field(obj, "mu", list), dim, "$.mu")
    try:
        return PolytopeFamily(dim, members, mu)
    except MinkcxError as exc:
        raise ParseError(f"$: {exc}") from exc


# -- discrete families


def discrete_to_doc(dfam: DiscreteFamily) -> dict:
    return {
        "dim": dfam.dim,
        "sets": [[format_vector(p) for p in X] for X in dfam.sets],
        "mu": format_vector(dfam.basepoint),
    }


def discrete_from_doc(obj: Any) -> DiscreteFamily:
    dim = _field(obj, "dim", int)
    sets = _field(obj, "sets", list)
    parsed = [_vertex_list(X, dim, f"$.sets[{i}]") for i, X in enumerate(sets)]
    mu = _point(_field(obj, "mu", list), dim, "$.mu")
    try:
        return DiscreteFamily(dim, tuple(parsed), mu)
    except MinkcxError as exc:
        raise ParseError(f"$: {exc}") from exc


# -- text


_WIDTH = 88


def _render(obj: Any, indent: int) -> str:
    flat = json.dumps(obj)
    if not isinstance(obj, (dict, list)) or not obj or indent + len(flat) <= _WIDTH:
        return flat
    pad = " " * (indent + 2)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {_render(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + _render(v, indent + 2) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def dumps(doc: Any) -> str:
    """Deterministic JSON text: nested containers stay on one line when short."""
    return _render(doc, 0) + "\n"


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def read_doc(path) -> Any:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    return loads(text, str(path))
