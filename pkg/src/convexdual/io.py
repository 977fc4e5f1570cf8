"""JSON documents for spaces, lattices, maps, metrics and measures.

Every document is an object with a ``kind`` tag.  Output is canonical:
keys sorted, families in mask order, names within a set in ground order,
rationals written ``"p/q"``.  Structural problems raise
:class:`MalformedInput`; mathematical ones raise the usual package errors
when the object is built.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import jsonschema

from .errors import ConvexDualError, GroundTooLarge
from .examples import FiniteMetric, MeasureSpace
from .lattice import FiniteLattice, PointedLattice
from .sets import GroundSet, PowerSet, SetFamily
from .spaces import PreconvexSpace, SpaceMap, TopConvexSpace
from .suplat import PartialSupLattice

KINDS = ("topconvex", "preconvex", "lattice", "pointed_lattice", "partial_sup", "map", "metric", "measure")


class MalformedInput(ConvexDualError):
    """Unreadable JSON, a schema violation, or an unresolved label."""


_names = {"type": "array", "items": {"type": "string"}}
_family = {"type": "array", "items": _names}
_rational = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}


def _schema(required: dict[str, Any]) -> dict:
    props = {"kind": {"type": "string"}, **required}
    return {"type": "object", "properties": props, "required": list(props), "additionalProperties": False}


SCHEMAS = {
    "topconvex": _schema({"ground": _names, "closed": _family, "convex": _family}),
    "preconvex": _schema({"ground": _names, "preconvex": _family}),
    "lattice": _schema({"elements": _names, "leq": {"type": "array", "items": {
        "type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}}}),
    "map": _schema({"dom": _names, "cod": _names, "map": {
        "type": "object", "additionalProperties": {"type": "string"}}}),
    "metric": _schema({"points": _names, "d": {"type": "array", "items": {"type": "array", "items": _rational}}}),
    "measure": _schema({"atoms": _names, "mass": {"type": "object", "additionalProperties": _rational}}),
}
SCHEMAS["pointed_lattice"] = _schema({**SCHEMAS["lattice"]["properties"], "chosen": _names})
SCHEMAS["partial_sup"] = _schema({**SCHEMAS["lattice"]["properties"], "j": _family})


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_rat(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise MalformedInput(f"bad rational {s!r}") from e


def _ground(names) -> GroundSet:
    try:
        return GroundSet(tuple(names))
    except ValueError as e:
        raise MalformedInput(str(e)) from e


def _mask(g: GroundSet, names) -> int:
    try:
        return g.mask(names)
    except KeyError as e:
        raise MalformedInput(f"unknown label {e.args[0]!r}") from e


def _family(g: GroundSet, sets) -> SetFamily:
    return SetFamily(g, tuple(_mask(g, s) for s in sets))


def _lattice(doc) -> FiniteLattice:
    elements = doc["elements"]
    idx = {e: i for i, e in enumerate(elements)}
    if len(idx) != len(elements):
        raise MalformedInput("duplicate element labels")
    leq = [[False] * len(elements) for _ in elements]
    for a, b in doc["leq"]:
        if a not in idx or b not in idx:
            raise MalformedInput(f"unknown element in pair {[a, b]}")
        leq[idx[a]][idx[b]] = True
    return FiniteLattice(elements, leq)


def from_dict(doc: dict):
    if not isinstance(doc, dict) or doc.get("kind") not in KINDS:
        raise MalformedInput(f"document kind must be one of {', '.join(KINDS)}")
    kind = doc["kind"]
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as e:
        raise MalformedInput(f"{kind}: {e.message}") from e
    if kind == "topconvex":
        g = _ground(doc["ground"])
        return TopConvexSpace(g, _family(g, doc["closed"]), _family(g, doc["convex"]))
    if kind == "preconvex":
        g = _ground(doc["ground"])
        return PreconvexSpace(g, _family(g, doc["preconvex"]))
    if kind == "lattice":
        return _lattice(doc)
    if kind == "pointed_lattice":
        lat = _lattice(doc)
        return PointedLattice(lat, _mask(lat.ground, doc["chosen"]))
    if kind == "partial_sup":
        lat = _lattice(doc)
        return PartialSupLattice(lat, _family(lat.ground, doc["j"]))
    if kind == "map":
        dom, cod = _ground(doc["dom"]), _ground(doc["cod"])
        m = doc["map"]
        if set(m) != set(dom.labels):
            raise MalformedInput("map must assign every domain label exactly once")
        if not set(m.values()) <= set(cod.labels):
            raise MalformedInput("map uses a label outside the codomain")
        return SpaceMap.from_labels(dom, cod, m)
    if kind == "metric":
        g = _ground(doc["points"])
        return FiniteMetric(g, tuple(tuple(_parse_rat(x) for x in row) for row in doc["d"]))
    g = _ground(doc["atoms"])
    mass = doc["mass"]
    if set(mass) != set(g.labels):
        raise MalformedInput("mass must give every atom exactly once")
    return MeasureSpace(g, tuple(_parse_rat(mass[a]) for a in g.labels))


# a power set is written out member by member, so keep it listable
MAX_LISTED_POWER_SET = 12


def _labels(fam: SetFamily) -> list[list[str]]:
    if isinstance(fam, PowerSet) and len(fam.ground) > MAX_LISTED_POWER_SET:
        raise GroundTooLarge(f"power set of {len(fam.ground)} points is too large to write out")
    return fam.to_labels()


def _lattice_dict(l: FiniteLattice, kind: str = "lattice") -> dict:
    e = l.elements
    pairs = [[e[a], e[b]] for a in range(l.n) for b in range(l.n) if l.leq[a, b]]
    return {"kind": kind, "elements": list(e), "leq": pairs}


def to_dict(obj) -> dict:
    if isinstance(obj, TopConvexSpace):
        return {"kind": "topconvex", "ground": list(obj.ground.labels),
                "closed": _labels(obj.closed), "convex": _labels(obj.convex)}
    if isinstance(obj, PreconvexSpace):
        return {"kind": "preconvex", "ground": list(obj.ground.labels), "preconvex": _labels(obj.preconvex)}
    if isinstance(obj, FiniteLattice):
        return _lattice_dict(obj)
    if isinstance(obj, PointedLattice):
        return {**_lattice_dict(obj.lattice, "pointed_lattice"), "chosen": obj.chosen_labels()}
    if isinstance(obj, PartialSupLattice):
        return {**_lattice_dict(obj.lattice, "partial_sup"), "j": obj.j.to_labels()}
    if isinstance(obj, SpaceMap):
        return {"kind": "map", "dom": list(obj.dom.labels), "cod": list(obj.cod.labels), "map": obj.as_labels()}
    if isinstance(obj, FiniteMetric):
        return {"kind": "metric", "points": list(obj.points.labels),
                "d": [[_rat(x) for x in row] for row in obj.d]}
    if isinstance(obj, MeasureSpace):
        return {"kind": "measure", "atoms": list(obj.atoms.labels),
                "mass": {a: _rat(m) for a, m in zip(obj.atoms.labels, obj.mass)}}
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from e
    return from_dict(doc)


def load(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e.strerror}") from e
    return loads(text)


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def to_dot(obj) -> str:
    """Hasse diagram of a lattice, or of a space's closed convex sets under inclusion."""
    if isinstance(obj, (PointedLattice, PartialSupLattice)):
        obj = obj.lattice
    if isinstance(obj, TopConvexSpace):
        obj = FiniteLattice.from_family(obj.closed & obj.convex)
    elif isinstance(obj, PreconvexSpace):
        obj = FiniteLattice.from_family(obj.preconvex)
    if not isinstance(obj, FiniteLattice):
        raise TypeError(f"no diagram for {type(obj).__name__}")
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i, e in enumerate(obj.elements):
        lines.append(f"  n{i} [label={json.dumps(e, ensure_ascii=False)}];")
    for a, b in obj.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
