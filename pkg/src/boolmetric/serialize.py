"""JSON wire forms for every public object.

All parsers take the ring explicitly: a job file declares one ring and
every object in it is read against that ring.
"""

from __future__ import annotations

import json
from typing import Any

from .boolean_ring import BoolElem
from .cfg_ring import RingElem, RingSpec
from .contractive_maps import RefMap
from .errors import BoolMetricError, DimensionError
from .metric import Point, PointedSpace
from .polynomials import Polynomial
from .span import InvariantSeq, Referential, orthogonalize


class ParseError(BoolMetricError, ValueError):
    def __init__(self, message: str, where: str = "", line: int | None = None, column: int | None = None):
        loc = where
        if line is not None:
            loc = f"line {line}, column {column}" + (f" ({where})" if where else "")
        super().__init__(f"{loc}: {message}" if loc else message)
        self.where, self.line, self.column = where, line, column


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def _need(cond: bool, msg: str, where: str) -> None:
    if not cond:
        raise ParseError(msg, where)


# ---- Boolean ring / ring


def bool_to_json(a: BoolElem) -> list[int]:
    return a.to_list()


def bool_from_json(data, omega: int, where: str = "") -> BoolElem:
    _need(isinstance(data, list) and all(b in (0, 1) for b in data), "expected an array of 0/1", where)
    if len(data) != omega:
        raise DimensionError(f"{where}: expected {omega} bits, got {len(data)}")
    return BoolElem.from_list(data)


def spec_to_json(spec: RingSpec) -> dict:
    return spec.to_dict()


def spec_from_json(data, where: str = "ring") -> RingSpec:
    _need(isinstance(data, dict) and {"p", "omega"} <= data.keys(), 'expected {"p": ..., "omega": ...}', where)
    try:
        return RingSpec(int(data["p"]), int(data["omega"]))
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), where) from None


def elem_to_json(x: RingElem) -> list[int]:
    return x.to_list()


def elem_from_json(data, spec: RingSpec, where: str = "") -> RingElem:
    _need(isinstance(data, list) and all(isinstance(c, int) and not isinstance(c, bool) for c in data), "expected an array of residues", where)
    if len(data) != spec.omega:
        raise DimensionError(f"{where}: expected {spec.omega} residues, got {len(data)}")
    _need(all(0 <= c < spec.p for c in data), f"residues must lie in 0..{spec.p - 1}", where)
    return RingElem(tuple(data), spec)


# ---- points and spaces


def point_to_json(x: Point) -> list[list[int]]:
    return x.to_list()


def point_from_json(data, spec: RingSpec, where: str = "") -> Point:
    _need(isinstance(data, list) and data and all(isinstance(c, list) for c in data), "expected an array of ring elements", where)
    return Point(tuple(elem_from_json(c, spec, f"{where}[{i}]") for i, c in enumerate(data)))


def space_to_json(space: PointedSpace) -> dict:
    if space.is_empty:
        return {"empty": True, "n": space.n}
    return {"base": point_to_json(space.base), "generators": [point_to_json(g) for g in space.generators]}


def space_from_json(data, spec: RingSpec, n: int | None = None, where: str = "") -> PointedSpace:
    _need(isinstance(data, dict), "expected a space object", where)
    if data.get("empty"):
        return PointedSpace.empty(spec, int(data.get("n", n or 1)))
    _need("base" in data, 'space needs "base" (or "empty": true)', where)
    base = point_from_json(data["base"], spec, f"{where}.base")
    gens = data.get("generators", [])
    _need(isinstance(gens, list), "generators must be an array", f"{where}.generators")
    pts = [point_from_json(g, spec, f"{where}.generators[{i}]") for i, g in enumerate(gens)]
    for i, g in enumerate(pts):
        if g.n != base.n:
            raise DimensionError(f"{where}.generators[{i}]: point has {g.n} coordinates, base has {base.n}")
    return PointedSpace.conv(base, pts)


def invariants_to_json(inv: InvariantSeq):
    return {"empty": True} if inv.empty else [bool_to_json(a) for a in inv.alphas]


def invariants_from_json(data, omega: int, where: str = "") -> InvariantSeq:
    if isinstance(data, dict) and data.get("empty"):
        return InvariantSeq(empty=True)
    _need(isinstance(data, list), "expected a list of Boolean arrays", where)
    return InvariantSeq(tuple(bool_from_json(a, omega, f"{where}[{i}]") for i, a in enumerate(data)))


# ---- polynomials and maps


def poly_to_json(poly: Polynomial) -> dict:
    return {"n": poly.n_vars, "monomials": [{"exp": list(e), "coeff": c.to_list()} for e, c in poly.terms]}


def poly_from_json(data, spec: RingSpec, where: str = "") -> Polynomial:
    _need(isinstance(data, dict) and "n" in data and "monomials" in data, 'polynomial needs "n" and "monomials"', where)
    n = int(data["n"])
    terms = []
    for i, m in enumerate(data["monomials"]):
        w = f"{where}.monomials[{i}]"
        _need(isinstance(m, dict) and "exp" in m and "coeff" in m, 'monomial needs "exp" and "coeff"', w)
        exp = m["exp"]
        _need(isinstance(exp, list) and len(exp) == n and all(isinstance(e, int) and e >= 0 for e in exp), f"exp must be {n} non-negative integers", w)
        coeff = m["coeff"]
        if isinstance(coeff, int):
            c = spec.const(coeff)
        else:
            _need(isinstance(coeff, list) and all(isinstance(v, int) for v in coeff), "coeff must be an integer or residue array", w)
            # negative residues are allowed in coefficients, e.g. X^2 - X
            c = elem_from_json([v % spec.p for v in coeff], spec, f"{w}.coeff")
        terms.append((exp, c))
    return Polynomial.from_terms(spec, n, terms)


def value_to_json(v):
    return bool_to_json(v) if isinstance(v, BoolElem) else point_to_json(v)


def value_from_json(data, spec: RingSpec, where: str = ""):
    """A Point (nested arrays) or a Boolean element (flat 0/1 array)."""
    if isinstance(data, list) and data and all(isinstance(b, int) for b in data):
        return bool_from_json(data, spec.omega, where)
    return point_from_json(data, spec, where)


def refmap_to_json(f: RefMap) -> dict:
    return {
        "base": point_to_json(f.domain.base),
        "base_image": value_to_json(f.base_image),
        "pairs": [[point_to_json(x), value_to_json(y)] for x, y in zip(f.domain.elements, f.images)],
    }


def refmap_from_json(data, spec: RingSpec, where: str = "") -> RefMap:
    """Read a map; ``base`` (the domain's base point) defaults to the origin."""
    _need(isinstance(data, dict) and "base_image" in data and "pairs" in data, 'map needs "base_image" and "pairs"', where)
    pairs = data["pairs"]
    _need(isinstance(pairs, list) and all(isinstance(q, list) and len(q) == 2 for q in pairs), "pairs must be [point, image] pairs", f"{where}.pairs")
    xs = [point_from_json(q[0], spec, f"{where}.pairs[{i}][0]") for i, q in enumerate(pairs)]
    ys = [value_from_json(q[1], spec, f"{where}.pairs[{i}][1]") for i, q in enumerate(pairs)]
    if "base" in data:
        base = point_from_json(data["base"], spec, f"{where}.base")
    else:
        _need(bool(xs), "a map with no pairs needs an explicit base", where)
        base = Point.zero(spec, xs[0].n)
    space = PointedSpace.conv(base, xs)
    ref = orthogonalize(space)
    if ref.elements != tuple(xs):
        raise ParseError("the listed points are not a referential (pairwise orthogonal, nonzero)", f"{where}.pairs")
    return RefMap(Referential(tuple(xs), space), value_from_json(data["base_image"], spec, f"{where}.base_image"), tuple(ys))


def classify_object(data) -> str:
    """Which kind of object a JSON value encodes."""
    if isinstance(data, dict):
        if "monomials" in data:
            return "polynomial"
        if "pairs" in data:
            return "map"
        if "base" in data or data.get("empty"):
            return "space"
    if isinstance(data, list):
        return "point"
    return "unknown"


def object_from_json(data, spec: RingSpec, n: int | None = None, where: str = ""):
    kind = classify_object(data)
    if kind == "polynomial":
        return poly_from_json(data, spec, where)
    if kind == "map":
        return refmap_from_json(data, spec, where)
    if kind == "space":
        return space_from_json(data, spec, n, where)
    if kind == "point":
        return point_from_json(data, spec, where)
    raise ParseError("cannot tell what kind of object this is", where)


def to_json(obj):
    if isinstance(obj, BoolElem):
        return bool_to_json(obj)
    if isinstance(obj, RingSpec):
        return spec_to_json(obj)
    if isinstance(obj, RingElem):
        return elem_to_json(obj)
    if isinstance(obj, Point):
        return point_to_json(obj)
    if isinstance(obj, PointedSpace):
        return space_to_json(obj)
    if isinstance(obj, InvariantSeq):
        return invariants_to_json(obj)
    if isinstance(obj, Polynomial):
        return poly_to_json(obj)
    if isinstance(obj, RefMap):
        return refmap_to_json(obj)
    raise TypeError(f"no wire form for {type(obj).__name__}")
