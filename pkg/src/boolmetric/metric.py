"""Points of A^n, the B(A)-valued metric and the pointed-space vocabulary.

Convex combinations are realised as module combinations: a point mixed
with coefficient ``a`` keeps its components on the atoms of ``a``.
Everything pointed (norm, star, orthogonality) is measured relative to the
base point of a :class:`PointedSpace`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence, Union

from .boolean_ring import BoolElem, is_partition
from .cfg_ring import RingElem, RingSpec, scalar_act
from .errors import DimensionError, PartitionError


@dataclass(frozen=True, slots=True)
class Point:
    coords: tuple[RingElem, ...]

    def __post_init__(self):
        if not self.coords:
            raise DimensionError("a point needs at least one coordinate")

    @classmethod
    def of(cls, spec: RingSpec, *coords: Sequence[int]) -> Point:
        """``Point.of(spec, [2, 0], [1, 1])`` builds a point of A^2."""
        return cls(tuple(spec.elem(c) for c in coords))

    @classmethod
    def zero(cls, spec: RingSpec, n: int) -> Point:
        return cls((spec.zero(),) * n)

    @classmethod
    def const(cls, spec: RingSpec, values: Sequence[int]) -> Point:
        return cls(tuple(spec.const(v) for v in values))

    @property
    def spec(self) -> RingSpec:
        return self.coords[0].spec

    @property
    def n(self) -> int:
        return len(self.coords)

    def _check(self, other: Point) -> None:
        if not isinstance(other, Point):
            raise TypeError(f"expected Point, got {type(other).__name__}")
        if other.n != self.n or other.spec != self.spec:
            raise DimensionError(
                f"points live in different spaces: A^{self.n} over {self.spec} vs A^{other.n} over {other.spec}"
            )

    def __add__(self, other: Point) -> Point:
        self._check(other)
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Point) -> Point:
        self._check(other)
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def mask(self, a: BoolElem) -> Point:
        return Point(tuple(scalar_act(a, c) for c in self.coords))

    def to_list(self) -> list[list[int]]:
        return [c.to_list() for c in self.coords]

    def __repr__(self) -> str:
        return "P[" + ",".join(repr(c) for c in self.coords) + "]"


Value = Union[Point, BoolElem]


def dist(x: Point, y: Point) -> BoolElem:
    """``e(x_1 - y_1) v ... v e(x_n - y_n)``."""
    x._check(y)
    mask = 0
    for a, b in zip(x.coords, y.coords):
        for i, (u, v) in enumerate(zip(a.components, b.components)):
            if u != v:
                mask |= 1 << i
    return BoolElem(mask, x.spec.omega)


def distance(u: Value, v: Value) -> BoolElem:
    """Distance in A^n, or in B viewed as a metric space over itself."""
    if isinstance(u, BoolElem):
        return u + v
    return dist(u, v)


def blend(a: BoolElem, x: Value, y: Value) -> Value:
    """The binary convex combination ``a x + (1 - a) y``."""
    if isinstance(x, BoolElem):
        return (a * x) | (~a * y)
    x._check(y)
    if a.omega != x.spec.omega:
        raise DimensionError("coefficient and point are over different atom sets")
    m = a.mask
    return Point(
        tuple(
            RingElem(tuple(u if m >> i & 1 else v for i, (u, v) in enumerate(zip(cx.components, cy.components))), cx.spec)
            for cx, cy in zip(x.coords, y.coords)
        )
    )


def convex_combination(points: Sequence[Value], coeffs: Sequence[BoolElem]) -> Value:
    """``sum a_i x_i`` for a complete family of disjoint idempotents ``a_i``."""
    if len(points) != len(coeffs):
        raise DimensionError(f"{len(points)} points but {len(coeffs)} coefficients")
    if not points:
        raise PartitionError("a convex combination needs at least one point")
    if not is_partition(list(coeffs), require_complete=True):
        raise PartitionError(f"coefficients {list(coeffs)} are not a complete partition of 1")
    out = points[0]
    for x, a in zip(points[1:], coeffs[1:]):
        out = blend(a, x, out)
    return out


@dataclass(frozen=True)
class PointedSpace:
    """``conv({base} U generators)`` pointed at ``base``, or the empty space.

    Equality of instances is structural; use :func:`boolmetric.span.same_members`
    to compare member sets.
    """

    spec: RingSpec
    n: int
    base: Point | None
    generators: tuple[Point, ...] = field(default=())

    def __post_init__(self):
        if self.base is None:
            if self.generators:
                raise ValueError("the empty space has no generators")
            return
        for g in (self.base, *self.generators):
            if g.n != self.n or g.spec != self.spec:
                raise DimensionError(f"point {g!r} is not in A^{self.n} over {self.spec}")

    @classmethod
    def empty(cls, spec: RingSpec, n: int) -> PointedSpace:
        return cls(spec, n, None, ())

    @classmethod
    def conv(cls, base: Point, generators: Iterable[Point] = ()) -> PointedSpace:
        return cls(base.spec, base.n, base, tuple(generators))

    @classmethod
    def ambient(cls, spec: RingSpec, n: int) -> PointedSpace:
        """All of A^n, pointed at 0 and generated by the nonzero constant tuples."""
        grid = [Point.const(spec, t) for t in product(range(spec.p), repeat=n) if any(t)]
        return cls(spec, n, Point.zero(spec, n), tuple(grid))

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def points(self) -> tuple[Point, ...]:
        return () if self.base is None else (self.base, *self.generators)

    def repoint(self, new_base: Point) -> PointedSpace:
        """Same generated set (given ``new_base`` is a member), pointed elsewhere."""
        gens = tuple(g for g in self.points if g != new_base)
        return PointedSpace(self.spec, self.n, new_base, gens)

    def with_generators(self, generators: Iterable[Point]) -> PointedSpace:
        return PointedSpace(self.spec, self.n, self.base, tuple(generators))

    def check_point(self, x: Point) -> None:
        if x.n != self.n or x.spec != self.spec:
            raise DimensionError(f"point {x!r} is not in A^{self.n} over {self.spec}")


def scale(space: PointedSpace, a: BoolElem, x: Point) -> Point:
    """``a x`` relative to the base point: ``a x + (1 - a) 0``."""
    return blend(a, x, space.base)


def norm(space: PointedSpace, x: Point) -> BoolElem:
    space.check_point(x)
    return dist(space.base, x)


def star(space: PointedSpace, x: Point, y: Point) -> Point:
    """``x * y = complement(d(x, y)) x`` relative to the base point."""
    space.check_point(x)
    space.check_point(y)
    return scale(space, ~dist(x, y), x)


def is_orthogonal(space: PointedSpace, x: Point, y: Point) -> bool:
    by_star = star(space, x, y) == space.base
    by_norms = dist(x, y) == norm(space, x) | norm(space, y)
    assert by_star == by_norms, f"orthogonality tests disagree on {x!r}, {y!r}"
    return by_star


def ring_point(x: RingElem) -> Point:
    return Point((x,))


__all__ = [
    "Point",
    "PointedSpace",
    "Value",
    "blend",
    "convex_combination",
    "dist",
    "distance",
    "is_orthogonal",
    "norm",
    "ring_point",
    "scale",
    "star",
]
