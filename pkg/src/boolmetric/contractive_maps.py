"""Contractive maps stored by their values on a referential.

A map into ``A^m`` has :class:`Point` images; a map into the Boolean ring
itself has :class:`BoolElem` images (B is then a metric space over itself
with ``d(a, b) = a + b``).  Plain callables and dict tables are accepted
wherever a map is only evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, islice
from typing import Callable, Mapping, Sequence

from .boolean_ring import BoolElem, all_elements
from .errors import (
    ContainmentError,
    DimensionError,
    MembershipError,
    NoKernelError,
    NormError,
    OracleFailure,
    PointingError,
    TotalityError,
)
from .metric import Point, PointedSpace, Value, blend, distance
from .span import (
    Referential,
    contains,
    coordinates,
    is_subspace,
    orthogonal_complement,
    orthogonalize,
    reconstruct,
    weierstrass_argmax,
)


def _vnorm(base: Value, v: Value) -> BoolElem:
    return distance(base, v)


def check_extensible(ref: Referential, images: Sequence[Value], base_image: Value) -> bool:
    """``|f(x_i)| <= |x_i|`` for every referential element, norms in the respective pointed spaces."""
    if len(images) != len(ref.elements):
        raise DimensionError(f"{len(ref.elements)} referential elements but {len(images)} images")
    return all(_vnorm(base_image, y) <= nx for y, nx in zip(images, ref.norms))


@dataclass(frozen=True)
class RefMap:
    domain: Referential
    base_image: Value
    images: tuple[Value, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if not check_extensible(self.domain, self.images, self.base_image):
            raise NormError("some image has a larger norm than its referential element")

    @property
    def space(self) -> PointedSpace:
        return self.domain.space

    def __call__(self, x: Point) -> Value:
        return evaluate(self, x)

    def pairs(self) -> list[tuple[Point, Value]]:
        return [(self.domain.base, self.base_image), *zip(self.domain.elements, self.images)]

    @classmethod
    def from_table(cls, table: Mapping[Point, Value], space: PointedSpace) -> RefMap:
        """Restrict a contractive table on (the members of) ``space`` to a referential."""
        if not is_contractive_table(table):
            raise NormError("table is not contractive")
        ref = orthogonalize(space)
        missing = [x for x in (ref.base, *ref.elements) if x not in table]
        if missing:
            raise TotalityError(f"table has no value at {missing[0]!r}")
        f = cls(ref, table[ref.base], tuple(table[x] for x in ref.elements))
        for x, y in table.items():
            if f(x) != y:
                raise MembershipError(f"table key {x!r} is not a member of the domain")
        return f


def evaluate(f: RefMap, x: Point) -> Value:
    """Recombine the images with the coordinates of ``x``; the residual coefficient goes to the base image."""
    ref = f.domain
    coords = coordinates(ref, x)
    if reconstruct(ref, coords) != x:
        raise MembershipError(f"{x!r} is not in the domain of the map")
    out = f.base_image
    for a, y in zip(coords, f.images):
        out = blend(a, y, out)
    return out


def as_callable(f) -> Callable[[Point], Value]:
    if isinstance(f, Mapping):
        return f.__getitem__
    return f


def is_contractive_table(table: Mapping[Value, Value], domain: Sequence[Value] | None = None, mix_checks: int = 2000) -> bool:
    """``d(f(x), f(y)) <= d(x, y)`` over every pair of table entries.

    When the answer is yes, preservation of binary convex combinations that
    stay inside the table is cross-checked as well.
    """
    if domain is not None:
        if set(domain) - set(table):
            raise TotalityError(f"table misses {len(set(domain) - set(table))} domain points")
    items = list(table.items())
    for (x, fx), (y, fy) in combinations(items, 2):
        if not distance(fx, fy) <= distance(x, y):
            return False
    if items:
        _check_mixes(table, items, mix_checks)
    return True


def _check_mixes(table, items, budget) -> None:
    omega = items[0][1].omega if isinstance(items[0][1], BoolElem) else items[0][1].spec.omega
    coeffs = all_elements(omega) if omega <= 4 else [BoolElem(1 << i, omega) for i in range(omega)]
    for (x, fx), (y, fy) in islice(combinations(items, 2), budget):
        for a in coeffs:
            z = blend(a, x, y)
            if z in table and table[z] != blend(a, fx, fy):
                raise OracleFailure("contractive table fails to preserve a convex combination", (x, y, a))


def orthogonal_sum(f: RefMap, g: RefMap, X: PointedSpace) -> RefMap:
    """The contractive map on X extending f (on U) and g (on U^perp)."""
    if not (f.space.base == g.space.base == X.base):
        raise PointingError("f, g and X must share the base point")
    if f.base_image != g.base_image:
        raise PointingError("f and g must send the base point to the same image")
    elements = f.domain.elements + g.domain.elements
    if not all(contains(X, x) for x in elements):
        raise ContainmentError("referentials of U and U^perp are not inside X")
    ref = Referential(elements, X.with_generators(elements))
    return RefMap(ref, f.base_image, f.images + g.images)


def zero_set(f, target: Value, space: PointedSpace | None = None) -> PointedSpace:
    """``{x : f(x) = target}`` as a pointed CFG-space (possibly EMPTY).

    A root is found by maximising ``complement(d(f(x), target))``; the
    generators are then ``complement(d(f(h), target)) h`` relative to it.
    """
    if space is None:
        space = f.space
    if space.is_empty:
        return space
    fn = as_callable(f)

    def closeness(x):
        return ~distance(fn(x), target)

    u0 = weierstrass_argmax(space, closeness)
    if not closeness(u0).is_one():
        return PointedSpace.empty(space.spec, space.n)
    gens = []
    for h in space.points:
        g = blend(closeness(h), h, u0)
        if g != u0 and g not in gens:
            gens.append(g)
    return PointedSpace.conv(u0, gens)


def kernel_map(Y: PointedSpace, X: PointedSpace) -> RefMap:
    """A contractive ``f: X -> B`` with ``f^{-1}(0) = Y``, pointed at Y's base."""
    if Y.is_empty:
        raise NoKernelError("no kernel map is constructed for the empty space")
    if X.is_empty or not is_subspace(Y, X):
        raise ContainmentError("Y is not contained in X")
    head = orthogonalize(Y).elements
    Xy = X.repoint(Y.base)
    ref = orthogonalize(Xy.with_generators(head + Xy.generators))
    assert ref.elements[: len(head)] == head
    omega = X.spec.omega
    zero = BoolElem.zero(omega)
    images = [zero] * len(head) + list(ref.norms[len(head):])
    return RefMap(ref, zero, tuple(images))


def intersect_subspaces(Y: PointedSpace, Z: PointedSpace, X: PointedSpace) -> PointedSpace:
    if Y.is_empty or Z.is_empty:
        return PointedSpace.empty(X.spec, X.n)
    f, g = kernel_map(Y, X), kernel_map(Z, X)
    return zero_set(lambda x: f(x) | g(x), BoolElem.zero(X.spec.omega), X)


def preimage_subspace(f, Z: PointedSpace, Y: PointedSpace, X: PointedSpace | None = None) -> PointedSpace:
    """``f^{-1}(Z)`` for contractive ``f: X -> Y`` and a CFG-subspace ``Z`` of ``Y``."""
    if X is None:
        if not isinstance(f, RefMap):
            raise TypeError("pass the domain X when f is a plain callable")
        X = f.space
    if Z.is_empty:
        return PointedSpace.empty(X.spec, X.n)
    k = kernel_map(Z, Y)
    fn = as_callable(f)
    return zero_set(lambda x: k(fn(x)), BoolElem.zero(Y.spec.omega), X)


def compose(g: RefMap, f: RefMap) -> RefMap:
    """``g o f`` on f's referential, by evaluating g on f's images."""
    return RefMap(f.domain, g(f.base_image), tuple(g(y) for y in f.images))


def restrict_table(f, points) -> dict:
    fn = as_callable(f)
    return {x: fn(x) for x in points}


def extend_to_ambient(f, U: PointedSpace, X: PointedSpace) -> RefMap:
    """Extend a contractive map on ``U`` to ``X`` by a constant on ``U^perp``.

    The result is pointed at U's base point.
    """
    if U.is_empty:
        raise ContainmentError("cannot extend a map from the empty space")
    if not is_subspace(U, X):
        raise ContainmentError("U is not contained in X")
    fn = as_callable(f)
    refU = orthogonalize(U)
    fU = RefMap(refU, fn(U.base), tuple(fn(x) for x in refU.elements))
    Xu = X.repoint(U.base)
    perp = orthogonalize(orthogonal_complement(U, Xu))
    k = RefMap(perp, fU.base_image, (fU.base_image,) * len(perp))
    return orthogonal_sum(fU, k, Xu)
