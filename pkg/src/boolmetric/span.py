"""Referentials, coordinates, bases and the alpha invariants of CFG-spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

from .boolean_ring import BoolElem
from .errors import (
    ContainmentError,
    ContractivityError,
    DimensionError,
    EmptySpaceError,
    LimitExceededError,
    PointingError,
    check_cancel,
)
from .metric import Point, PointedSpace, blend, dist, is_orthogonal, norm


@dataclass(frozen=True)
class Referential:
    """Pairwise orthogonal, nonzero points generating ``space``."""

    elements: tuple[Point, ...]
    space: PointedSpace

    @property
    def base(self) -> Point:
        return self.space.base

    @property
    def norms(self) -> tuple[BoolElem, ...]:
        return tuple(norm(self.space, x) for x in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class Base(Referential):
    """A referential with decreasing norms ``|x_1| >= |x_2| >= ...``."""

    def __post_init__(self):
        ns = self.norms
        if any(not (ns[i] >= ns[i + 1]) for i in range(len(ns) - 1)):
            raise ValueError(f"norms {ns} are not a decreasing chain")


@dataclass(frozen=True)
class InvariantSeq:
    """The nonzero alpha_k of a space, or the marker for the empty space."""

    alphas: tuple[BoolElem, ...] = ()
    empty: bool = False

    def __post_init__(self):
        if self.empty and self.alphas:
            raise ValueError("the empty-space marker carries no alphas")
        for i, a in enumerate(self.alphas):
            if not a:
                raise ValueError("zero alphas are trimmed, not stored")
            if i and not a <= self.alphas[i - 1]:
                raise ValueError(f"alphas {self.alphas} are not decreasing")

    def alpha(self, k: int) -> BoolElem | None:
        """alpha_k (1-based); None past the stored entries."""
        return self.alphas[k - 1] if 0 < k <= len(self.alphas) else None

    def to_list(self) -> list[list[int]] | None:
        return None if self.empty else [a.to_list() for a in self.alphas]

    def __len__(self) -> int:
        return len(self.alphas)


def _orth(base: Point, x: Point, y: Point) -> bool:
    # x * y = 0  iff  |x| v |y| <= d(x, y)
    return not (dist(base, x) | dist(base, y)).mask & ~dist(x, y).mask


def _orthogonalize(space: PointedSpace, cancel=None) -> Referential:
    if space.is_empty:
        raise EmptySpaceError("cannot orthogonalize the empty space")
    base = space.base
    xs = list(space.generators)
    k = len(xs)

    def bad_with(j):
        return sum(1 for i in range(k) if i != j and not _orth(base, xs[i], xs[j]))

    bad = sum(1 for i in range(k) for j in range(i + 1, k) if not _orth(base, xs[i], xs[j]))
    while bad:
        check_cancel(cancel)
        i, j = next((i, j) for i in range(k) for j in range(i + 1, k) if not _orth(base, xs[i], xs[j]))
        before = bad_with(j)
        # scale x_j down to the atoms where it differs from x_i
        xs[j] = blend(dist(xs[i], xs[j]), xs[j], base)
        now = bad - before + bad_with(j)
        assert now < bad, "orthogonalization step did not remove a non-orthogonal pair"
        bad = now
    elements = tuple(x for x in xs if x != base)
    return Referential(elements, space.with_generators(elements))


_orthogonalize_cached = lru_cache(maxsize=4096)(_orthogonalize)


def orthogonalize(space: PointedSpace, cancel=None) -> Referential:
    """Turn the generators of ``space`` into a referential.

    Scans pairs lexicographically; an already orthogonal prefix of the
    generator list is left untouched.
    """
    if cancel is None:
        return _orthogonalize_cached(space)
    return _orthogonalize(space, cancel)


def coordinates(ref: Referential, x: Point) -> tuple[BoolElem, ...]:
    """``a_i = |x_i| * complement(d(x, x_i))`` for each referential element.

    These are the coordinates of ``x`` whenever it is a member; for a
    non-member the reconstruction simply fails to return ``x``.
    """
    ref.space.check_point(x)
    return tuple(norm(ref.space, xi) * ~dist(x, xi) for xi in ref.elements)


def reconstruct(ref: Referential, coords: Sequence[BoolElem]) -> Point:
    out = ref.base
    for a, xi in zip(coords, ref.elements):
        out = blend(a, xi, out)
    return out


def contains(space: PointedSpace, x: Point) -> bool:
    if space.is_empty:
        return False
    space.check_point(x)
    ref = orthogonalize(space)
    coords = coordinates(ref, x)
    seen = 0
    for a in coords:
        assert not seen & a.mask, "coordinates on a referential must be disjoint"
        seen |= a.mask
    return reconstruct(ref, coords) == x


def same_members(X: PointedSpace, Y: PointedSpace) -> bool:
    """Member-set equality, decided by mutual containment of generators."""
    if X.is_empty or Y.is_empty:
        return X.is_empty and Y.is_empty
    if X.spec != Y.spec or X.n != Y.n:
        return False
    return all(contains(Y, x) for x in X.points) and all(contains(X, y) for y in Y.points)


def is_subspace(U: PointedSpace, X: PointedSpace) -> bool:
    return U.is_empty or all(contains(X, u) for u in U.points)


def weierstrass_argmax(space: PointedSpace, f: Callable[[Point], BoolElem]) -> Point:
    """A member ``u`` with ``f(u) = max f`` for a contractive ``f: space -> B``.

    Folds ``u <- c u + complement(c) x`` over the generators with
    ``c = f(u) v complement(f(x))``, so ``f(u)`` accumulates the join of ``f``
    over all of them.  Masking with ``complement(f(x))`` as well only moves
    ``u`` where ``x`` gains something; a constant-zero ``f`` stays at the base.
    """
    if space.is_empty:
        raise EmptySpaceError("no maximum over the empty space")
    u = space.base
    fu = f(u)
    target = fu
    for x in space.generators:
        fx = f(x)
        target = target | fx
        u = blend(fu | ~fx, u, x)
        fu = f(u)
    if fu != target:
        raise ContractivityError(f"f(u) = {fu!r} but the join over generators is {target!r}; f is not contractive")
    return u


def orthogonal_complement(U: PointedSpace, X: PointedSpace) -> PointedSpace:
    """``U^perp`` inside ``X``, generated by the tail of an extended referential."""
    if X.is_empty:
        raise EmptySpaceError("ambient space is empty")
    if U.is_empty:
        raise EmptySpaceError("cannot take the complement of the empty space")
    if U.spec != X.spec or U.n != X.n:
        raise DimensionError("U and X live in different ambient spaces")
    if U.base != X.base:
        raise PointingError(f"U is pointed at {U.base!r}, X at {X.base!r}")
    if not is_subspace(U, X):
        raise ContainmentError("U is not contained in X")
    head = orthogonalize(U).elements
    ref = orthogonalize(X.with_generators(head + X.generators))
    assert ref.elements[: len(head)] == head
    return X.with_generators(ref.elements[len(head):])


def build_base(space: PointedSpace, cancel=None) -> Base:
    """Greedy base: each element maximises the norm over the complement of the previous ones."""
    if space.is_empty:
        raise EmptySpaceError("the empty space has no base")
    picked: list[Point] = []
    while True:
        check_cancel(cancel)
        rest = orthogonal_complement(space.with_generators(picked), space)
        u = weierstrass_argmax(rest, lambda y: norm(space, y))
        if not norm(space, u):
            break
        picked.append(u)
    for a, b in combinations(picked, 2):
        assert is_orthogonal(space, a, b)
    return Base(tuple(picked), space.with_generators(picked))


def alpha_invariants(space: PointedSpace) -> InvariantSeq:
    if space.is_empty:
        return InvariantSeq(empty=True)
    return InvariantSeq(build_base(space).norms)


def alpha_invariants_by_definition(space: PointedSpace, limit: int = 10**6, cancel=None) -> InvariantSeq:
    """alpha_k as the join of pairwise-distance products over (k+1)-subsets of the generators."""
    if space.is_empty:
        return InvariantSeq(empty=True)
    pts = list(dict.fromkeys(space.points))
    omega = space.spec.omega
    alphas = []
    work = 0
    for k in range(1, len(pts)):
        check_cancel(cancel)
        gen = BoolElem.zero(omega)
        for tup in combinations(pts, k + 1):
            work += 1
            if work > limit:
                raise LimitExceededError(f"more than {limit} tuples needed")
            prod = BoolElem.one(omega)
            for a, b in combinations(tup, 2):
                prod = prod * dist(a, b)
                if not prod:
                    break
            gen = gen | prod
        if not gen:
            break
        alphas.append(gen)
    return InvariantSeq(tuple(alphas))


def classify_isometric(X: PointedSpace, Y: PointedSpace):
    """Decide isometry by comparing invariants.

    Returns ``(verdict, mapping)`` where ``mapping`` is the contractive map
    sending X's base point to Y's and each base element of X to the
    matching base element of Y (a :class:`~boolmetric.contractive_maps.RefMap`),
    or ``None`` when the spaces are not isometric or both are empty.
    """
    from .contractive_maps import RefMap

    if X.spec.omega != Y.spec.omega:
        raise DimensionError(f"spaces are over different Boolean rings: |Omega| = {X.spec.omega} vs {Y.spec.omega}")
    ax, ay = alpha_invariants(X), alpha_invariants(Y)
    if ax != ay:
        return False, None
    if X.is_empty:
        return True, None
    bx, by = build_base(X), build_base(Y)
    return True, RefMap(bx, Y.base, by.elements)

