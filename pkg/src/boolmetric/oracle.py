"""Brute-force ground truth over small rings.

Membership here is decided by closing a generator set under convex
combinations (never through coordinates), contractive maps are found by
backtracking over tables, and polynomial functions by listing every
reduced polynomial.  :func:`run_theorem_suite` replays the library's
structural results against these enumerations.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

import numpy as np

from . import contractive_maps as cm
from . import polynomials as pl
from . import span
from .boolean_ring import BoolElem, all_elements, is_partition
from .cfg_ring import RingElem, RingSpec, all_ring_elements, embed
from .errors import Cancelled, LimitExceededError, OracleFailure, check_cancel
from .metric import Point, PointedSpace, blend, convex_combination, dist, distance, norm, ring_point

DEFAULT_LIMIT = 10**6

# ---------------------------------------------------------------- enumeration


def enumerate_points(spec: RingSpec, n: int, limit: int = DEFAULT_LIMIT) -> list[Point]:
    """All of A^n in lexicographic order."""
    size = spec.p ** (spec.omega * n)
    if size > limit:
        raise LimitExceededError(f"A^{n} over {spec} has {size} points, limit is {limit}")
    elems = all_ring_elements(spec)
    return [Point(t) for t in product(elems, repeat=n)]


def _raw(x: Point) -> tuple:
    """Per-atom columns: entry i is the vector of x's components on atom i."""
    return tuple(zip(*(c.components for c in x.coords)))


def _cook(raw: tuple, spec: RingSpec) -> Point:
    return Point(tuple(RingElem(tuple(col), spec) for col in zip(*raw)))


def convex_closure(points: Sequence[Point], cancel=None) -> frozenset[Point]:
    """Closure of a finite set under binary convex combinations.

    Mixing with single-atom coefficients is enough: every mix ``a x + (1-a) y``
    is reached by swapping one atom at a time.
    """
    if not points:
        return frozenset()
    spec = points[0].spec
    members = {_raw(x) for x in points}
    frontier = list(members)
    omega = spec.omega
    while frontier:
        check_cancel(cancel)
        fresh = []
        for x in frontier:
            for y in list(members):
                for i in range(omega):
                    for u, v in ((x, y), (y, x)):
                        z = u[:i] + (v[i],) + u[i + 1:]
                        if z not in members:
                            members.add(z)
                            fresh.append(z)
        frontier = fresh
    return frozenset(_cook(r, spec) for r in members)


def enumerate_members(space: PointedSpace, limit: int = DEFAULT_LIMIT, cancel=None) -> list[Point]:
    """Members of ``space``, computed by ``contains`` and by closure; both must agree."""
    if space.is_empty:
        return []
    pts = enumerate_points(space.spec, space.n, limit)
    by_contains = [x for x in pts if span.contains(space, x)]
    by_closure = convex_closure(space.points, cancel)
    if set(by_contains) != by_closure:
        diff = set(by_contains) ^ by_closure
        raise OracleFailure("contains disagrees with convex closure", {"space": space, "point": next(iter(diff))})
    return by_contains


def member_set(space: PointedSpace) -> frozenset[Point]:
    """Member set by closure only."""
    return convex_closure(space.points) if not space.is_empty else frozenset()


def brute_coordinates(ref: span.Referential, x: Point) -> list[tuple[BoolElem, ...]]:
    """Every tuple satisfying the three coordinate properties, by exhaustive search."""
    space = ref.space
    omega = space.spec.omega
    base = _raw(space.base)
    elems = [_raw(e) for e in ref.elements]
    target = _raw(x)
    norms = [dist(space.base, e).mask for e in ref.elements]
    found = []

    def submasks(m):
        s = m
        while True:
            yield s
            if s == 0:
                return
            s = (s - 1) & m

    for masks in product(*(list(submasks(m)) for m in norms)):
        used = 0
        ok = True
        for m in masks:
            if used & m:
                ok = False
                break
            used |= m
        if not ok:
            continue
        combo = tuple(
            next((e[i] for e, m in zip(elems, masks) if m >> i & 1), base[i]) for i in range(omega)
        )
        if combo == target:
            found.append(tuple(BoolElem(m, omega) for m in masks))
    return found


def _dist_matrix(points: Sequence) -> np.ndarray:
    n = len(points)
    D = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            D[i, j] = D[j, i] = distance(points[i], points[j]).mask
    return D


def contractive_tables(domain: Sequence, codomain: Sequence, cancel=None) -> Iterator[dict]:
    """Every contractive table ``domain -> codomain`` by backtracking."""
    dX = _dist_matrix(domain).tolist()
    dY = _dist_matrix(codomain).tolist()
    n, m = len(domain), len(codomain)
    assign: list[int] = []

    def rec(k):
        if k == n:
            yield {domain[i]: codomain[assign[i]] for i in range(n)}
            return
        if k <= 2:
            check_cancel(cancel)
        for c in range(m):
            row = dY[c]
            if all(row[assign[j]] & ~dX[k][j] == 0 for j in range(k)):
                assign.append(c)
                yield from rec(k + 1)
                assign.pop()

    yield from rec(0)


def count_contractive(domain: Sequence, codomain: Sequence, cancel=None) -> int:
    return sum(1 for _ in contractive_tables(domain, codomain, cancel))


def all_polynomials(spec: RingSpec, n: int, limit: int = DEFAULT_LIMIT) -> Iterator[pl.Polynomial]:
    """Every reduced polynomial in ``n`` variables over A."""
    exps = list(product(range(spec.p), repeat=n))
    count = spec.size ** len(exps)
    if count > limit:
        raise LimitExceededError(f"{count} polynomials exceed the limit {limit}")
    ring = all_ring_elements(spec)
    for coeffs in product(ring, repeat=len(exps)):
        yield pl.Polynomial.from_terms(spec, n, [(e, c) for e, c in zip(exps, coeffs) if not c.is_zero()])


def polynomial_function_tables(spec: RingSpec, n: int, limit: int = DEFAULT_LIMIT) -> set[tuple]:
    """Distinct value tables of all polynomial functions ``A^n -> A``."""
    pts = enumerate_points(spec, n, limit)
    return {tuple(pl.eval_poly(q, x) for x in pts) for q in all_polynomials(spec, n, limit)}


def cfg_member_sets(spec: RingSpec, n: int, max_points: int = 12, cancel=None) -> set[frozenset]:
    """Member sets of all CFG-subspaces of A^n (closures of every subset), plus the empty set."""
    pts = enumerate_points(spec, n)
    if len(pts) > max_points:
        raise LimitExceededError(f"{len(pts)} points; subset enumeration capped at {max_points}")
    out = {frozenset()}
    for mask in range(1, 1 << len(pts)):
        if mask & 0xFF == 0:
            check_cancel(cancel)
        out.add(convex_closure([pts[i] for i in range(len(pts)) if mask >> i & 1]))
    return out


def find_isometry(X: Sequence, Y: Sequence) -> dict | None:
    """A distance-preserving bijection ``X -> Y`` by exhaustive backtracking, or None."""
    if len(X) != len(Y):
        return None
    dX = _dist_matrix(X).tolist()
    dY = _dist_matrix(Y).tolist()
    n = len(X)
    assign: list[int] = []
    used = [False] * n

    def rec(k):
        if k == n:
            return True
        for c in range(n):
            if not used[c] and all(dY[c][assign[j]] == dX[k][j] for j in range(k)):
                used[c] = True
                assign.append(c)
                if rec(k + 1):
                    return True
                assign.pop()
                used[c] = False
        return False

    return {X[i]: Y[assign[i]] for i in range(n)} if rec(0) else None


def is_isometry_table(table: dict, codomain: Sequence) -> bool:
    if set(table.values()) != set(codomain) or len(set(table.values())) != len(table):
        return False
    return all(distance(table[x], table[y]) == distance(x, y) for x, y in combinations(table, 2))


# ------------------------------------------------------------------- sampling


def random_point(rng: random.Random, spec: RingSpec, n: int) -> Point:
    return Point(tuple(RingElem(tuple(rng.randrange(spec.p) for _ in range(spec.omega)), spec) for _ in range(n)))


def random_bool(rng: random.Random, omega: int) -> BoolElem:
    return BoolElem(rng.randrange(1 << omega), omega)


def random_partition(rng: random.Random, omega: int, k: int) -> list[BoolElem]:
    """``k`` disjoint idempotents joining to 1 (some may be zero)."""
    masks = [0] * k
    for i in range(omega):
        masks[rng.randrange(k)] |= 1 << i
    return [BoolElem(m, omega) for m in masks]


def random_space(rng: random.Random, spec: RingSpec, n: int, max_generators: int = 4) -> PointedSpace:
    base = random_point(rng, spec, n)
    return PointedSpace.conv(base, [random_point(rng, spec, n) for _ in range(rng.randint(0, max_generators))])


def random_member(rng: random.Random, space: PointedSpace) -> Point:
    pts = space.points
    return convex_combination(pts, random_partition(rng, space.spec.omega, len(pts)))


def random_subspace(rng: random.Random, X: PointedSpace, max_generators: int = 3) -> PointedSpace:
    """A CFG-subspace of X spanned by random members of X."""
    base = random_member(rng, X)
    return PointedSpace.conv(base, [random_member(rng, X) for _ in range(rng.randint(0, max_generators))])


def random_polynomial(rng: random.Random, spec: RingSpec, n: int, max_terms: int = 4) -> pl.Polynomial:
    terms = [
        (tuple(rng.randrange(spec.p) for _ in range(n)), RingElem(tuple(rng.randrange(spec.p) for _ in range(spec.omega)), spec))
        for _ in range(rng.randint(0, max_terms))
    ]
    return pl.Polynomial.from_terms(spec, n, terms)


def random_refmap(rng: random.Random, X: PointedSpace, Y: PointedSpace) -> cm.RefMap:
    """A random contractive map ``(X, base) -> Y`` given by images on a referential."""
    ref = span.orthogonalize(X)
    y0 = random_member(rng, Y)
    images = tuple(blend(nx, random_member(rng, Y), y0) for nx in ref.norms)
    return cm.RefMap(ref, y0, images)


def random_small_space(rng: random.Random, spec: RingSpec, n: int, max_members: int, tries: int = 200) -> PointedSpace:
    """A random space whose member set has at most ``max_members`` points."""
    for _ in range(tries):
        X = random_space(rng, spec, n, max_generators=2)
        if len(member_set(X)) <= max_members:
            return X
    return PointedSpace.conv(random_point(rng, spec, n))


# --------------------------------------------------------------------- report


@dataclass
class CheckResult:
    name: str
    universe: int
    passed: bool
    counterexample: str | None = None
    seconds: float = 0.0
    skipped: bool = False


@dataclass
class OracleReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> list[dict]:
        return [asdict(c) for c in self.checks]

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    def extend(self, other: OracleReport) -> None:
        self.checks.extend(other.checks)


class _Fail(Exception):
    pass


def _expect(cond: bool, what) -> None:
    if not cond:
        raise _Fail(what)


# ---------------------------------------------------------------- the checks


def check_metric_axioms(spec: RingSpec, n: int, rng: random.Random, limit: int) -> int:
    """Definition axioms plus the two alternative triangle forms, on every (or sampled) triple."""
    pts = enumerate_points(spec, n, limit)
    N = len(pts)
    D = _dist_matrix(pts)
    _expect(((D == 0) == np.eye(N, dtype=bool)).all(), "d(x,y)=0 iff x=y fails")
    _expect((D == D.T).all(), "asymmetric distance")
    if N**3 <= limit:
        X, Y, Z = np.meshgrid(np.arange(N), np.arange(N), np.arange(N), indexing="ij")
        X, Y, Z = X.ravel(), Y.ravel(), Z.ravel()
    else:
        X, Y, Z = (np.array([rng.randrange(N) for _ in range(limit // 4)]) for _ in range(3))
    xz, xy, yz = D[X, Z], D[X, Y], D[Y, Z]
    form3 = (xz & ~(xy | yz)) == 0
    form3p = (xz & ~yz & ~xy) == 0
    form3pp = ((xz ^ yz) & ~xy) == 0
    _expect((form3 == form3p).all() and (form3 == form3pp).all(), "triangle forms disagree")
    bad = np.flatnonzero(~form3)
    _expect(bad.size == 0, lambda: f"triangle inequality fails at {(pts[X[bad[0]]], pts[Y[bad[0]]], pts[Z[bad[0]]])}")
    if n >= 2:
        for _ in range(50):
            x, y = pts[rng.randrange(N)], pts[rng.randrange(N)]
            k = rng.randrange(1, n)
            left = dist(Point(x.coords[:k]), Point(y.coords[:k])) | dist(Point(x.coords[k:]), Point(y.coords[k:]))
            _expect(left == dist(x, y), ("product metric", x, y, k))
    return len(X)


def check_convex_combinations(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    omega = spec.omega
    small = spec.p ** (omega * n) <= 100
    pts = enumerate_points(spec, n, limit) if small else None
    for _ in range(samples):
        k = rng.randint(1, 4)
        xs = [random_point(rng, spec, n) for _ in range(k)]
        coeffs = random_partition(rng, omega, k)
        r = convex_combination(xs, coeffs)
        _expect(all(not (a * dist(r, x)) for a, x in zip(coeffs, xs)), ("defining property", xs, coeffs))
        y = random_point(rng, spec, n)
        acc = BoolElem.zero(omega)
        for a, x in zip(coeffs, xs):
            acc = acc + a * dist(x, y)
        _expect(acc == dist(r, y), ("distance convexity", xs, coeffs, y))
        if small:
            sols = [z for z in pts if all(not (a * dist(z, x)) for a, x in zip(coeffs, xs))]
            _expect(sols == [r], ("uniqueness", xs, coeffs))
        q = random_polynomial(rng, spec, n)
        lhs = pl.eval_poly(q, r)
        rhs = convex_combination([ring_point(pl.eval_poly(q, x)) for x in xs], coeffs).coords[0]
        _expect(lhs == rhs, ("polynomial preserves combination", q, xs, coeffs))
    return samples


def check_membership_and_referentials(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    for _ in range(samples):
        X = random_space(rng, spec, n)
        members = set(enumerate_members(X, limit))
        ref = span.orthogonalize(X)
        for a, b in combinations(ref.elements, 2):
            _expect(span.is_orthogonal(X, a, b), ("referential not orthogonal", X))
        _expect(X.base not in ref.elements, ("base in referential", X))
        _expect(member_set(ref.space) == members, ("orthogonalize changed the member set", X))
    return samples


def check_coordinates(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    if spec.omega > 2:
        return 0
    count = 0
    for _ in range(samples):
        X = random_space(rng, spec, n, max_generators=4)
        ref = span.orthogonalize(X)
        for x in member_set(X):
            found = brute_coordinates(ref, x)
            _expect(found == [span.coordinates(ref, x)], ("coordinates", X, x, found))
            count += 1
    return count


def check_invariants(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    for _ in range(samples):
        X = random_space(rng, spec, n)
        base = span.build_base(X)
        inv = span.alpha_invariants(X)
        _expect(inv == span.alpha_invariants_by_definition(X), ("alpha by base vs definition", X))
        _expect(len(inv) <= len(X.generators), ("alpha_k nonzero beyond generator count", X))
        _expect(member_set(base.space) == member_set(X), ("base does not span", X))
        gens = list(X.generators)
        rng.shuffle(gens)
        _expect(span.alpha_invariants(X.with_generators(gens)) == inv, ("shuffle changed invariants", X))
        other = random_member(rng, X)
        _expect(span.alpha_invariants(X.repoint(other)) == inv, ("base point changed invariants", X, other))
    return samples


def check_complements(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    for _ in range(samples):
        X = random_space(rng, spec, n)
        U = PointedSpace.conv(X.base, [random_member(rng, X) for _ in range(rng.randint(0, 2))])
        C = span.orthogonal_complement(U, X)
        mU, mC, mX = member_set(U), member_set(C), member_set(X)
        _expect(mC <= mX, ("complement leaves X", U, X))
        _expect(all(span.is_orthogonal(X, u, c) for u in mU for c in mC), ("complement not orthogonal", U, X))
        _expect(convex_closure(list(mU | mC)) == mX, ("U and its complement do not span X", U, X))
        if not C.generators:
            _expect(mU == mX, ("restricted cancellation", U, X))
    return samples


def check_contractive_polynomial(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int, cancel=None) -> int:
    pts = enumerate_points(spec, n, limit)
    ring = [ring_point(a) for a in all_ring_elements(spec)]
    npoly = spec.size ** (spec.p**n)
    if npoly > limit:
        return 0
    tables = list(contractive_tables(pts, ring, cancel))
    functions = polynomial_function_tables(spec, n, limit)
    _expect(len(tables) == len(functions), ("contractive count vs polynomial functions", len(tables), len(functions)))
    for t in rng.sample(tables, min(samples, len(tables))):
        polys = pl.interp_multi(t, spec, n)
        _expect(all(pl.eval_poly(polys[0], x) == t[x].coords[0] for x in pts), ("interpolation", t))
    return len(tables)


def check_convex_iff_contractive(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    pts = enumerate_points(spec, n, limit)
    if len(pts) > 27:
        return 0
    coeffs = all_elements(spec.omega)
    ambient = PointedSpace.ambient(spec, n)
    count = 0
    for k in range(samples):
        if k % 2:
            f = random_refmap(rng, ambient, ambient)
            table = {x: f(x) for x in pts}
        else:
            table = {x: random_point(rng, spec, n) for x in pts}
        contractive = all(distance(table[x], table[y]) <= dist(x, y) for x, y in combinations(pts, 2))
        preserves = all(table[blend(a, x, y)] == blend(a, table[x], table[y]) for x in pts for y in pts for a in coeffs)
        _expect(contractive == preserves, ("contractive vs convex-preserving", table))
        count += 1
    return count


def check_zero_sets(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    for _ in range(samples):
        X = random_space(rng, spec, n)
        Y = random_space(rng, spec, rng.randint(1, 2))
        f = random_refmap(rng, X, Y)
        members = enumerate_members(X, limit)
        target = f(rng.choice(members)) if rng.random() < 0.7 else random_point(rng, spec, Y.n)
        Z = cm.zero_set(f, target)
        expected = frozenset(x for x in members if f(x) == target)
        _expect(member_set(Z) == expected, ("zero set", X, f, target))
        image = convex_closure([f(x) for x in X.points])
        _expect(image == frozenset(f(x) for x in members), ("image of a CFG space", X, f))
    return samples


def check_kernels(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    for _ in range(samples):
        X = random_space(rng, spec, n)
        Ysub = random_subspace(rng, X)
        Zsub = random_subspace(rng, X)
        mX, mY, mZ = member_set(X), member_set(Ysub), member_set(Zsub)
        k = cm.kernel_map(Ysub, X)
        zero = BoolElem.zero(spec.omega)
        _expect(frozenset(x for x in mX if k(x) == zero) == mY, ("kernel", Ysub, X))
        _expect(member_set(cm.intersect_subspaces(Ysub, Zsub, X)) == mY & mZ, ("intersection", Ysub, Zsub, X))
        W = random_space(rng, spec, n)
        f = random_refmap(rng, W, X)
        pre = cm.preimage_subspace(f, Ysub, X)
        _expect(member_set(pre) == frozenset(w for w in member_set(W) if f(w) in mY), ("preimage", f, Ysub))
    return samples


def check_varieties(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    ambient = PointedSpace.ambient(spec, n)
    for _ in range(samples):
        U = random_subspace(rng, ambient) if rng.random() < 0.9 else PointedSpace.empty(spec, n)
        g = pl.polys_from_space(U)
        _expect(member_set(pl.space_from_polys([g])) == member_set(U), ("round trip", U, g))
        polys = [random_polynomial(rng, spec, n) for _ in range(rng.randint(1, 2))]
        V = pl.space_from_polys(polys)
        expected = frozenset(x for x in enumerate_points(spec, n, limit) if all(pl.eval_poly(q, x).is_zero() for q in polys))
        _expect(member_set(V) == expected, ("zero locus", polys))
        if not U.is_empty:
            Y = random_space(rng, spec, 1)
            f = random_refmap(rng, U.repoint(U.base), Y)
            qs = pl.interp_on_variety(f, U)
            _expect(all(Point(tuple(pl.eval_poly(q, u) for q in qs)) == f(u) for u in member_set(U)), ("extension", U, f))
    return samples


def check_variety_census(spec: RingSpec, n: int, rng: random.Random, limit: int, cancel=None) -> int:
    pts = enumerate_points(spec, n, limit)
    if len(pts) > 12:
        return 0
    cfg = cfg_member_sets(spec, n, cancel=cancel)
    bools = all_elements(spec.omega)
    loci = set()
    for t in contractive_tables(pts, bools, cancel):
        (g,) = pl.interp_multi({x: ring_point(embed(v, spec)) for x, v in t.items()}, spec, n)
        loci.add(member_set(pl.space_from_polys([g])))
    closed = {a & b for a in loci for b in loci}
    _expect(closed == loci, "zero loci not closed under intersection")
    _expect(cfg == loci, ("CFG member sets vs zero loci", len(cfg), len(loci)))
    return len(cfg)


def check_isometries(spec: RingSpec, n: int, rng: random.Random, samples: int, limit: int) -> int:
    spaces = [random_small_space(rng, spec, n, 6) for _ in range(samples)]
    members = [sorted(member_set(s), key=_raw) for s in spaces]
    pairs = 0
    for i, j in combinations(range(len(spaces)), 2):
        same, f = span.classify_isometric(spaces[i], spaces[j])
        if same:
            table = {x: f(x) for x in members[i]}
            _expect(is_isometry_table(table, members[j]), ("constructed map is not an isometry", spaces[i], spaces[j]))
        else:
            _expect(find_isometry(members[i], members[j]) is None, ("missed isometry", spaces[i], spaces[j]))
        pairs += 1
    return pairs


def run_theorem_suite(
    spec: RingSpec,
    n: int,
    limit: int = DEFAULT_LIMIT,
    seed: int = 0,
    samples: int = 10,
    cancel=None,
) -> OracleReport:
    """Run every brute-force cross-check on ``A^n``; failures become report entries."""
    rng = random.Random(seed)
    label = f"p={spec.p},omega={spec.omega},n={n}"
    checks: list[tuple[str, Callable[[], int]]] = [
        ("metric_axioms", lambda: check_metric_axioms(spec, n, rng, limit)),
        ("convex_combinations", lambda: check_convex_combinations(spec, n, rng, samples * 5, limit)),
        ("membership_referentials", lambda: check_membership_and_referentials(spec, n, rng, samples, limit)),
        ("coordinates_vs_search", lambda: check_coordinates(spec, n, rng, samples, limit)),
        ("alpha_invariants", lambda: check_invariants(spec, n, rng, samples, limit)),
        ("orthogonal_complement", lambda: check_complements(spec, n, rng, samples, limit)),
        ("contractive_iff_polynomial", lambda: check_contractive_polynomial(spec, n, rng, samples, limit, cancel)),
        ("convex_iff_contractive", lambda: check_convex_iff_contractive(spec, n, rng, samples, limit)),
        ("zero_sets", lambda: check_zero_sets(spec, n, rng, samples, limit)),
        ("kernels_intersections_preimages", lambda: check_kernels(spec, n, rng, samples, limit)),
        ("varieties_round_trip", lambda: check_varieties(spec, n, rng, samples, limit)),
        ("variety_census", lambda: check_variety_census(spec, n, rng, limit, cancel)),
        ("isometry_classification", lambda: check_isometries(spec, n, rng, samples, limit)),
    ]
    report = OracleReport()
    for name, run in checks:
        check_cancel(cancel)
        t0 = time.perf_counter()
        try:
            size = run()
            result = CheckResult(f"{name}[{label}]", size, True, skipped=size == 0)
        except Cancelled:
            raise
        except _Fail as exc:
            what = exc.args[0]
            what = what() if callable(what) else what
            result = CheckResult(f"{name}[{label}]", 0, False, repr(what))
        except (LimitExceededError, OracleFailure, AssertionError, ArithmeticError, ValueError) as exc:
            if isinstance(exc, LimitExceededError):
                result = CheckResult(f"{name}[{label}]", 0, True, skipped=True)
            else:
                ce = getattr(exc, "counterexample", None)
                result = CheckResult(f"{name}[{label}]", 0, False, repr(ce if ce is not None else exc))
        result.seconds = round(time.perf_counter() - t0, 3)
        report.checks.append(result)
    return report


DEFAULT_ENVELOPE = [(p, omega, n) for p in (2, 3, 5) for omega in (1, 2) for n in (1, 2)]


def run_envelope(
    envelope=DEFAULT_ENVELOPE, limit: int = DEFAULT_LIMIT, seed: int = 0, samples: int = 10, cancel=None
) -> OracleReport:
    report = OracleReport()
    for p, omega, n in envelope:
        report.extend(run_theorem_suite(RingSpec(p, omega), n, limit, seed, samples, cancel))
    return report


__all__ = [
    "CheckResult",
    "OracleReport",
    "all_polynomials",
    "brute_coordinates",
    "cfg_member_sets",
    "contractive_tables",
    "convex_closure",
    "count_contractive",
    "enumerate_members",
    "enumerate_points",
    "find_isometry",
    "is_isometry_table",
    "member_set",
    "polynomial_function_tables",
    "run_envelope",
    "run_theorem_suite",
]
