"""Reduced multivariate polynomials over A = GF(p)^Omega and interpolation.

A polynomial is kept in reduced form: every exponent is below ``p`` (using
``x^p = x``) and no coefficient is zero.  Over A two reduced polynomials
define the same function iff they are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .cfg_ring import (
    RingElem,
    RingSpec,
    all_ring_elements,
    canonical_generators,
    embed,
    idempotent_of,
    unit_inverse,
)
from .contractive_maps import (
    extend_to_ambient,
    intersect_subspaces,
    is_contractive_table,
    kernel_map,
    zero_set,
)
from .errors import ContractivityError, DimensionError, TotalityError
from .metric import Point, PointedSpace, ring_point
from .span import orthogonalize

Exponent = tuple[int, ...]


def reduce_exponent(e: int, p: int) -> int:
    return e if e < p else (e - 1) % (p - 1) + 1


def _grlex_key(exp: Exponent):
    return (-sum(exp), tuple(-e for e in exp))


@dataclass(frozen=True)
class Polynomial:
    spec: RingSpec
    n_vars: int
    terms: tuple[tuple[Exponent, RingElem], ...] = ()

    @classmethod
    def from_terms(cls, spec: RingSpec, n_vars: int, terms: Iterable[tuple[Sequence[int], RingElem | int]]) -> Polynomial:
        """Build a polynomial from raw (exponent, coefficient) pairs and reduce it."""
        acc: dict[Exponent, RingElem] = {}
        for exp, c in terms:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n_vars:
                raise DimensionError(f"exponent {exp} has {len(exp)} entries, expected {n_vars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if isinstance(c, int):
                c = spec.const(c)
            elif c.spec != spec:
                raise DimensionError(f"coefficient {c!r} is over {c.spec}, not {spec}")
            exp = tuple(reduce_exponent(e, spec.p) for e in exp)
            acc[exp] = acc[exp] + c if exp in acc else c
        kept = sorted(((e, c) for e, c in acc.items() if not c.is_zero()), key=lambda t: _grlex_key(t[0]))
        return cls(spec, n_vars, tuple(kept))

    @classmethod
    def constant(cls, spec: RingSpec, n_vars: int, c: RingElem | int) -> Polynomial:
        return cls.from_terms(spec, n_vars, [((0,) * n_vars, c)])

    @classmethod
    def variable(cls, spec: RingSpec, n_vars: int, i: int) -> Polynomial:
        exp = tuple(1 if k == i else 0 for k in range(n_vars))
        return cls.from_terms(spec, n_vars, [(exp, 1)])

    @property
    def monomials(self) -> dict[Exponent, RingElem]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=-1)

    def _check(self, other: Polynomial) -> None:
        if other.spec != self.spec or other.n_vars != self.n_vars:
            raise DimensionError("polynomials over different rings or variable counts")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return Polynomial.from_terms(self.spec, self.n_vars, self.terms + other.terms)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.spec, self.n_vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | RingElem) -> Polynomial:
        if isinstance(other, RingElem):
            return Polynomial.from_terms(self.spec, self.n_vars, [(e, c * other) for e, c in self.terms])
        self._check(other)
        p, n = self.spec.p, self.n_vars
        if p ** (2 * n) <= _DENSE_LIMIT:
            return _from_dense(self.spec, n, _dense_mul(_to_dense(self), _to_dense(other), p, n))
        return Polynomial.from_terms(
            self.spec,
            n,
            [(tuple(a + b for a, b in zip(e1, e2)), c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms],
        )

    __rmul__ = __mul__

    def __call__(self, x: Point) -> RingElem:
        return eval_poly(self, x)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"X{i + 1}" for i in range(self.n_vars)] if self.n_vars > 1 else ["X"]
        parts = []
        for exp, c in self.terms:
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(names, exp) if e)
            parts.append(f"{c!r}*{mono}" if mono else repr(c))
        return " + ".join(parts)


_DENSE_LIMIT = 10**6


@lru_cache(maxsize=None)
def _exponent_tables(p: int, n: int):
    """All reduced exponents, their positions, and the reduced-product index table."""
    exps = list(product(range(p), repeat=n))
    pos = {e: i for i, e in enumerate(exps)}
    table = np.array(
        [[pos[tuple(reduce_exponent(a + b, p) for a, b in zip(e1, e2))] for e2 in exps] for e1 in exps],
        dtype=np.intp,
    )
    return exps, pos, table


def _to_dense(poly: Polynomial) -> np.ndarray:
    _, pos, _ = _exponent_tables(poly.spec.p, poly.n_vars)
    out = np.zeros((len(pos), poly.spec.omega), dtype=np.int64)
    for e, c in poly.terms:
        out[pos[e]] = c.components
    return out


def _from_dense(spec: RingSpec, n: int, arr: np.ndarray) -> Polynomial:
    exps, _, _ = _exponent_tables(spec.p, n)
    terms = [(exps[i], RingElem(tuple(int(v) for v in arr[i]), spec)) for i in np.flatnonzero(arr.any(axis=1))]
    terms.sort(key=lambda t: _grlex_key(t[0]))
    return Polynomial(spec, n, tuple(terms))


def _dense_mul(a: np.ndarray, b: np.ndarray, p: int, n: int) -> np.ndarray:
    _, _, table = _exponent_tables(p, n)
    rows_a, rows_b = np.flatnonzero(a.any(axis=1)), np.flatnonzero(b.any(axis=1))
    out = np.zeros_like(a)
    prod = (a[rows_a, None, :] * b[None, rows_b, :]).reshape(-1, a.shape[1])
    np.add.at(out, table[np.ix_(rows_a, rows_b)].ravel(), prod)
    return out % p


def reduce(poly: Polynomial) -> Polynomial:
    """Re-normalise a polynomial (constructors already return reduced form)."""
    return Polynomial.from_terms(poly.spec, poly.n_vars, poly.terms)


def eval_poly(poly: Polynomial, x: Point) -> RingElem:
    if x.n != poly.n_vars or x.spec != poly.spec:
        raise DimensionError(f"cannot evaluate a {poly.n_vars}-variable polynomial over {poly.spec} at {x!r}")
    p = poly.spec.p
    cols = [c.components for c in x.coords]
    out = [0] * poly.spec.omega
    for exp, coeff in poly.terms:
        for i, ci in enumerate(coeff.components):
            v = ci
            for col, e in zip(cols, exp):
                if e:
                    v = v * pow(col[i], e, p) % p
            out[i] = (out[i] + v) % p
    return RingElem(tuple(out), poly.spec)


def e_polynomial(spec: RingSpec) -> Polynomial:
    """X^(p-1), which evaluates to the idempotent e(x)."""
    return Polynomial.from_terms(spec, 1, [((spec.p - 1,), 1)])


def _as_ring_value(v) -> RingElem:
    if isinstance(v, RingElem):
        return v
    if isinstance(v, Point):
        if v.n != 1:
            raise DimensionError(f"expected a value in A, got a point of A^{v.n}")
        return v.coords[0]
    raise TypeError(f"cannot read {v!r} as an element of A")


def interp_unary(table: Mapping, spec: RingSpec) -> Polynomial:
    """Polynomial reproducing a contractive table ``A -> A``.

    Lagrange-style: with referential ``x_1..x_r`` of ``(A, 0)`` and
    ``g_i = X prod_{j != i} (X - x_j)``, the result is
    ``sum a_i^{-1} (f(x_i) - f(0)) g_i + f(0)`` for units ``a_i`` with
    ``g_i(x_i) = a_i e(x_i)``.
    """
    f = {_as_ring_value(k): _as_ring_value(v) for k, v in table.items()}
    domain = all_ring_elements(spec)
    if set(domain) - set(f):
        raise TotalityError("table does not cover all of A")
    if not is_contractive_table({ring_point(k): ring_point(v) for k, v in f.items()}):
        raise ContractivityError("table is not contractive")
    zero = spec.zero()
    f0 = f[zero]
    ambient = PointedSpace.conv(ring_point(zero), [ring_point(c) for c in canonical_generators(spec)])
    xs = [r.coords[0] for r in orthogonalize(ambient).elements]
    X = Polynomial.variable(spec, 1, 0)
    out = Polynomial.constant(spec, 1, f0)
    for i, xi in enumerate(xs):
        g = X
        for j, xj in enumerate(xs):
            if j != i:
                g = g * (X - Polynomial.constant(spec, 1, xj))
        gi = eval_poly(g, ring_point(xi))
        ei = idempotent_of(xi)
        unit = gi + embed(~ei, spec)
        assert unit * embed(ei, spec) == gi
        out = out + g * (unit_inverse(unit) * (f[xi] - f0))
    return out


def _e_of(poly: Polynomial) -> Polynomial:
    out = Polynomial.constant(poly.spec, poly.n_vars, 1)
    for _ in range(poly.spec.p - 1):
        out = out * poly
    return out


def _join(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b - a * b


def distance_polynomial(v: Point) -> Polynomial:
    """``x |-> d(x, v)`` as a polynomial with idempotent values."""
    spec, n = v.spec, v.n
    out = Polynomial.constant(spec, n, 0)
    for k, vk in enumerate(v.coords):
        out = _join(out, _e_of(Polynomial.variable(spec, n, k) - Polynomial.constant(spec, n, vk)))
    return out


def interp_map(fn: Callable[[Point], Point | RingElem], spec: RingSpec, n: int) -> list[Polynomial]:
    """Interpolate a map known to be contractive on all of A^n.

    Only the values at 0 and on a referential of ``(A^n, 0)`` are read.
    With ``G_i(x) = |x| prod_{j != i} d(x, x_j)`` each output component is
    ``sum (f(x_i) - f(0)) G_i + f(0)``.
    """
    ambient = PointedSpace.ambient(spec, n)
    xs = orthogonalize(ambient).elements

    def value(x):
        y = fn(x)
        return y.coords if isinstance(y, Point) else (y,)

    f0 = value(ambient.base)
    fx = [value(x) for x in xs]
    norm_poly = distance_polynomial(ambient.base)
    dpolys = [distance_polynomial(x) for x in xs]
    basis = []
    for i in range(len(xs)):
        G = norm_poly
        for j, dp in enumerate(dpolys):
            if j != i:
                G = G * dp
        basis.append(G)
    out = []
    for k in range(len(f0)):
        poly = Polynomial.constant(spec, n, f0[k])
        for G, y in zip(basis, fx):
            poly = poly + G * (y[k] - f0[k])
        out.append(poly)
    return out


def interp_multi(table: Mapping[Point, Point | RingElem], spec: RingSpec, n: int) -> list[Polynomial]:
    """One polynomial per output coordinate reproducing a contractive table ``A^n -> A^m``."""
    domain = [Point(t) for t in product(all_ring_elements(spec), repeat=n)]
    if set(domain) - set(table):
        raise TotalityError(f"table does not cover all of A^{n}")
    values = {k: (ring_point(v) if isinstance(v, RingElem) else v) for k, v in table.items()}
    if not is_contractive_table(values):
        raise ContractivityError("table is not contractive")
    return interp_map(values.__getitem__, spec, n)


def poly_map(polys: Sequence[Polynomial]) -> Callable[[Point], Point]:
    """The map ``A^n -> A^m`` induced by a polynomial list."""
    return lambda x: Point(tuple(eval_poly(q, x) for q in polys))


def space_from_polys(polys: Sequence[Polynomial], spec: RingSpec | None = None, n: int | None = None) -> PointedSpace:
    """The common zero locus of ``polys`` as a pointed CFG-subspace of A^n."""
    if polys:
        spec, n = polys[0].spec, polys[0].n_vars
        for q in polys:
            if q.spec != spec or q.n_vars != n:
                raise DimensionError("polynomials over different rings or variable counts")
    elif spec is None or n is None:
        raise ValueError("spec and n are needed for an empty polynomial list")
    X = PointedSpace.ambient(spec, n)
    zero = ring_point(spec.zero())
    acc = X
    for q in polys:
        Z = zero_set(lambda x, q=q: ring_point(eval_poly(q, x)), zero, X)
        acc = intersect_subspaces(acc, Z, X)
        if acc.is_empty:
            break
    return acc


def polys_from_space(U: PointedSpace) -> Polynomial:
    """A single polynomial whose zero locus is exactly ``U``.

    The empty space gets the constant 1.
    """
    if U.is_empty:
        return Polynomial.constant(U.spec, U.n, 1)
    k = kernel_map(U, PointedSpace.ambient(U.spec, U.n))
    (g,) = interp_map(lambda x: embed(k(x), U.spec), U.spec, U.n)
    return g


def interp_on_variety(f, U: PointedSpace) -> list[Polynomial]:
    """Polynomials on A^n agreeing with a contractive map defined only on ``U``."""
    ext = extend_to_ambient(f, U, PointedSpace.ambient(U.spec, U.n))
    return interp_map(ext, U.spec, U.n)


__all__ = [
    "Polynomial",
    "distance_polynomial",
    "e_polynomial",
    "eval_poly",
    "interp_map",
    "interp_multi",
    "interp_on_variety",
    "interp_unary",
    "poly_map",
    "polys_from_space",
    "reduce",
    "reduce_exponent",
    "space_from_polys",
]
