import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolmetric import oracle
from boolmetric.cfg_ring import RingSpec
from boolmetric.errors import ContractivityError, DimensionError, TotalityError
from boolmetric.boolean_ring import BoolElem
from boolmetric.metric import Point, PointedSpace, convex_combination, ring_point
from boolmetric.polynomials import (
    Polynomial,
    e_polynomial,
    eval_poly,
    interp_multi,
    interp_on_variety,
    interp_unary,
    poly_map,
    polys_from_space,
    reduce,
    reduce_exponent,
    space_from_polys,
)
from boolmetric.span import same_members

from conftest import G32, Z3, conv, pt


def X(spec, n=1, i=0):
    return Polynomial.variable(spec, n, i)


def c(spec, v, n=1):
    return Polynomial.constant(spec, n, v)


def mono(spec, exp, coeff=1):
    return Polynomial.from_terms(spec, len(exp), [(exp, coeff)])


def ztable(*vals):
    return {pt(Z3, i): pt(Z3, v) for i, v in enumerate(vals)}


def test_eval():
    sq = X(G32) * X(G32)
    assert eval_poly(sq, pt(G32, (2, 0))) == G32.elem((1, 0))
    assert c(G32, 2)(pt(G32, (1, 0))) == G32.const(2)
    assert X(G32)(pt(G32, (2, 1))) == G32.elem((2, 1))


def test_reduce():
    assert mono(Z3, (3,)) == X(Z3)
    assert mono(Z3, (4,)) == mono(Z3, (2,))
    assert reduce(X(Z3) * c(Z3, 3)).is_zero()
    assert [reduce_exponent(e, 5) for e in range(10)] == [0, 1, 2, 3, 4, 1, 2, 3, 4, 1]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_e_polynomial(p):
    spec = RingSpec(p, 1)
    assert e_polynomial(spec) == mono(spec, (p - 1,))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_interp_idempotent_table(p):
    spec = RingSpec(p, 1)
    table = {pt(spec, i): pt(spec, 0 if i == 0 else 1) for i in range(p)}
    assert interp_unary(table, spec) == mono(spec, (p - 1,))


def test_interp_unary_examples():
    assert interp_unary(ztable(0, 1, 1), Z3) == mono(Z3, (2,))
    assert interp_unary(ztable(0, 1, 2), Z3) == X(Z3)
    assert interp_unary(ztable(0, 0, 1), Z3) == mono(Z3, (2,), 2) + X(Z3)


def test_interp_unary_all_z3_tables():
    pts = oracle.enumerate_points(Z3, 1)
    for img in itertools.product(range(3), repeat=3):
        q = interp_unary(ztable(*img), Z3)
        assert [q(x).components[0] for x in pts] == list(img)


def test_interp_unary_rejects_bad_tables():
    with pytest.raises(TotalityError):
        interp_unary({pt(Z3, 0): pt(Z3, 1)}, Z3)
    swap = {x: pt(G32, tuple(reversed(x.coords[0].components))) for x in oracle.enumerate_points(G32, 1)}
    with pytest.raises(ContractivityError):
        interp_unary(swap, G32)


def test_interp_multi_examples():
    ident = {x: x for x in oracle.enumerate_points(Z3, 1)}
    assert interp_multi(ident, Z3, 1) == [X(Z3)]
    assert interp_multi({x: pt(Z3, 2) for x in ident}, Z3, 1) == [c(Z3, 2)]
    # (x, y) -> (x^2, y) over GF(3)^2
    table = {x: Point((x.coords[0] ** 2, x.coords[1])) for x in oracle.enumerate_points(G32, 2)}
    assert interp_multi(table, G32, 2) == [mono(G32, (2, 0)), mono(G32, (0, 1))]


def test_interp_multi_random_contractive(rng):
    pts = oracle.enumerate_points(G32, 1)
    tables = list(oracle.contractive_tables(pts, pts))
    assert len(tables) == 729
    for table in rng.sample(tables, 40):
        (q,) = interp_multi(table, G32, 1)
        assert all(q(x) == table[x].coords[0] for x in pts)


def test_space_from_polys_examples():
    Z = PointedSpace.ambient(Z3, 1)
    V = space_from_polys([mono(Z3, (2,)) - X(Z3)])
    assert oracle.member_set(V) == {pt(Z3, 0), pt(Z3, 1)}
    assert same_members(space_from_polys([c(G32, 0)]), PointedSpace.ambient(G32, 1))
    assert space_from_polys([c(Z3, 1)]).is_empty
    assert same_members(space_from_polys([], Z3, 1), Z)
    with pytest.raises(DimensionError):
        space_from_polys([X(Z3), X(G32)])


def test_polys_from_space_examples():
    assert polys_from_space(conv(Z3, 0, 1)) == mono(Z3, (2,), 2) + X(Z3)
    assert polys_from_space(PointedSpace.ambient(G32, 2)).is_zero()
    q = polys_from_space(conv(Z3, 0))
    assert [x for x in oracle.enumerate_points(Z3, 1) if q(x).is_zero()] == [pt(Z3, 0)]
    assert polys_from_space(PointedSpace.empty(Z3, 1)) == c(Z3, 1)


def test_varieties_round_trip(rng):
    for members in oracle.cfg_member_sets(Z3, 1):
        if not members:
            continue
        pts = sorted(members, key=lambda x: x.to_list())
        U = PointedSpace.conv(pts[0], pts[1:])
        assert oracle.member_set(space_from_polys([polys_from_space(U)])) == members
    A2 = PointedSpace.ambient(G32, 2)
    for _ in range(10):
        U = oracle.random_subspace(rng, A2)
        assert same_members(space_from_polys([polys_from_space(U)]), U)


def test_interp_on_variety(rng):
    A = PointedSpace.ambient(G32, 1)
    for _ in range(10):
        U = oracle.random_subspace(rng, A)
        f = oracle.random_refmap(rng, A, A)
        polys = interp_on_variety(f, U)
        g = poly_map(polys)
        assert all(g(x) == f(x) for x in oracle.enumerate_members(U))


g32_coeff = st.tuples(st.integers(0, 2), st.integers(0, 2)).map(G32.elem)
g32_poly = st.lists(st.tuples(st.tuples(st.integers(0, 4), st.integers(0, 4)), g32_coeff), max_size=4).map(
    lambda t: Polynomial.from_terms(G32, 2, t)
)
g32_point = st.tuples(*[st.tuples(st.integers(0, 2), st.integers(0, 2))] * 2).map(lambda t: pt(G32, *t))


@settings(max_examples=60)
@given(g32_poly, g32_poly, g32_point)
def test_ring_homomorphism(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - p).is_zero()


@settings(max_examples=60)
@given(g32_poly, st.lists(g32_point, min_size=2, max_size=2), st.integers(0, 3))
def test_polynomials_preserve_convex_combinations(q, pts, m):
    a = BoolElem(m, 2)
    mix = convex_combination(pts, [a, ~a])
    assert ring_point(q(mix)) == convex_combination([ring_point(q(x)) for x in pts], [a, ~a])
