import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolmetric.boolean_ring import BoolElem
from boolmetric.errors import DimensionError, MembershipError, PartitionError
from boolmetric.metric import (
    Point,
    PointedSpace,
    blend,
    convex_combination,
    dist,
    distance,
    is_orthogonal,
    norm,
    scale,
    star,
)
from boolmetric.oracle import enumerate_points

from conftest import G32, Z3, b, conv, pt

g32_points = st.tuples(st.integers(0, 2), st.integers(0, 2)).map(lambda c: pt(G32, c))


def test_dist_examples():
    assert dist(pt(G32, (2, 0)), pt(G32, (2, 1))) == b(1)
    assert dist(pt(Z3, 1, 2), pt(Z3, 1, 0)) == BoolElem.one(1)


@given(g32_points, g32_points, g32_points)
def test_metric_axioms(x, y, z):
    assert dist(x, x) == BoolElem.zero(2)
    assert dist(x, y) == dist(y, x)
    assert dist(x, z) <= dist(x, y) | dist(y, z)
    assert (dist(x, y).mask == 0) == (x == y)


def test_bool_distance_is_sum():
    assert distance(b(0), b(0, 1)) == b(1)


def test_norm_examples():
    X = PointedSpace.ambient(G32, 1)
    assert norm(X, pt(G32, (2, 0))) == b(0)
    assert norm(X, X.base) == b()
    assert norm(X.repoint(pt(G32, (1, 1))), pt(G32, (2, 1))) == b(0)


def test_convex_combination_examples():
    assert convex_combination([pt(G32, (1, 1)), pt(G32, (2, 2))], [b(0), b(1)]) == pt(G32, (1, 2))
    x = pt(G32, (2, 1))
    assert convex_combination([x], [BoolElem.one(2)]) == x
    for m in range(4):
        a = BoolElem(m, 2)
        assert convex_combination([x, x], [a, ~a]) == x


def test_convex_combination_is_the_unique_solution():
    # x = sum a_i x_i is the only point with a_i d(x, x_i) = 0 for all i
    pts = [pt(G32, (1, 1)), pt(G32, (2, 0)), pt(G32, (0, 2))]
    coeffs = [b(0), b(), b(1)]
    want = convex_combination(pts, coeffs)
    sols = [x for x in enumerate_points(G32, 1) if all((a * dist(x, xi)).mask == 0 for a, xi in zip(coeffs, pts))]
    assert sols == [want]


def test_convex_combination_errors():
    with pytest.raises(PartitionError):
        convex_combination([pt(G32, (1, 1)), pt(G32, (2, 2))], [b(0), b(0, 1)])
    with pytest.raises(DimensionError):
        convex_combination([pt(G32, (1, 1))], [BoolElem.one(2), b()])


def test_star_and_orthogonality():
    Z = PointedSpace.ambient(Z3, 1)
    assert star(Z, pt(Z3, 1), pt(Z3, 2)) == pt(Z3, 0)
    assert is_orthogonal(Z, pt(Z3, 1), pt(Z3, 2))
    X = PointedSpace.ambient(G32, 1)
    assert star(X, pt(G32, (1, 0)), pt(G32, (1, 1))) == pt(G32, (1, 0))
    assert not is_orthogonal(X, pt(G32, (1, 0)), pt(G32, (1, 1)))
    for x in enumerate_points(G32, 1):
        assert is_orthogonal(X, x, X.base)
        if norm(X, x) == BoolElem.one(2):
            assert star(X, x, x) == x


def test_orthogonality_three_ways():
    X = PointedSpace.ambient(G32, 1)
    for x, y in itertools.product(enumerate_points(G32, 1), repeat=2):
        by_star = star(X, x, y) == X.base
        by_dist = dist(x, y) == norm(X, x) | norm(X, y)
        assert by_star == by_dist == is_orthogonal(X, x, y)


def test_scale_and_blend():
    X = conv(G32, (1, 1), (2, 0))
    assert scale(X, b(0), pt(G32, (2, 0))) == pt(G32, (2, 1))
    assert blend(b(1), b(0, 1), b()) == b(1)


def test_point_checks():
    X = PointedSpace.ambient(G32, 2)
    with pytest.raises(DimensionError):
        X.check_point(pt(G32, (1, 1)))
    with pytest.raises(DimensionError):
        dist(pt(G32, (1, 1)), pt(G32, (1, 1), (0, 0)))
    assert PointedSpace.empty(G32, 1).is_empty
    assert len(PointedSpace.ambient(G32, 2).generators) == 3**2 - 1
