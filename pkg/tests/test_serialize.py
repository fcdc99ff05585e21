import json
import random

import pytest

from boolmetric import oracle
from boolmetric.boolean_ring import BoolElem
from boolmetric.errors import DimensionError
from boolmetric.metric import PointedSpace
from boolmetric.serialize import (
    ParseError,
    bool_from_json,
    invariants_from_json,
    loads,
    object_from_json,
    poly_from_json,
    refmap_from_json,
    spec_from_json,
    to_json,
)
from boolmetric.span import alpha_invariants

from conftest import G32, Z3, pt


def again(obj, spec=G32, n=1):
    return object_from_json(json.loads(json.dumps(to_json(obj))), spec, n)


def test_round_trips():
    rng = random.Random(3)
    A = PointedSpace.ambient(G32, 2)
    for _ in range(20):
        x = oracle.random_point(rng, G32, 2)
        assert again(x) == x
        X = oracle.random_space(rng, G32, 2)
        assert again(X) == X
        q = oracle.random_polynomial(rng, G32, 2)
        assert again(q) == q
        f = oracle.random_refmap(rng, A, A)
        assert again(f) == f
        inv = alpha_invariants(X)
        assert invariants_from_json(to_json(inv), 2) == inv
    E = PointedSpace.empty(G32, 2)
    assert again(E) == E
    assert invariants_from_json(to_json(alpha_invariants(E)), 2).empty
    assert spec_from_json(to_json(G32)) == G32
    assert bool_from_json(to_json(BoolElem(2, 2)), 2) == BoolElem(2, 2)


def test_poly_coefficients():
    q = poly_from_json({"n": 1, "monomials": [{"exp": [2], "coeff": 1}, {"exp": [1], "coeff": [-1]}]}, Z3)
    assert [q(x).components[0] for x in oracle.enumerate_points(Z3, 1)] == [0, 0, 2]


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        loads('{"ring": {"p": 3,\n "omega": }}')
    assert err.value.line == 2
    with pytest.raises(ParseError, match="residues"):
        object_from_json([[5]], Z3)
    with pytest.raises(DimensionError):
        object_from_json([[1, 2]], Z3)
    with pytest.raises(DimensionError):
        object_from_json({"base": [[0]], "generators": [[[1], [1]]]}, Z3)
    with pytest.raises(ParseError):
        spec_from_json({"p": 4, "omega": 1})
    with pytest.raises(ParseError):
        object_from_json(7, Z3)


def test_refmap_needs_referential():
    with pytest.raises(ParseError, match="referential"):
        refmap_from_json({"base_image": [[0, 0]], "pairs": [[[[1, 1]], [[0, 0]]], [[[1, 2]], [[0, 0]]]]}, G32)
