import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolmetric.boolean_ring import (
    BoolElem,
    all_elements,
    bool_arith,
    bool_complement,
    ideal_generator,
    is_partition,
    join_all,
    meet_all,
)
from boolmetric.errors import DimensionError

from conftest import b

elems = st.integers(1, 6).flatmap(lambda w: st.tuples(*[st.integers(0, (1 << w) - 1)] * 3).map(lambda t: [BoolElem(m, w) for m in t]))


def test_arith_examples():
    assert bool_arith(b(0), b(1), "add") == b(0, 1)
    assert bool_arith(b(0), b(0, 1), "join") == b(0, 1)
    assert bool_arith(b(0), b(0, 1), "leq") is True
    assert bool_arith(b(0, 1), b(0), "add") == b(1)
    assert bool_arith(b(0, 1), b(0), "mul") == b(0)


def test_complement_examples():
    assert bool_complement(b(0)) == b(1)
    assert bool_complement(b()) == BoolElem.one(2)


@given(elems)
def test_ring_laws(t):
    x, y, z = t
    assert x * x == x
    assert x + x == BoolElem.zero(x.omega)
    assert x * (y + z) == x * y + x * z
    assert (x | y) == x + y + x * y
    assert ~~x == x
    assert (x <= y) == (x * y == x)


@given(elems)
def test_alpha2_identity(t):
    # (x+y)(y+z)(x+z) = 0 in every Boolean ring
    x, y, z = t
    assert ((x + y) * (y + z) * (x + z)).mask == 0


def test_partition():
    assert is_partition([b(0), b(1)])
    assert not is_partition([b(0), b(0, 1)])
    assert not is_partition([b(0)])
    assert is_partition([b(0)], require_complete=False)


def test_partition_needs_common_omega():
    with pytest.raises(DimensionError):
        is_partition([b(0), BoolElem(1, 3)])


def test_joins_and_wire_form():
    xs = [b(0), b(1), b()]
    assert join_all(xs, 2) == ideal_generator(xs, 2) == BoolElem.one(2)
    assert meet_all(xs, 2) == b()
    assert join_all([], 3) == BoolElem.zero(3)
    assert BoolElem.from_list([1, 0, 1]) == BoolElem.from_atoms([0, 2], 3)
    assert BoolElem.from_list([1, 0, 1]).to_list() == [1, 0, 1]
    assert len(all_elements(4)) == 16


def test_bad_masks():
    with pytest.raises(DimensionError):
        BoolElem(4, 2)
    with pytest.raises(DimensionError):
        BoolElem.from_atoms([2], 2)
    with pytest.raises(DimensionError):
        b(0) + BoolElem(1, 3)
