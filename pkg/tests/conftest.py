import random

import pytest

from boolmetric.boolean_ring import BoolElem
from boolmetric.cfg_ring import RingSpec
from boolmetric.metric import Point, PointedSpace

Z3 = RingSpec(3, 1)
G32 = RingSpec(3, 2)


def pt(spec, *coords):
    """pt(Z3, 2) or pt(G32, (1, 2)) or pt(Z3, 1, 2) for n = 2."""
    return Point.of(spec, *[[c] if isinstance(c, int) else list(c) for c in coords])


def b(*atoms, omega=2):
    return BoolElem.from_atoms(atoms, omega)


def conv(spec, base, *gens):
    """A one-variable space: conv(Z3, 0, 1, 2) or conv(G32, (0, 0), (1, 0))."""
    return PointedSpace.conv(pt(spec, base), [pt(spec, g) for g in gens])


@pytest.fixture
def rng():
    return random.Random(1234)
