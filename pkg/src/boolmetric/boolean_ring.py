"""The finite Boolean ring 2^Omega.

Elements are bitmasks over the atom set ``{0, ..., omega - 1}``: bit ``i``
is set iff atom ``i`` belongs to the element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import DimensionError

MAX_OMEGA = 16


@dataclass(frozen=True, slots=True)
class BoolElem:
    mask: int
    omega: int

    def __post_init__(self):
        if self.omega < 0 or self.omega > MAX_OMEGA:
            raise DimensionError(f"atom count {self.omega} outside 0..{MAX_OMEGA}")
        if self.mask < 0 or self.mask >> self.omega:
            raise DimensionError(f"mask {self.mask:#x} has atoms beyond {self.omega}")

    @classmethod
    def zero(cls, omega: int) -> BoolElem:
        return cls(0, omega)

    @classmethod
    def one(cls, omega: int) -> BoolElem:
        return cls((1 << omega) - 1, omega)

    @classmethod
    def from_atoms(cls, atoms: Iterable[int], omega: int) -> BoolElem:
        mask = 0
        for a in atoms:
            if not 0 <= a < omega:
                raise DimensionError(f"atom {a} outside 0..{omega - 1}")
            mask |= 1 << a
        return cls(mask, omega)

    @classmethod
    def from_list(cls, bits: Sequence[int]) -> BoolElem:
        """Parse the ``[1, 0, ...]`` wire form (index i = atom i)."""
        mask = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} must be 0 or 1, got {b!r}")
            mask |= b << i
        return cls(mask, len(bits))

    def to_list(self) -> list[int]:
        return [(self.mask >> i) & 1 for i in range(self.omega)]

    @property
    def atoms(self) -> frozenset[int]:
        return frozenset(i for i in range(self.omega) if self.mask >> i & 1)

    def _check(self, other: BoolElem) -> None:
        if not isinstance(other, BoolElem):
            raise TypeError(f"expected BoolElem, got {type(other).__name__}")
        if other.omega != self.omega:
            raise DimensionError(f"atom counts differ: {self.omega} vs {other.omega}")

    def __add__(self, other: BoolElem) -> BoolElem:
        self._check(other)
        return BoolElem(self.mask ^ other.mask, self.omega)

    __sub__ = __add__

    def __mul__(self, other: BoolElem) -> BoolElem:
        self._check(other)
        return BoolElem(self.mask & other.mask, self.omega)

    def __or__(self, other: BoolElem) -> BoolElem:
        self._check(other)
        return BoolElem(self.mask | other.mask, self.omega)

    def __invert__(self) -> BoolElem:
        return BoolElem(~self.mask & ((1 << self.omega) - 1), self.omega)

    def __le__(self, other: BoolElem) -> bool:
        self._check(other)
        return self.mask & other.mask == self.mask

    def __ge__(self, other: BoolElem) -> bool:
        return other <= self

    def __lt__(self, other: BoolElem) -> bool:
        return self <= other and self != other

    def __gt__(self, other: BoolElem) -> bool:
        return other < self

    def __bool__(self) -> bool:
        return self.mask != 0

    def is_one(self) -> bool:
        return self.mask == (1 << self.omega) - 1

    def __repr__(self) -> str:
        return "B" + "".join(map(str, self.to_list()))


def bool_arith(a: BoolElem, b: BoolElem, op: str):
    """Dispatch ``add``, ``mul``, ``join`` or ``leq`` by name."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "join":
        return a | b
    if op == "leq":
        return a <= b
    raise ValueError(f"unknown Boolean operation {op!r}")


def bool_complement(a: BoolElem) -> BoolElem:
    return ~a


def join_all(elems: Iterable[BoolElem], omega: int) -> BoolElem:
    return reduce(lambda x, y: x | y, elems, BoolElem.zero(omega))


def meet_all(elems: Iterable[BoolElem], omega: int) -> BoolElem:
    return reduce(lambda x, y: x * y, elems, BoolElem.one(omega))


def is_partition(parts: Sequence[BoolElem], require_complete: bool = True, omega: int | None = None) -> bool:
    """True iff the parts are pairwise disjoint (and join to 1 when required).

    ``omega`` is only consulted for an empty list, which is complete only
    over the empty atom set.
    """
    if not parts:
        return not require_complete or omega == 0
    seen = 0
    for part in parts:
        parts[0]._check(part)
        if seen & part.mask:
            return False
        seen |= part.mask
    return not require_complete or seen == (1 << parts[0].omega) - 1


def ideal_generator(gens: Iterable[BoolElem], omega: int) -> BoolElem:
    """Generator of the ideal ``(g_1, ..., g_r)``; in a Boolean ring it is the join."""
    return join_all(gens, omega)


def all_elements(omega: int) -> list[BoolElem]:
    return [BoolElem(m, omega) for m in range(1 << omega)]
