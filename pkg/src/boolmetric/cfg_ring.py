"""The ring A = GF(p)^Omega with componentwise arithmetic.

Its idempotents B(A) are the 0/1 tuples, identified with :class:`BoolElem`
over the same atom set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .boolean_ring import MAX_OMEGA, BoolElem
from .errors import DimensionError, NotAUnitError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True, slots=True)
class RingSpec:
    p: int
    omega: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if not 1 <= self.omega <= MAX_OMEGA:
            raise ValueError(f"omega must be in 1..{MAX_OMEGA}, got {self.omega}")

    @property
    def size(self) -> int:
        return self.p**self.omega

    def zero(self) -> RingElem:
        return RingElem((0,) * self.omega, self)

    def one(self) -> RingElem:
        return RingElem((1,) * self.omega, self)

    def const(self, c: int) -> RingElem:
        return RingElem((c % self.p,) * self.omega, self)

    def elem(self, components: Sequence[int]) -> RingElem:
        if len(components) != self.omega:
            raise DimensionError(f"expected {self.omega} components, got {len(components)}")
        return RingElem(tuple(int(c) % self.p for c in components), self)

    def to_dict(self) -> dict:
        return {"p": self.p, "omega": self.omega}

    @classmethod
    def from_dict(cls, d: dict) -> RingSpec:
        return cls(int(d["p"]), int(d["omega"]))


@dataclass(frozen=True, slots=True)
class RingElem:
    components: tuple[int, ...]
    spec: RingSpec

    def _check(self, other: RingElem) -> None:
        if not isinstance(other, RingElem):
            raise TypeError(f"expected RingElem, got {type(other).__name__}")
        if other.spec != self.spec:
            raise DimensionError(f"ring mismatch: {self.spec} vs {other.spec}")

    def __add__(self, other: RingElem) -> RingElem:
        self._check(other)
        p = self.spec.p
        return RingElem(tuple((a + b) % p for a, b in zip(self.components, other.components)), self.spec)

    def __sub__(self, other: RingElem) -> RingElem:
        self._check(other)
        p = self.spec.p
        return RingElem(tuple((a - b) % p for a, b in zip(self.components, other.components)), self.spec)

    def __mul__(self, other: RingElem) -> RingElem:
        self._check(other)
        p = self.spec.p
        return RingElem(tuple(a * b % p for a, b in zip(self.components, other.components)), self.spec)

    def __neg__(self) -> RingElem:
        p = self.spec.p
        return RingElem(tuple(-a % p for a in self.components), self.spec)

    def __pow__(self, k: int) -> RingElem:
        p = self.spec.p
        return RingElem(tuple(pow(a, k, p) for a in self.components), self.spec)

    def is_zero(self) -> bool:
        return not any(self.components)

    def to_list(self) -> list[int]:
        return list(self.components)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self.components)) + ")"


def ring_arith(x: RingElem, y: RingElem | None, op: str) -> RingElem:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    raise ValueError(f"unknown ring operation {op!r}")


def idempotent_of(x: RingElem) -> BoolElem:
    """The idempotent e(x) generating xA: atoms where x is nonzero."""
    mask = 0
    for i, c in enumerate(x.components):
        if c:
            mask |= 1 << i
    return BoolElem(mask, x.spec.omega)


def embed(a: BoolElem, spec: RingSpec) -> RingElem:
    """View an idempotent of B(A) as a 0/1 element of A."""
    if a.omega != spec.omega:
        raise DimensionError(f"atom counts differ: {a.omega} vs {spec.omega}")
    return RingElem(tuple((a.mask >> i) & 1 for i in range(spec.omega)), spec)


def scalar_act(a: BoolElem, x: RingElem) -> RingElem:
    """Module action of B(A) on A: keep the components of x on the atoms of a."""
    if a.omega != x.spec.omega:
        raise DimensionError(f"atom counts differ: {a.omega} vs {x.spec.omega}")
    m = a.mask
    return RingElem(tuple(c if m >> i & 1 else 0 for i, c in enumerate(x.components)), x.spec)


def unit_inverse(x: RingElem) -> RingElem:
    p = x.spec.p
    if not all(x.components):
        raise NotAUnitError(f"{x!r} has a zero component")
    return RingElem(tuple(pow(c, -1, p) for c in x.components), x.spec)


def canonical_generators(spec: RingSpec) -> list[RingElem]:
    """Nonzero constant tuples; with 0 they generate A as a convex closure."""
    return [spec.const(c) for c in range(1, spec.p)]


def all_ring_elements(spec: RingSpec) -> list[RingElem]:
    """Every element of A, lexicographic in the components."""
    return [RingElem(c, spec) for c in product(range(spec.p), repeat=spec.omega)]
