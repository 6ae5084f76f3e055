"""Congruences on the additive monoid of natural numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .partition import InvalidInput

INF = math.inf


def divides(a, b) -> bool:
    """a | b, with every value dividing INF and INF dividing only INF."""
    if b == INF:
        return True
    if a == INF:
        return False
    return b % a == 0


@dataclass(frozen=True)
class NatCong:
    """Trivial when ``m`` is None, otherwise the congruence (m, m+d)^#."""

    m: int | None = None
    d: int | None = None

    def __post_init__(self):
        if (self.m is None) != (self.d is None):
            raise InvalidInput("min and per must both be set or both be absent")
        if self.m is not None and (self.m < 0 or self.d < 1):
            raise InvalidInput("need min >= 0 and per >= 1")

    @classmethod
    def trivial(cls) -> "NatCong":
        return cls()

    @classmethod
    def cyclic(cls, m: int, d: int) -> "NatCong":
        return cls(m, d)

    @classmethod
    def universal(cls) -> "NatCong":
        return cls(0, 1)

    @property
    def is_trivial(self) -> bool:
        return self.m is None

    @property
    def min(self):
        return INF if self.m is None else self.m

    @property
    def per(self):
        return INF if self.d is None else self.d

    def contains(self, i: int, j: int) -> bool:
        if i == j:
            return True
        if self.m is None:
            return False
        return i >= self.m and j >= self.m and (i - j) % self.d == 0

    def __repr__(self):
        return "Trivial" if self.m is None else f"Cyclic({self.m},{self.d})"


def contains(theta: NatCong, i: int, j: int) -> bool:
    return theta.contains(i, j)


def leq(t1: NatCong, t2: NatCong) -> bool:
    """t1 is contained in t2."""
    return t1.min >= t2.min and divides(t2.per, t1.per)
