"""Twisted partition monoids Ptw(n) and their finite quotients Ptw(n,d)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .partition import InvalidInput, Partition, multiply


@dataclass(frozen=True)
class Pair:
    i: int
    p: Partition

    def __post_init__(self):
        if self.i < 0:
            raise InvalidInput("float count must be nonnegative")

    @property
    def n(self) -> int:
        return self.p.n

    @property
    def rank(self) -> int:
        return self.p.rank

    def __repr__(self):
        return f"({self.i}, {self.p.to_signed()})"


class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()
TwistedElement = Union[Pair, _Zero]


class DCoord(NamedTuple):
    q: int
    i: int


def mul_inf(a: TwistedElement, b: TwistedElement) -> Pair:
    if a is ZERO or b is ZERO:
        raise InvalidInput("zero is not an element of the infinite monoid")
    prod, floats = multiply(a.p, b.p)
    return Pair(a.i + b.i + floats, prod)


def mul_d(a: TwistedElement, b: TwistedElement, d: int) -> TwistedElement:
    if a is ZERO or b is ZERO:
        return ZERO
    prod, floats = multiply(a.p, b.p)
    k = a.i + b.i + floats
    return Pair(k, prod) if k <= d else ZERO


def dcoord(a: Pair) -> DCoord:
    if a is ZERO:
        raise InvalidInput("zero has no D-class coordinate")
    return DCoord(a.p.rank, a.i)


def ideal_member(a: Pair, corners) -> bool:
    q, i = dcoord(a)
    return any(q <= qt and i >= it for qt, it in corners)


def d_leq(x: DCoord, y: DCoord) -> bool:
    """The D-class order: D_x lies in the ideal generated by D_y."""
    return x[0] <= y[0] and x[1] >= y[1]
