"""C-matrix symbols, the order on them, and the local adjacency table."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .partition import InvalidInput, NormalSubgroup, nontrivial_normal_subgroups

KINDS = ("D", "muU", "muD", "mu", "lam", "rho", "R", "N")
PRETTY = {"D": "Δ", "muU": "μ↑", "muD": "μ↓", "mu": "μ", "lam": "λ", "rho": "ρ", "R": "R"}
_LETTER = {"klein": "K", "alternating": "A", "symmetric": "S"}
_KIND_OF = {v: k for k, v in _LETTER.items()}


@dataclass(frozen=True)
class Symbol:
    kind: str
    group: NormalSubgroup | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown symbol kind {self.kind!r}")
        if (self.kind == "N") != (self.group is not None):
            raise InvalidInput("exactly the N-symbols carry a subgroup")
        if self.group is not None and (self.group.q < 2 or self.group.is_trivial):
            raise InvalidInput("N-symbols need a nontrivial subgroup of S_q, q >= 2")

    @property
    def is_N(self) -> bool:
        return self.kind == "N"

    @property
    def q(self) -> int | None:
        return self.group.q if self.group else None

    @property
    def token(self) -> str:
        if not self.is_N:
            return self.kind
        g = self.group
        letter = _LETTER[g.kind]
        return f"N:{letter}{g.q}" if g.q <= 4 else f"N:{letter}q@{g.q}"

    def __str__(self):
        if self.is_N:
            return f"{_LETTER[self.group.kind]}{self.group.q}"
        return PRETTY[self.kind]

    def __repr__(self):
        return self.token


D = Symbol("D")
MUU = Symbol("muU")
MUD = Symbol("muD")
MU = Symbol("mu")
LAM = Symbol("lam")
RHO = Symbol("rho")
R = Symbol("R")


def N(kind: str, q: int) -> Symbol:
    return Symbol("N", NormalSubgroup(kind, q))


_TOKEN = re.compile(r"N:([KAS])(?:(\d+)|q@(\d+))$")


def parse_token(tok: str) -> Symbol:
    if tok in PRETTY:
        return Symbol(tok)
    m = _TOKEN.match(tok)
    if not m:
        raise InvalidInput(f"bad symbol token {tok!r}")
    q = int(m.group(2) or m.group(3))
    return N(_KIND_OF[m.group(1)], q)


def n_symbols(q: int) -> list[Symbol]:
    return [Symbol("N", g) for g in nontrivial_normal_subgroups(q)]


def alphabet(n: int) -> list[Symbol]:
    out = [D, MUU, MUD, MU, LAM, RHO, R]
    for q in range(2, n + 1):
        out.extend(n_symbols(q))
    return out


def leqC(s: Symbol, t: Symbol) -> bool:
    if s == t or s == D:
        return True
    if t == D or s == R:
        return False
    if s.kind in ("muU", "muD"):
        return t.kind in ("mu", "lam", "rho", "R")
    if s == MU:
        return t.kind in ("lam", "rho", "R")
    if s.kind in ("lam", "rho"):
        return t == R
    # s is an N-symbol
    return t == R or (t.is_N and t.q == s.q and s.group.level <= t.group.level)


class _AnySymbol:
    def __contains__(self, s) -> bool:
        return True

    def __repr__(self):
        return "any"


ANY = _AnySymbol()
_MIXED = frozenset({MU, RHO, LAM, R})


def allowed_below(s: Symbol):
    if s == D:
        return ANY
    if s.kind in ("muU", "muD", "mu") or s.is_N:
        return _MIXED
    return frozenset({s})


def allowed_right(s: Symbol):
    if s == D:
        return ANY
    if s.kind in ("muU", "muD", "mu"):
        return _MIXED
    if s.is_N:
        return frozenset([t for t in n_symbols(s.q) if leqC(s, t)] + [R])
    return frozenset({s})
