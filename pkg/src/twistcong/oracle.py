"""Brute-force congruence engine for the finite monoids Ptw(n,d)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .fcmatrix import FCMatrix
from .partition import (
    InvalidInput,
    Partition,
    enumerate_partitions,
    greens,
    multiply,
    nontrivial_normal_subgroups,
    pd,
    subgroup_contains,
)
from .symbols import D, LAM, MU, MUD, MUU, R, RHO, Symbol
from .twisted import ZERO, Pair

MAX_MONOID_SIZE = 5000


def bell_number(k: int) -> int:
    """Bell number by the triangle recurrence."""
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def workers() -> int:
    return max(1, int(os.environ.get("TWISTCONG_WORKERS", "1")))


@lru_cache(maxsize=None)
def partition_table(n: int):
    """Partitions of degree n with their product and float tables."""
    parts = enumerate_partitions(n)
    index = {p: k for k, p in enumerate(parts)}
    size = len(parts)
    prod = np.empty((size, size), dtype=np.int32)
    floats = np.empty((size, size), dtype=np.int32)
    for a, p in enumerate(parts):
        for b, s in enumerate(parts):
            ab, f = multiply(p, s)
            prod[a, b] = index[ab]
            floats[a, b] = f
    prod.flags.writeable = False
    floats.flags.writeable = False
    return tuple(parts), index, prod, floats


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    n: int
    d: int
    elements: tuple
    table: np.ndarray = field(repr=False)
    identity: int

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def zero(self) -> int:
        return self.size - 1

    def index(self, x) -> int:
        if x is ZERO:
            return self.zero
        return x.i * self.bell + self.part_index[x.p]

    @property
    def bell(self) -> int:
        return (self.size - 1) // (self.d + 1)

    @property
    def part_index(self) -> dict:
        return partition_table(self.n)[1]


def build_monoid(n: int, d: int) -> FiniteMonoid:
    """Ptw(n,d): columns 0..d of Ptw(n), then the zero."""
    if n < 1 or d < 0:
        raise InvalidInput("need n >= 1 and d >= 0")
    b = bell_number(2 * n)
    size = (d + 1) * b + 1
    if size > MAX_MONOID_SIZE:
        raise InvalidInput(f"Ptw({n},{d}) has {size} elements, over the budget")
    parts, index, prod, floats = partition_table(n)
    elements = tuple(Pair(i, p) for i in range(d + 1) for p in parts) + (ZERO,)
    zero = size - 1
    table = np.full((size, size), zero, dtype=np.int32)
    cols = np.arange(d + 1)
    for i in cols:
        for j in cols:
            k = i + j + floats
            block = np.where(k <= d, k * b + prod, zero)
            table[i * b:(i + 1) * b, j * b:(j + 1) * b] = block
    table.flags.writeable = False
    return FiniteMonoid(n, d, elements, table, index[Partition.identity(n)])


def partition_monoid(n: int) -> FiniteMonoid:
    """P_n itself as a FiniteMonoid (no zero), used for its congruence lattice."""
    parts, index, prod, _ = partition_table(n)
    return FiniteMonoid(n, -1, parts, prod, index[Partition.identity(n)])


@dataclass(frozen=True)
class CongRelation:
    class_id: tuple[int, ...]

    @classmethod
    def from_roots(cls, roots) -> "CongRelation":
        least: dict = {}
        for k, r in enumerate(roots):
            least.setdefault(r, k)
        return cls(tuple(least[r] for r in roots))

    @classmethod
    def from_classes(cls, classes, size: int) -> "CongRelation":
        roots = [None] * size
        for c in classes:
            for k in c:
                roots[k] = min(c)
        if any(r is None for r in roots):
            raise InvalidInput("classes do not cover all elements")
        return cls(tuple(roots))

    def classes(self) -> list[list[int]]:
        groups: dict = {}
        for k, c in enumerate(self.class_id):
            groups.setdefault(c, []).append(k)
        return [groups[c] for c in sorted(groups)]

    def related(self, a: int, b: int) -> bool:
        return self.class_id[a] == self.class_id[b]

    def refines(self, other: "CongRelation") -> bool:
        o = other.class_id
        return all(o[k] == o[c] for k, c in enumerate(self.class_id))

    @property
    def num_classes(self) -> int:
        return len(set(self.class_id))


class _UF:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            rx, ry = ry, rx
        self.parent[rx] = ry
        return True

    def relation(self) -> CongRelation:
        return CongRelation.from_roots([self.find(x) for x in range(len(self.parent))])


def _close(table: np.ndarray, uf: _UF, pairs) -> None:
    work = list(pairs)
    while work:
        x, y = work.pop()
        if uf.union(x, y):
            work.extend(zip(table[x].tolist(), table[y].tolist()))
            work.extend(zip(table[:, x].tolist(), table[:, y].tolist()))


def principal_congruence(m: FiniteMonoid, a: int, b: int) -> CongRelation:
    uf = _UF(m.size)
    _close(m.table, uf, [(a, b)])
    return uf.relation()


def congruence_generated(m: FiniteMonoid, pairs) -> CongRelation:
    uf = _UF(m.size)
    _close(m.table, uf, pairs)
    return uf.relation()


def join(m: FiniteMonoid, s1: CongRelation, s2: CongRelation) -> CongRelation:
    uf = _UF(m.size)
    for cid in (s1.class_id, s2.class_id):
        for k, c in enumerate(cid):
            uf.union(k, c)
    return uf.relation()


def meet(s1: CongRelation, s2: CongRelation) -> CongRelation:
    return CongRelation.from_roots(list(zip(s1.class_id, s2.class_id)))


def _principal_row(args):
    m, a = args
    return [principal_congruence(m, a, b) for b in range(a + 1, m.size)]


def all_congruences(m: FiniteMonoid) -> list[CongRelation]:
    """Every congruence of m: principal congruences closed under joins."""
    rows = [(m, a) for a in range(m.size)]
    w = workers()
    if w > 1:
        with ProcessPoolExecutor(w) as ex:
            chunks = list(ex.map(_principal_row, rows))
    else:
        chunks = [_principal_row(r) for r in rows]
    bottom = CongRelation(tuple(range(m.size)))
    gens = sorted({c for chunk in chunks for c in chunk} - {bottom}, key=lambda c: c.class_id)
    pool = {bottom, *gens}
    frontier = list(pool)
    while frontier:
        fresh = []
        for c in frontier:
            for g in gens:
                j = join(m, c, g)
                if j not in pool:
                    pool.add(j)
                    fresh.append(j)
        frontier = fresh
    return sorted(pool, key=lambda c: c.class_id)


def is_compatible(m: FiniteMonoid, sigma: CongRelation) -> bool:
    cid = np.asarray(sigma.class_id)
    t = m.table
    return bool((cid[t] == cid[t[cid, :]]).all() and (cid[t] == cid[t[:, cid]]).all())


def relation_matrix(elements, member: Callable) -> np.ndarray:
    size = len(elements)
    rel = np.zeros((size, size), dtype=bool)
    for a in range(size):
        for b in range(size):
            rel[a, b] = member(elements[a], elements[b])
    return rel


def is_equivalence(rel: np.ndarray) -> bool:
    if not rel.diagonal().all() or not (rel == rel.T).all():
        return False
    r = rel.astype(np.int32)
    return bool(((r @ r > 0) <= rel).all())


def relation_from_member(m: FiniteMonoid, member: Callable) -> CongRelation:
    """Class map of the relation given by ``member``, which must be an equivalence."""
    rel = relation_matrix(m.elements, member)
    if not is_equivalence(rel):
        raise InvalidInput("the relation is not an equivalence")
    return CongRelation(tuple(int(np.argmax(row)) for row in rel))


def _restriction_matches(pairs, cid, rel) -> bool:
    return all((cid[a] == cid[b]) == rel(x, y) for a, x, b, y in pairs)


def classify(m: FiniteMonoid, sigma: CongRelation) -> FCMatrix:
    """The fC-matrix whose congruence is sigma."""
    if len(sigma.class_id) != m.size or not is_compatible(m, sigma):
        raise InvalidInput("not a congruence on this monoid")
    n, d, b = m.n, m.d, m.bell
    cid = sigma.class_id
    zero_class = cid[m.zero]
    parts = partition_table(n)[0]
    by_rank = {q: [k for k, p in enumerate(parts) if p.rank == q] for q in range(n + 1)}

    def classes_of(q, i):
        return {cid[i * b + k] for k in by_rank[q]}

    def cross(q, i):
        other = 1 - q
        mine = classes_of(q, i)
        return any(mine & classes_of(other, j) for j in range(d + 1))

    rows = []
    for q in range(n + 1):
        ks = by_rank[q]
        row = []
        for i in range(d + 1):
            idx = [i * b + k for k in ks]
            if cid[idx[0]] == zero_class:
                row.append(R)
                continue
            pairs = [(i * b + a, parts[a], i * b + c, parts[c]) for a in ks for c in ks]
            row.append(_classify_entry(q, n, pairs, cid, lambda: cross(q, i)))
        rows.append(tuple(row))
    return FCMatrix(n, d, tuple(rows))


def _classify_entry(q, n, pairs, cid, cross) -> Symbol:
    delta = lambda x, y: x == y
    if q >= 2:
        if _restriction_matches(pairs, cid, delta):
            return D
        for N in nontrivial_normal_subgroups(q):
            nu = lambda x, y, N=N: greens(x, y, "H") and subgroup_contains(N, pd(x, y))
            if _restriction_matches(pairs, cid, nu):
                return Symbol("N", N)
        raise InvalidInput(f"restriction to D_{q} matches no table entry")
    if n == 1 or _restriction_matches(pairs, cid, delta):
        return MU if cross() else D
    hat_eq = lambda x, y: x.hat == y.hat
    options = [
        (MUU, lambda x, y: hat_eq(x, y) and greens(x, y, "R")),
        (MUD, lambda x, y: hat_eq(x, y) and greens(x, y, "L")),
        (MU, hat_eq),
        (LAM, lambda x, y: greens(x.hat, y.hat, "L")),
        (RHO, lambda x, y: greens(x.hat, y.hat, "R")),
    ]
    for sym, rel in options:
        if (q == 1 or sym in (LAM, RHO)) and _restriction_matches(pairs, cid, rel):
            if sym in (LAM, RHO):
                raise InvalidInput("λ/ρ restriction cannot occur in a finite quotient")
            return sym
    raise InvalidInput(f"restriction to D_{q} matches no table entry")


def project_to_Pn(m: FiniteMonoid, sigma: CongRelation, strict: bool = False) -> CongRelation:
    """The projection onto P_n, as a class map over enumerate_partitions(n).

    On a finite quotient the raw projection need not be a congruence (classes
    are glued through the zero), so by default the congruence of P_n it
    generates is returned; ``strict`` raises instead.
    """
    b = m.bell
    prod = partition_table(m.n)[2]
    pairs = []
    groups: dict = {}
    for k in range(m.size - 1):
        groups.setdefault(sigma.class_id[k], set()).add(k % b)
    for g in groups.values():
        g = sorted(g)
        pairs += [(g[0], x) for x in g[1:]]
    uf = _UF(b)
    _close(prod, uf, pairs)
    out = uf.relation()
    if strict:
        raw = np.eye(b, dtype=bool)
        for g in groups.values():
            g = sorted(g)
            raw[np.ix_(g, g)] = True
        closed = np.equal.outer(np.asarray(out.class_id), np.asarray(out.class_id))
        if not (raw == closed).all():
            raise InvalidInput("projection is not a congruence")
    return out


def pn_relation(n: int, member: Callable) -> CongRelation:
    parts = partition_table(n)[0]
    rel = relation_matrix(parts, member)
    if not is_equivalence(rel):
        raise InvalidInput("the relation is not an equivalence")
    return CongRelation(tuple(int(np.argmax(row)) for row in rel))
