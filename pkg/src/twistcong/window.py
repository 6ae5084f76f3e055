"""Windowed soundness checks for C-pair congruences on Ptw(n).

Relations are evaluated on the window of elements (i, a) with i <= K.  Every
clause of cg/cgx needs equal symbols and one of: equal partitions, equal hats,
H-related partitions, hats L- or R-related, or both entries R.  Elements are
bucketed by a key capturing this, so pairs from different buckets are never
related; that claim is itself spot-checked on random cross-bucket pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .cpair import CPair, member
from .natcong import INF
from .partition import Partition, enumerate_partitions, multiply
from .twisted import Pair


def window_K(P: CPair) -> int:
    """2 * (largest finite min or prefix length + largest finite period) + 2."""
    mins = [t.m for t in P.theta if not t.is_trivial] + [len(r.prefix) for r in P.rows]
    pers = [t.d for t in P.theta if not t.is_trivial]
    return 2 * (max(mins + [0]) + max(pers + [1])) + 2


def pn_generators(n: int) -> list[Partition]:
    """A generating set of P_n: a transposition, an n-cycle, a projection and a diapsis-like block."""
    ident = list(range(1, n + 1))
    gens = [Partition.identity(n)]
    if n >= 2:
        swap = ident[:]
        swap[0], swap[1] = 2, 1
        gens.append(Partition.from_permutation(swap))
        gens.append(Partition.from_permutation(ident[1:] + ident[:1]))
        gens.append(Partition(n, ((1, 2, n + 1, n + 2),) + tuple((v, n + v) for v in range(3, n + 1))))
    gens.append(Partition(n, ((1,), (n + 1,)) + tuple((v, n + v) for v in range(2, n + 1))))
    return gens


def float_free_closure(gens) -> set:
    """Partitions reachable from the identity by right multiplication by gens with no floats."""
    start = Partition.identity(gens[0].n)
    seen, todo = {start}, [start]
    while todo:
        x = todo.pop()
        for g in gens:
            y, f = multiply(x, g)
            if f == 0 and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def ptw_generators(n: int, full: bool = False) -> list[Pair]:
    """Generators of Ptw(n): (1, id) and (0, g); with ``full`` every (0, g) for g in P_n."""
    parts = enumerate_partitions(n) if full else pn_generators(n)
    return [Pair(1, Partition.identity(n))] + [Pair(0, g) for g in parts]


def bucket_key(P: CPair, exc: bool, a: Pair):
    p, q = a.p, a.p.rank
    s = P.entry(q, a.i)
    k = s.kind
    if k == "R":
        return ("R",)
    if q >= 2:
        return (s, p.dom, p.ker, p.codom, p.coker)
    if k == "D":
        return (s, p)
    if k == "lam":
        return (s, p.coker)
    if k == "rho":
        return (s, p.ker)
    return (s, p.hat)


def mul(a: Pair, b: Pair) -> Pair:
    prod, f = multiply(a.p, b.p)
    return Pair(a.i + b.i + f, prod)


@dataclass
class WindowReport:
    name: str
    K: int
    size: int
    evaluated: int = 0
    probes: int = 0
    failures: list = field(default_factory=list)
    class_id: np.ndarray | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def check_window(P: CPair, exc: bool, K: int, gens, rng: random.Random, name: str = "",
                 r_sample: int = 3000, cross_sample: int = 3000, pair_sample: int = 3000) -> WindowReport:
    parts = enumerate_partitions(P.n)
    elems = [Pair(i, p) for i in range(K + 1) for p in parts]
    size = len(elems)
    rep = WindowReport(name, K, size)
    rel = lambda x, y: member(P, x, y, exc)
    buckets: dict = {}
    keys = []
    for k, e in enumerate(elems):
        key = bucket_key(P, exc, e)
        keys.append(key)
        buckets.setdefault(key, []).append(k)

    rows, cols = [], []
    for key, idx in buckets.items():
        if key == ("R",):
            for _ in range(min(r_sample, len(idx) ** 2)):
                a, b = rng.choice(idx), rng.choice(idx)
                rep.evaluated += 1
                if not rel(elems[a], elems[b]):
                    rep.failures.append(("R entries unrelated", elems[a], elems[b]))
            arr = np.asarray(idx)
            rows.append(np.repeat(arr, len(arr)))
            cols.append(np.tile(arr, len(arr)))
            continue
        for a in idx:
            for b in idx:
                rep.evaluated += 1
                if rel(elems[a], elems[b]):
                    rows.append(np.array([a]))
                    cols.append(np.array([b]))
    r = np.concatenate(rows) if rows else np.zeros(0, int)
    c = np.concatenate(cols) if cols else np.zeros(0, int)
    graph = csr_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(size, size))
    graph.sum_duplicates()

    diag = graph.diagonal()
    if not diag.all():
        k = int(np.argmin(diag))
        rep.failures.append(("not reflexive", elems[k]))
    if (graph != graph.T).nnz:
        rep.failures.append(("not symmetric",))
    ncomp, labels = connected_components(graph, directed=False)
    comp_sizes = np.bincount(labels, minlength=ncomp)
    deg = np.asarray(graph.sum(axis=1)).ravel()
    bad = np.nonzero(deg != comp_sizes[labels])[0]
    if len(bad):
        rep.failures.append(("not transitive", elems[int(bad[0])]))
    first = np.full(ncomp, size)
    np.minimum.at(first, labels, np.arange(size))
    cid = first[labels]
    rep.class_id = cid

    for _ in range(cross_sample):
        a, b = rng.randrange(size), rng.randrange(size)
        if keys[a] != keys[b]:
            rep.evaluated += 1
            if rel(elems[a], elems[b]):
                rep.failures.append(("related across buckets", elems[a], elems[b]))

    related = [k for k in range(size) if cid[k] != k]
    for k in related:
        x, y = elems[k], elems[int(cid[k])]
        for g in gens:
            rep.probes += 2
            if not rel(mul(x, g), mul(y, g)) or not rel(mul(g, x), mul(g, y)):
                rep.failures.append(("not compatible", x, y, g))
    if related:
        for _ in range(pair_sample):
            k = rng.choice(related)
            peers = np.nonzero(cid == cid[k])[0]
            x, y = elems[k], elems[int(rng.choice(peers))]
            g = rng.choice(gens)
            rep.probes += 2
            if not rel(mul(x, g), mul(y, g)) or not rel(mul(g, x), mul(g, y)):
                rep.failures.append(("not compatible", x, y, g))
    return rep


def sampled_check(P: CPair, exc: bool, K: int, gens, rng: random.Random, probes: int = 4000,
                  name: str = "") -> WindowReport:
    """Randomized equivalence and compatibility probes for degrees too large to exhaust."""
    parts = enumerate_partitions(P.n)
    rep = WindowReport(name, K, (K + 1) * len(parts))
    rel = lambda x, y: member(P, x, y, exc)
    buckets: dict = {}
    for i in range(K + 1):
        for p in parts:
            e = Pair(i, p)
            buckets.setdefault(bucket_key(P, exc, e), []).append(e)
    groups = [b for b in buckets.values() if len(b) > 1]
    for _ in range(probes):
        grp = rng.choice(groups)
        x, y, z = rng.choice(grp), rng.choice(grp), rng.choice(grp)
        rep.evaluated += 3
        rxy, ryz = rel(x, y), rel(y, z)
        if rel(x, x) is False or rxy != rel(y, x):
            rep.failures.append(("reflexivity/symmetry", x, y))
        if rxy and ryz and not rel(x, z):
            rep.failures.append(("not transitive", x, y, z))
        if rxy:
            g = rng.choice(gens)
            rep.probes += 2
            if not rel(mul(x, g), mul(y, g)) or not rel(mul(g, x), mul(g, y)):
                rep.failures.append(("not compatible", x, y, g))
    return rep


def class_refines(c1: np.ndarray, c2: np.ndarray) -> bool:
    return bool((c2 == c2[c1]).all())


def separating_pair(c1: np.ndarray, c2: np.ndarray):
    """Indices (k, rep) related by c1 but not c2, or None."""
    bad = np.nonzero(c2 != c2[c1])[0]
    if len(bad) == 0:
        return None
    k = int(bad[0])
    return k, int(c1[k])


__all__ = ["INF", "window_K", "check_window", "sampled_check", "ptw_generators", "pn_generators",
           "float_free_closure", "class_refines", "separating_pair", "WindowReport"]
