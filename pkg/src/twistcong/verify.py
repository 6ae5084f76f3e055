"""Cross-checks of the fC-matrix classification against the brute-force oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .fcmatrix import cg_fc_member, enumerate_fc, includes_fc, validate_fc
from .lattice import build_lattice, is_partial_order
from .oracle import all_congruences, build_monoid, classify, is_compatible, relation_from_member
from .symbols import D, R
from .twisted import ZERO


@dataclass
class Report:
    n: int
    d: int
    level: str
    matrices: int = 0
    congruences: int | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def cg_relations(n: int, d: int):
    """(monoid, matrices, class map of cg(M) for each matrix)."""
    m = build_monoid(n, d)
    mats = enumerate_fc(n, d)
    rels = [relation_from_member(m, lambda x, y, M=M: cg_fc_member(M, x, y)) for M in mats]
    return m, mats, rels


def verify(n: int, d: int, level: str = "quick") -> Report:
    rep = Report(n, d, level)
    if level == "quick":
        L = build_lattice(n, d)
        rep.matrices = len(L.nodes)
        bad = [k for k, M in enumerate(L.nodes) if validate_fc(M) is not None]
        if bad:
            rep.problems.append(f"{len(bad)} enumerated matrices fail validation")
        if len(set(L.nodes)) != len(L.nodes):
            rep.problems.append("duplicate matrices")
        if not is_partial_order(L.leq):
            rep.problems.append("inclusion is not a partial order")
        return rep
    if level != "exhaustive":
        raise ValueError(f"unknown level {level!r}")
    m, mats, rels = cg_relations(n, d)
    rep.matrices = len(mats)
    for M, rel in zip(mats, rels):
        if not is_compatible(m, rel):
            rep.problems.append(f"cg not compatible: {M.tokens()}")
    oracle = all_congruences(m)
    rep.congruences = len(oracle)
    if set(rels) != set(oracle) or len(set(rels)) != len(rels):
        rep.problems.append(f"{len(set(rels))} distinct cg relations vs {len(oracle)} oracle congruences")
    for M, rel in zip(mats, rels):
        if classify(m, rel) != M:
            rep.problems.append(f"classify does not invert cg at {M.tokens()}")
    ref = np.array([[a.refines(b) for b in rels] for a in rels])
    inc = np.array([[includes_fc(A, B) for B in mats] for A in mats])
    if (ref != inc).any():
        rep.problems.append(f"includes_fc disagrees with refinement on {int((ref != inc).sum())} pairs")
    return rep


def _fc_bucket(M, x):
    if x is ZERO:
        return ("R",)
    p, q = x.p, x.p.rank
    s = M.rows[q][x.i]
    if s == R:
        return ("R",)
    if s.is_N:
        return (s, x.i, p.dom, p.ker, p.codom, p.coker)
    if s == D:
        return (s, x.i, p)
    return (s, p.hat)


@dataclass
class SoundnessReport:
    matrices: int = 0
    probes: int = 0
    distinct: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def sampled_soundness(n: int, d: int, probes_per_matrix: int, seed: int = 0) -> SoundnessReport:
    """Reflexivity and symmetry in full, transitivity and compatibility by sampling.

    Triples are drawn from the same bucket (pairs in different buckets are never
    related); each related pair is multiplied on both sides by a random element.
    """
    rng = random.Random(seed)
    m = build_monoid(n, d)
    els, t = m.elements, m.table
    rep = SoundnessReport()
    for M in enumerate_fc(n, d):
        rep.matrices += 1
        rel = lambda a, b, M=M: cg_fc_member(M, els[a], els[b])
        buckets: dict = {}
        for k, x in enumerate(els):
            buckets.setdefault(_fc_bucket(M, x), []).append(k)
        for k in range(m.size):
            if not rel(k, k):
                rep.failures.append(("reflexive", M.tokens(), k))
        groups = [g for g in buckets.values() if len(g) > 1] or list(buckets.values())
        done = 0
        while done < probes_per_matrix:
            g = rng.choice(groups)
            a, b = rng.sample(g, 2) if len(g) > 1 else (g[0], g[0])
            c = rng.choice(g)
            ab = rel(a, b)
            if ab != rel(b, a):
                rep.failures.append(("symmetric", M.tokens(), a, b))
            if ab and rel(b, c) and not rel(a, c):
                rep.failures.append(("transitive", M.tokens(), a, b, c))
            if ab:
                s = rng.randrange(m.size)
                if not rel(t[a, s], t[b, s]) or not rel(t[s, a], t[s, b]):
                    rep.failures.append(("compatible", M.tokens(), a, b, s))
                done += 1
                rep.probes += 1
                rep.distinct += a != b
    return rep
