"""Congruence lattices of Ptw(n,d) from fC-matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .fcmatrix import FCMatrix, enumerate_fc, includes_fc, is_rees_fc
from .symbols import D, R


@dataclass(frozen=True, eq=False)
class Lattice:
    n: int
    d: int
    nodes: tuple[FCMatrix, ...]
    leq: np.ndarray

    @cached_property
    def hasse(self) -> list[tuple[int, int]]:
        return hasse_edges(self.leq)

    @cached_property
    def rees(self) -> list[int]:
        return [k for k, M in enumerate(self.nodes) if is_rees_fc(M)]

    @cached_property
    def index(self) -> dict:
        return {M: k for k, M in enumerate(self.nodes)}

    @property
    def bottom(self) -> int:
        return int(np.nonzero(self.leq.all(axis=1))[0][0])

    @property
    def top(self) -> int:
        return int(np.nonzero(self.leq.all(axis=0))[0][0])

    def filter_above(self, k: int) -> list[int]:
        return [int(j) for j in np.nonzero(self.leq[k])[0]]

    @cached_property
    def height(self) -> list[int]:
        """Length of the longest chain from the bottom to each node."""
        h = [0] * len(self.nodes)
        order = sorted(range(len(self.nodes)), key=lambda k: int(self.leq[:, k].sum()))
        for v in order:
            below = np.nonzero(self.leq[:, v])[0]
            h[v] = max((h[u] + 1 for u in below if u != v), default=0)
        return h


def inclusion_matrix(nodes) -> np.ndarray:
    size = len(nodes)
    leq = np.zeros((size, size), dtype=bool)
    for a, M1 in enumerate(nodes):
        for b, M2 in enumerate(nodes):
            leq[a, b] = includes_fc(M1, M2)
    return leq


def hasse_edges(leq: np.ndarray) -> list[tuple[int, int]]:
    """Covering pairs (a, b), a < b: the transitive reduction of a partial order."""
    strict = leq & ~np.eye(len(leq), dtype=bool)
    s = strict.astype(np.int32)
    cover = strict & ~((s @ s) > 0)
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(cover))]


def is_partial_order(leq: np.ndarray) -> bool:
    if not leq.diagonal().all():
        return False
    if (leq & leq.T & ~np.eye(len(leq), dtype=bool)).any():
        return False
    r = leq.astype(np.int32)
    return bool(((r @ r > 0) <= leq).all())


def build_lattice(n: int, d: int) -> Lattice:
    nodes = tuple(enumerate_fc(n, d))
    return Lattice(n, d, nodes, inclusion_matrix(nodes))


def top_column_rees(n: int, d: int) -> FCMatrix:
    """Rees congruence of the ideal of elements with d floats: last column R, Δ elsewhere."""
    return FCMatrix(n, d, tuple((D,) * d + (R,) for _ in range(n + 1)))


def drop_last_column(M: FCMatrix) -> FCMatrix:
    return FCMatrix(M.n, M.d - 1, tuple(r[:-1] for r in M.rows))


def filter_isomorphism(big: Lattice, small: Lattice) -> dict | None:
    """Map from the filter above the top-column Rees node of ``big`` onto ``small``.

    Returns the node map when it is an order isomorphism, else None.
    """
    k = big.index.get(top_column_rees(big.n, big.d))
    if k is None:
        return None
    filt = big.filter_above(k)
    image = {}
    for a in filt:
        M = drop_last_column(big.nodes[a])
        if M not in small.index:
            return None
        image[a] = small.index[M]
    if len(set(image.values())) != len(small.nodes) or len(filt) != len(small.nodes):
        return None
    for a in filt:
        for b in filt:
            if big.leq[a, b] != small.leq[image[a], image[b]]:
                return None
    return image


def column_extension(M: FCMatrix) -> FCMatrix:
    """(n,d) matrix to (n,d+1) by appending an R column: the lift through the quotient."""
    return FCMatrix(M.n, M.d + 1, tuple(r + (R,) for r in M.rows))


def lattice_json(L: Lattice) -> dict:
    return {
        "n": L.n,
        "d": L.d,
        "nodes": [M.tokens() for M in L.nodes],
        "hasse": [list(e) for e in L.hasse],
        "rees": L.rees,
    }


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def lattice_dot(L: Lattice, labels: str = "grid", rank: bool = False) -> str:
    """Graphviz DOT text of the Hasse diagram, Rees nodes filled blue."""
    rees = set(L.rees)
    lines = [f"digraph cong_Ptw_{L.n}_{L.d} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for k, M in enumerate(L.nodes):
        attrs = []
        if labels == "none":
            attrs.append(f"label={_quote(str(k))}")
        else:
            grid = [" ".join(s.token for s in r) for r in reversed(M.rows)]
            attrs.append("label=" + _quote("\n".join([str(k)] + grid)))
        if k in rees:
            attrs.append('style=filled, fillcolor="lightblue", color="blue"')
        lines.append(f"  n{k} [{', '.join(attrs)}];")
    if rank:
        levels: dict = {}
        for k, h in enumerate(L.height):
            levels.setdefault(h, []).append(k)
        for h in sorted(levels):
            lines.append("  { rank=same; " + " ".join(f"n{k};" for k in levels[h]) + " }")
    for a, b in L.hasse:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
