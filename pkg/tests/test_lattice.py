import numpy as np
import pydot
import pytest
from hypothesis import given, strategies as st

from twistcong.fcmatrix import enumerate_fc, is_rees_fc
from twistcong.lattice import (
    build_lattice,
    filter_isomorphism,
    hasse_edges,
    is_partial_order,
    lattice_dot,
    lattice_json,
    top_column_rees,
)
from twistcong.symbols import D, R

LATTICES = {nd: build_lattice(*nd) for nd in [(1, 0), (1, 1), (1, 4), (2, 0), (2, 1), (3, 0), (3, 1)]}


def closure(n, edges):
    """Reflexive-transitive closure of an edge list by Floyd-Warshall."""
    r = np.eye(n, dtype=bool)
    for a, b in edges:
        r[a, b] = True
    for k in range(n):
        r |= np.outer(r[:, k], r[k, :])
    return r


def test_three_chain():
    L = LATTICES[(1, 0)]
    assert len(L.nodes) == 3 and len(L.hasse) == 2
    assert L.hasse == [(1, 2), (2, 0)]


@pytest.mark.parametrize("nd", sorted(LATTICES))
def test_lattice_structure(nd):
    L = LATTICES[nd]
    assert L.nodes == tuple(enumerate_fc(*nd))
    assert is_partial_order(L.leq)
    assert all(s == D for r in L.nodes[L.bottom].rows for s in r)
    assert all(s == R for r in L.nodes[L.top].rows for s in r)
    assert (closure(len(L.nodes), L.hasse) == L.leq).all()
    edges = set(L.hasse)
    for a, b in L.hasse:
        assert not any((a, c) in edges and L.leq[c, b] and c != b for c in range(len(L.nodes)))


def test_sizes():
    assert len(LATTICES[(1, 4)].nodes) == 37
    assert len(LATTICES[(3, 1)].nodes) == 76


@given(st.integers(2, 9), st.integers(0, 10**6))
def test_hasse_of_random_order(size, seed):
    rng = np.random.default_rng(seed)
    perm = rng.permutation(size)
    rel = np.triu(rng.random((size, size)) < 0.3)
    leq = closure(size, list(zip(*np.nonzero(rel))))
    leq = leq[np.ix_(perm, perm)]
    edges = hasse_edges(leq)
    assert (closure(size, edges) == leq).all()
    assert is_partial_order(leq)


def test_rees_annotation():
    L = LATTICES[(1, 4)]
    # Rees congruences of Ptw(1,4): R_ij family, 0 <= i <= j <= 5
    assert len(L.rees) == 21
    assert all(is_rees_fc(L.nodes[k]) for k in L.rees)


def test_filters():
    assert filter_isomorphism(LATTICES[(3, 1)], LATTICES[(3, 0)]) is not None
    assert filter_isomorphism(LATTICES[(2, 1)], LATTICES[(2, 0)]) is not None
    assert filter_isomorphism(LATTICES[(2, 1)], LATTICES[(3, 0)]) is None
    assert top_column_rees(2, 1) in LATTICES[(2, 1)].index


def test_json_shape():
    js = lattice_json(LATTICES[(1, 0)])
    assert set(js) == {"n", "d", "nodes", "hasse", "rees"}
    assert js["nodes"][0] == [["R"], ["R"]]
    assert js["hasse"] == [[1, 2], [2, 0]]


@pytest.mark.parametrize("labels,rank", [("grid", False), ("none", True)])
def test_dot_parses_and_matches_hasse(labels, rank):
    L = LATTICES[(2, 1)]
    text = lattice_dot(L, labels=labels, rank=rank)
    (g,) = pydot.graph_from_dot_data(text)
    edges = {(int(e.get_source()[1:]), int(e.get_destination()[1:])) for e in g.get_edges()}
    assert edges == set(L.hasse)
    nodes = [nd for nd in g.get_nodes() if nd.get_name()[1:].isdigit()]
    if not rank:
        assert len(nodes) == len(L.nodes)
        blue = {int(nd.get_name()[1:]) for nd in nodes if "blue" in str(nd.get("color"))}
        assert blue == set(L.rees)
    assert lattice_dot(L, labels=labels, rank=rank) == text


def test_height_increases_along_edges():
    L = LATTICES[(2, 1)]
    assert all(L.height[a] < L.height[b] for a, b in L.hasse)
