import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from twistcong.fcmatrix import (
    FCMatrix,
    cg_fc_member,
    enumerate_fc,
    family_d0,
    family_n1,
    includes_fc,
    is_rees_fc,
    normalize_fc,
    validate_fc,
)
from twistcong.lattice import column_extension
from twistcong.oracle import build_monoid, relation_from_member
from twistcong.partition import InvalidInput, enumerate_partitions
from twistcong.symbols import D, MU, R, alphabet
from twistcong.twisted import ZERO, Pair

CACHE = {nd: enumerate_fc(*nd) for nd in [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 1)]}


def fc(n, d, *rows_top_down):
    """Matrix from rows listed top (rank n) to bottom (rank 0)."""
    return FCMatrix.from_tokens(n, d, list(reversed(rows_top_down)))


def n1_count(d):
    return (d + 2) * (d + 3) // 2 + (d + 1) * d // 2 + d * (d - 1) // 2


def test_validate_examples():
    assert validate_fc(fc(3, 2, ["R", "R", "R"], ["R", "R", "R"], ["R", "R", "R"], ["R", "R", "R"])) is None
    ok = fc(3, 2, ["D", "D", "D"], ["N:S2", "N:S2", "R"], ["mu", "R", "R"], ["R", "R", "R"])
    assert validate_fc(ok) is None
    bad = fc(3, 0, ["D"], ["N:S2"], ["D"], ["D"])
    v = validate_fc(bad)
    assert v is not None and "V1" in v.condition


def test_validate_rejects_lambda_and_shape():
    assert validate_fc(fc(1, 0, ["D"], ["lam"])) is not None
    with pytest.raises(InvalidInput):
        FCMatrix.from_tokens(2, 1, [["D", "D"], ["D"], ["D", "D"]])


@pytest.mark.parametrize("nd,count", [((1, 0), 3), ((1, 1), 7), ((1, 4), 37), ((2, 0), 9), ((3, 0), 12),
                                      ((4, 0), 16), ((2, 1), 43), ((3, 1), 76)])
def test_counts(nd, count):
    mats = enumerate_fc(*nd)
    assert len(mats) == count
    assert len(set(mats)) == count
    assert all(validate_fc(M) is None for M in mats)


@pytest.mark.parametrize("d", range(0, 7))
def test_n1_counts(d):
    assert len(enumerate_fc(1, d)) == n1_count(d)


@pytest.mark.parametrize("nd", [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_enumeration_equals_filtered_alphabet(nd):
    n, d = nd
    al = alphabet(n)
    accepted = set()
    for combo in itertools.product(al, repeat=(n + 1) * (d + 1)):
        M = FCMatrix(n, d, tuple(combo[q * (d + 1):(q + 1) * (d + 1)] for q in range(n + 1)))
        if validate_fc(M) is None:
            accepted.add(normalize_fc(M))
    assert accepted == set(CACHE[nd])


def test_enumeration_deterministic():
    assert enumerate_fc(2, 1) == CACHE[(2, 1)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_family_d0(n):
    fam = family_d0(n)
    assert len(fam) == {2: 9, 3: 12, 4: 16}[n]
    assert {M for _, M in fam} == set(enumerate_fc(n, 0))
    byname = dict(fam)
    up, down, mu, r0 = byname["mu_up"], byname["mu_down"], byname["mu"], byname["R_0"]
    assert includes_fc(r0, up) and includes_fc(r0, down)
    assert includes_fc(up, mu) and includes_fc(down, mu)
    assert not includes_fc(up, down) and not includes_fc(down, up)


def test_family_d0_rejects_small_n():
    with pytest.raises(InvalidInput):
        family_d0(1)


@pytest.mark.parametrize("d", [1, 2, 4])
def test_family_n1(d):
    fam = family_n1(d)
    assert len(fam) == n1_count(d)
    assert all(validate_fc(M) is None for _, M in fam)
    assert {normalize_fc(M) for _, M in fam} == set(enumerate_fc(1, d))


def test_trivial_members():
    M = CACHE[(2, 1)][0]
    x = Pair(1, enumerate_partitions(2)[3])
    assert cg_fc_member(M, x, x) and cg_fc_member(M, ZERO, ZERO)
    top = FCMatrix(2, 1, ((R, R),) * 3)
    assert cg_fc_member(top, x, ZERO) and cg_fc_member(top, Pair(0, enumerate_partitions(2)[0]), x)


@pytest.mark.parametrize("i", [0, 1])
def test_matching_mu_relates_hat_to_next_column(i):
    d = 2
    r0 = [D] * i + [MU] * (d - i) + [R]
    r1 = [D] * (i + 1) + [MU] * (d - i)
    M = FCMatrix(2, d, (tuple(r0), tuple(r1), (D,) * (d + 1)))
    assert validate_fc(M) is None
    for b in enumerate_partitions(2):
        if b.rank == 1:
            assert cg_fc_member(M, Pair(i, b.hat), Pair(i + 1, b))
            assert not cg_fc_member(M, Pair(i, b.hat), Pair(i, b))


@pytest.mark.parametrize("nd", [(1, 1), (2, 0), (2, 1)])
def test_inclusion_is_partial_order_with_bounds(nd):
    mats = CACHE[nd]
    bottom = next(M for M in mats if all(s == D for r in M.rows for s in r))
    top = next(M for M in mats if all(s == R for r in M.rows for s in r))
    for A in mats:
        assert includes_fc(A, A) and includes_fc(bottom, A) and includes_fc(A, top)
        for B in mats:
            if A != B and includes_fc(A, B):
                assert not includes_fc(B, A)
                for C in mats:
                    if includes_fc(B, C):
                        assert includes_fc(A, C)


def test_inclusion_shape_mismatch():
    with pytest.raises(InvalidInput):
        includes_fc(CACHE[(1, 0)][0], CACHE[(1, 1)][0])


def test_column_extension_preserves_order():
    small, big = CACHE[(2, 0)], set(CACHE[(2, 1)])
    for A in small:
        assert column_extension(A) in big
        for B in small:
            assert includes_fc(A, B) == includes_fc(column_extension(A), column_extension(B))


def test_rees_detection():
    rees = [M for M in CACHE[(2, 1)] if is_rees_fc(M)]
    # ideals of the D-class poset of Ptw(2,1): down-sets of a 3 x 2 grid
    assert len(rees) == 10
    assert not is_rees_fc(fc(1, 0, ["mu"], ["R"]))


@pytest.mark.parametrize("nd", [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)])
def test_relations_are_distinct_congruences(nd):
    m = build_monoid(*nd)
    rels = [relation_from_member(m, lambda x, y, M=M: cg_fc_member(M, x, y)) for M in CACHE.get(nd) or enumerate_fc(*nd)]
    assert len(set(rels)) == len(rels)


@settings(max_examples=60)
@given(st.sampled_from(CACHE[(3, 1)]), st.randoms(use_true_random=False))
def test_relation_sampled_compatible_n3(M, rnd):
    m = build_monoid(3, 1)
    els, t = m.elements, m.table
    for _ in range(50):
        a, b, s = (rnd.randrange(m.size) for _ in range(3))
        if cg_fc_member(M, els[a], els[b]):
            assert cg_fc_member(M, els[t[a, s]], els[t[b, s]])
            assert cg_fc_member(M, els[t[s, a]], els[t[s, b]])
