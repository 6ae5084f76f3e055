import random

import numpy as np
import pytest

from twistcong.corpus import exceptional_examples, noncomp_pair, small_exceptional, weirdproj
from twistcong.cpair import includes, is_exceptional, rees_cpair
from twistcong.partition import enumerate_partitions
from twistcong.twisted import Pair
from twistcong.window import (
    check_window,
    class_refines,
    float_free_closure,
    pn_generators,
    ptw_generators,
    sampled_check,
    separating_pair,
    window_K,
)


@pytest.mark.parametrize("n", [2, 3])
def test_generators_reach_every_partition_without_floats(n):
    assert float_free_closure(pn_generators(n)) == set(enumerate_partitions(n))


def test_window_constant():
    P = small_exceptional(2)[1][1]
    assert window_K(P) == 2 * (max(t.m for t in P.theta) + max(t.d for t in P.theta)) + 2


@pytest.mark.parametrize("P", [weirdproj(2), rees_cpair(2, [(0, 1), (1, 3)]), *noncomp_pair(2)],
                         ids=["weirdproj", "rees", "noncomp1", "noncomp2"])
def test_window_check_passes(P):
    rep = check_window(P, False, window_K(P), ptw_generators(2, full=True), random.Random(0))
    assert rep.ok, rep.failures[:3]
    assert rep.class_id is not None


@pytest.mark.parametrize("name,P", small_exceptional(2), ids=lambda x: x if isinstance(x, str) else "")
def test_exceptional_window_check(name, P):
    assert is_exceptional(P) is not None
    for exc in (False, True):
        rep = check_window(P, exc, window_K(P), ptw_generators(2, full=True), random.Random(1))
        assert rep.ok, rep.failures[:3]


def test_window_detects_broken_relation():
    """Rows moved to the wrong ranks give a relation that is not a congruence."""
    p1, _ = noncomp_pair(2)
    bad = type(p1)(2, p1.theta, (p1.rows[2], p1.rows[1], p1.rows[0]))
    rep = check_window(bad, False, window_K(p1), ptw_generators(2, full=True), random.Random(0))
    assert not rep.ok


def test_noncomp_separated_in_window():
    p1, p2 = noncomp_pair(2)
    K = max(window_K(p1), window_K(p2))
    c1 = check_window(p1, False, K, [], random.Random(0), cross_sample=0, pair_sample=0).class_id
    c2 = check_window(p2, False, K, [], random.Random(0), cross_sample=0, pair_sample=0).class_id
    assert not class_refines(c1, c2) and not includes(p1, p2)
    assert separating_pair(c1, c2) is not None
    assert separating_pair(c1, c1) is None


def test_sampled_check_n4():
    P = exceptional_examples()[2]
    rep = sampled_check(P, True, window_K(P), ptw_generators(4), random.Random(0), probes=300)
    assert rep.ok and rep.probes > 0
