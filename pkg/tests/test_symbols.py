import pytest
from hypothesis import given, strategies as st

from twistcong.partition import InvalidInput, NormalSubgroup
from twistcong.symbols import (ANY, D, LAM, MU, MUD, MUU, R, RHO, N, Symbol, allowed_below, allowed_right,
                               alphabet, leqC, n_symbols, parse_token)

TOKENS = ["D", "muU", "muD", "mu", "lam", "rho", "R", "N:S2", "N:A3", "N:S3", "N:K4", "N:A4", "N:S4"]
ALPHA = alphabet(6)


@pytest.mark.parametrize("tok", TOKENS)
def test_token_round_trip(tok):
    assert parse_token(tok).token == tok


def test_large_q_tokens():
    s = N("alternating", 5)
    assert s.token == "N:Aq@5"
    assert parse_token("N:Aq@5") == s == parse_token("N:A5")
    assert parse_token("N:Sq@7") == N("symmetric", 7)


@pytest.mark.parametrize("bad", ["", "X", "N:K3", "N:A2", "N:Q4", "mu "])
def test_bad_tokens(bad):
    with pytest.raises(InvalidInput):
        parse_token(bad)


def test_pretty_forms():
    assert [str(s) for s in (D, MUU, MUD, MU, LAM, RHO, R)] == ["Δ", "μ↑", "μ↓", "μ", "λ", "ρ", "R"]
    assert str(N("klein", 4)) == "K4"


def test_n_symbols():
    assert [s.token for s in n_symbols(2)] == ["N:S2"]
    assert [s.token for s in n_symbols(3)] == ["N:A3", "N:S3"]
    assert [s.token for s in n_symbols(4)] == ["N:K4", "N:A4", "N:S4"]
    assert n_symbols(1) == []
    with pytest.raises(InvalidInput):
        Symbol("N", NormalSubgroup("trivial", 3))


def test_order_examples():
    assert leqC(D, R) and leqC(MUU, MU) and leqC(MU, LAM) and leqC(LAM, R)
    assert not leqC(MUU, MUD) and not leqC(LAM, RHO) and not leqC(R, MU)
    assert leqC(N("klein", 4), N("alternating", 4)) and not leqC(N("symmetric", 4), N("alternating", 4))
    assert not leqC(N("symmetric", 3), N("symmetric", 4)) and not leqC(N("symmetric", 3), MU)


@given(st.sampled_from(ALPHA), st.sampled_from(ALPHA), st.sampled_from(ALPHA))
def test_order_is_partial_order(a, b, c):
    assert leqC(a, a)
    assert leqC(D, a) and leqC(a, R)
    if leqC(a, b) and leqC(b, a):
        assert a == b
    if leqC(a, b) and leqC(b, c):
        assert leqC(a, c)


def test_adjacency_table():
    assert allowed_below(D) is ANY and allowed_right(D) is ANY
    assert allowed_below(MUU) == {MU, RHO, LAM, R}
    assert allowed_right(MU) == {MU, RHO, LAM, R}
    assert allowed_right(R) == {R} and allowed_below(LAM) == {LAM}
    assert allowed_right(N("alternating", 3)) == {N("alternating", 3), N("symmetric", 3), R}
