"""Named C-pairs and a random C-pair generator."""

from __future__ import annotations

import random

from .cpair import CPair, RowSpec, rees_cpair, validate
from .natcong import NatCong
from .partition import NormalSubgroup, enumerate_cong_Pn
from .symbols import D, LAM, MU, MUD, MUU, R, RHO, Symbol, n_symbols

T = NatCong()
C = NatCong
ALL = RowSpec((), D)


def _pair(n, theta, rows) -> CPair:
    rows = list(rows) + [ALL] * (n + 1 - len(rows))
    theta = list(theta) + [T] * (n + 1 - len(theta))
    return CPair(n, tuple(theta), tuple(rows))


def _N(kind, q):
    return Symbol("N", NormalSubgroup(kind, q))


def rees_example() -> CPair:
    """Rees congruence of the ideal with corners (0,0), (1,2), (3,3) in Ptw(4)."""
    return rees_cpair(4, [(0, 0), (1, 2), (3, 3)])


def exceptional_examples() -> list[CPair]:
    """Three exceptional C-pairs for n = 4, with exceptional rows 4, 3 and 2."""
    s2, a3, s3 = _N("symmetric", 2), _N("alternating", 3), _N("symmetric", 3)
    k4, a4 = _N("klein", 4), _N("alternating", 4)
    first = _pair(4, [C(0, 1), C(2, 1), C(3, 1), C(6, 1), C(9, 2)], [
        RowSpec((), R),
        RowSpec.of((D, 1), (MU, 1), tail=R),
        RowSpec.of((D, 1), (s2, 2), tail=R),
        RowSpec.of((D, 4), (a3, 1), (s3, 1), tail=R),
        RowSpec.of((D, 6), (k4, 2), tail=a4),
    ])
    second = _pair(4, [C(1, 1), C(4, 1), C(4, 1), C(7, 8), C(7, 16)], [
        RowSpec.of((MU, 1), tail=R),
        RowSpec.of((D, 3), (MU, 1), tail=R),
        RowSpec.of((D, 4), tail=R),
        RowSpec.of((D, 5), tail=a3),
        ALL,
    ])
    third = _pair(4, [C(5, 2), C(6, 2), C(8, 4), C(9, 4), T], [
        RowSpec.of((D, 1), tail=MU),
        RowSpec.of((D, 1), (MUD, 1), tail=MU),
    ])
    return [first, second, third]


def noncomp_pair(n: int = 2) -> tuple[CPair, CPair]:
    """Two C-pairs with P1 <=_C P2 whose congruences are not nested."""
    p1 = _pair(n, [], [RowSpec((), MU), RowSpec.of((D, 1), tail=MU)])
    p2 = _pair(n, [C(0, 1), C(2, 1)], [RowSpec((), R), RowSpec.of((D, 1), (MU, 1), tail=R)])
    return p1, p2


def weirdproj(n: int = 2) -> CPair:
    """Matching μs in rows 0 and 1 with trivial chain."""
    return _pair(n, [], [RowSpec((), MU), RowSpec((), MU)])


def tau_style(n: int) -> list[tuple[str, CPair]]:
    """C-pairs of the congruences ((i,a),(j,b)) with (a,b) in a congruence of P_n."""
    nabla = [C(0, 1)] * (n + 1)
    out = []
    for cong in enumerate_cong_Pn(n):
        name = cong.name
        rows = [ALL] * (n + 1)
        kind, _, tag = name.partition("_")
        if kind == "R" and tag.isdigit():
            for q in range(int(tag) + 1):
                rows[q] = RowSpec((), R)
        elif kind == "R":
            sym = next(s for q in range(2, n + 1) for s in n_symbols(q) if str(s) == tag)
            for q in range(sym.q):
                rows[q] = RowSpec((), R)
            rows[sym.q] = RowSpec((), sym)
        else:
            base = {"mu": MU, "lambda": LAM, "rho": RHO}[kind]
            if tag == "0":
                rows[0] = RowSpec((), base) if base != MU else ALL
            else:
                rows[0] = rows[1] = RowSpec((), base)
                if tag == "S2":
                    rows[2] = RowSpec((), n_symbols(2)[0])
        out.append((f"tau[{name}]", CPair(n, tuple(nabla), tuple(rows))))
    return out


def small_exceptional(n: int) -> list[tuple[str, CPair]]:
    """Exceptional C-pairs at small degree (rows 2 and, for n >= 3, row 3)."""
    out = [
        ("excep2a", _pair(n, [C(0, 1), C(0, 1), C(0, 2)], [RowSpec((), R), RowSpec((), R)])),
        ("excep2b", _pair(n, [C(1, 2), C(1, 2), C(1, 4)], [RowSpec.of((D, 1), tail=MU), RowSpec.of((D, 1), tail=MU)])),
    ]
    if n >= 3:
        out.append(("excep3", _pair(n, [C(0, 1), C(0, 1), C(1, 1), C(2, 2)], [
            RowSpec((), R), RowSpec((), R), RowSpec.of((D, 1), tail=R),
            RowSpec.of((D, 2), tail=_N("alternating", 3)),
        ])))
    return out


def _sub(theta: NatCong, rng: random.Random, max_m: int) -> NatCong:
    """A random congruence contained in theta."""
    if theta.is_trivial or rng.random() < 0.25:
        return T
    m = theta.m + rng.randint(0, max(0, max_m - theta.m))
    return C(m, theta.d * rng.choice((1, 1, 2)))


def _theta(rng, max_m, max_d) -> NatCong:
    return C(rng.randint(0, max_m), rng.randint(1, max_d))


def _rows01(rng: random.Random, max_m: int, max_d: int):
    zeta = rng.choice((D, MUU, MUD, MU))
    kind = rng.choice(("RT1", "RT2", "RT3", "RT4", "RT5", "RT6", "RT7"))
    if kind == "RT1":
        t0 = _theta(rng, max_m, max_d) if rng.random() < 0.7 else T
        return [t0, _sub(t0, rng, max_m)], [ALL, ALL]
    if kind == "RT2":
        i = rng.randint(0, max_m)
        return [T, T], [RowSpec.of((D, i), tail=MU), RowSpec.of((D, i), (zeta, 1), tail=MU)]
    if kind == "RT3":
        m = rng.randint(0, max_m)
        t0 = C(m, 1)
        xi = rng.choice((RHO, LAM, R))
        return [t0, _sub(t0, rng, max_m)], [RowSpec.of((D, m), tail=xi), ALL]
    d = rng.randint(1, max_d)
    xi = rng.choice((MU, RHO, LAM, R)) if d == 1 else MU
    if kind == "RT4":
        m = rng.randint(0, max_m)
        row = RowSpec.of((D, m), tail=xi)
        return [C(m, d), C(m, d)], [row, row]
    if kind == "RT5":
        m = rng.randint(1, max_m)
        i = rng.randint(0, m - 1)
        return [C(m, d), C(m + 1, d)], [RowSpec.of((D, i), (MU, m - i), tail=xi),
                                        RowSpec.of((D, i), (zeta, 1), (MU, m - i), tail=xi)]
    if kind == "RT6":
        m = rng.randint(0, max_m)
        l = m + rng.randint(1, 2)
        return [C(m, d), C(l, d)], [RowSpec.of((D, m), tail=xi), RowSpec.of((D, l - 1), (zeta, 1), tail=xi)]
    m = rng.randint(1, max_m)
    l = m + 1 + d * rng.randint(1, 2)
    return [C(m, d), C(l, d)], [RowSpec.of((D, m - 1), (MU, 1), tail=xi), RowSpec.of((D, l - 1), (MU, 1), tail=xi)]


def _upper_row(q, theta, rng, max_m):
    kind = rng.choice(("RT8", "RT9", "RT10"))
    syms = n_symbols(q)
    if kind == "RT10" and not theta.is_trivial and theta.d == 1:
        m = theta.m
        i = rng.randint(0, m)
        seq = sorted(rng.choices(range(len(syms)), k=m - i))
        return RowSpec(tuple([D] * i + [syms[s] for s in seq]), R)
    if kind == "RT9":
        top = min(theta.min, max_m + 1)
        k = rng.randint(0, top)
        i = rng.randint(0, k)
        seq = sorted(rng.choices(range(len(syms)), k=k - i + 1))
        return RowSpec(tuple([D] * i + [syms[s] for s in seq[:-1]]), syms[seq[-1]])
    return ALL


def random_cpair(n: int, rng: random.Random, max_m: int = 3, max_d: int = 2, tries: int = 200) -> CPair:
    """A random valid C-pair with small parameters (rejection sampling)."""
    for _ in range(tries):
        theta, rows = _rows01(rng, max_m, max_d)
        for q in range(2, n + 1):
            t = _sub(theta[-1], rng, max_m)
            theta.append(t)
            rows.append(_upper_row(q, t, rng, max_m))
        P = CPair(n, tuple(theta), tuple(rows))
        if validate(P) is None:
            return P
    raise RuntimeError("no valid C-pair found")


def standard_corpus(seed: int = 0) -> list[tuple[str, CPair]]:
    """The C-pairs at n = 2, 3 used for the infinite-case soundness checks."""
    out: list[tuple[str, CPair]] = []
    for n in (2, 3):
        out += tau_style(n)
        p1, p2 = noncomp_pair(n)
        out += [(f"noncomp1[n={n}]", p1), (f"noncomp2[n={n}]", p2), (f"weirdproj[n={n}]", weirdproj(n))]
        out += [(f"{name}[n={n}]", P) for name, P in small_exceptional(n)]
    out += [
        ("rees[n=2](0,1),(1,3)", rees_cpair(2, [(0, 1), (1, 3)])),
        ("rees[n=2](1,1),(2,3)", rees_cpair(2, [(1, 1), (2, 3)])),
        ("rees[n=3](0,0),(1,2),(3,3)", rees_cpair(3, [(0, 0), (1, 2), (3, 3)])),
        ("rees[n=3](2,1)", rees_cpair(3, [(2, 1)])),
    ]
    rng = random.Random(seed)
    for k in range(12):
        out.append((f"random[n=2]#{k}", random_cpair(2, rng)))
    for k in range(6):
        out.append((f"random[n=3]#{k}", random_cpair(3, rng, max_m=2, max_d=2)))
    seen, uniq = set(), []
    for name, P in out:
        if P not in seen:
            seen.add(P)
            uniq.append((name, P))
    return uniq


def paper_n4() -> list[tuple[str, CPair]]:
    ex = exceptional_examples()
    return [("rees_example", rees_example()), ("excep_q4", ex[0]), ("excep_q3", ex[1]), ("excep_q2", ex[2])]
