"""C-pairs: the congruences of the infinite twisted partition monoid Ptw(n)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .fcmatrix import Violation
from .natcong import NatCong, divides, leq
from .partition import InvalidInput, NormalSubgroup, greens, pd, subgroup_contains
from .symbols import D, LAM, MU, MUD, MUU, R, RHO, Symbol, leqC, parse_token
from .twisted import DCoord, Pair, d_leq

ZETAS = (D, MUU, MUD, MU)
XI_ANY = (MU, RHO, LAM, R)


@dataclass(frozen=True)
class RowSpec:
    prefix: tuple[Symbol, ...]
    tail: Symbol

    def __post_init__(self):
        p = list(self.prefix)
        while p and p[-1] == self.tail:
            p.pop()
        object.__setattr__(self, "prefix", tuple(p))

    @classmethod
    def of(cls, *segments, tail: Symbol) -> "RowSpec":
        """Row from (symbol, count) segments followed by a constant tail."""
        out = []
        for sym, count in segments:
            out.extend([sym] * count)
        return cls(tuple(out), tail)

    @classmethod
    def from_tokens(cls, prefix, tail) -> "RowSpec":
        return cls(tuple(parse_token(t) for t in prefix), parse_token(tail))

    def entry(self, i: int) -> Symbol:
        return self.prefix[i] if i < len(self.prefix) else self.tail

    def first(self, pred) -> float:
        """First column whose entry satisfies pred, or inf."""
        for k, s in enumerate(self.prefix):
            if pred(s):
                return k
        return len(self.prefix) if pred(self.tail) else float("inf")

    def __str__(self):
        return " ".join(str(s) for s in self.prefix) + f" ({self.tail})^w"


@dataclass(frozen=True)
class RowType:
    name: str
    params: tuple = ()
    muin: tuple[int, int] | None = None
    zeta_col: int | None = None


@dataclass(frozen=True)
class ExceptionalInfo:
    q: int
    half: NatCong


@dataclass(frozen=True)
class CPair:
    n: int
    theta: tuple[NatCong, ...]
    rows: tuple[RowSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "theta", tuple(self.theta))
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.theta) != self.n + 1 or len(self.rows) != self.n + 1:
            raise InvalidInput("need n+1 congruences and n+1 rows")

    def entry(self, q: int, i: int) -> Symbol:
        return self.rows[q].entry(i)

    @cached_property
    def horizon(self) -> int:
        """A column beyond which every row is constant and every θ is periodic."""
        mins = [t.m for t in self.theta if not t.is_trivial]
        return max([len(r.prefix) for r in self.rows] + mins + [0]) + 1

    @cached_property
    def row01(self) -> RowType | Violation:
        return _row01_type(self)

    @cached_property
    def exceptional(self) -> ExceptionalInfo | None:
        return is_exceptional(self)

    def grid(self) -> str:
        return "\n".join(f"{q}: {self.rows[q]}  θ={self.theta[q]}" for q in reversed(range(self.n + 1)))


def _xi_ok(xi: Symbol, d) -> bool:
    return xi in XI_ANY if d == 1 else xi == MU


def _row01_type(P: CPair) -> RowType | Violation:
    r0, r1 = P.rows[0], P.rows[1]
    t0, t1 = P.theta[0], P.theta[1]
    all_d = RowSpec((), D)
    if r0 == all_d and r1 == all_d:
        return RowType("RT1")
    if t0.is_trivial and t1.is_trivial:
        i = r0.first(lambda s: s != D)
        if i != float("inf"):
            zeta = r1.entry(i)
            if (zeta in ZETAS and r0 == RowSpec.of((D, i), tail=MU)
                    and r1 == RowSpec.of((D, i), (zeta, 1), tail=MU)):
                return RowType("RT2", (i, zeta.token), (i, i + 1), i)
    if t0.is_trivial:
        return Violation(0, None, "rows 0 and 1 match none of RT1-RT7")
    m, d = t0.m, t0.d
    xi = r0.entry(m)
    if d == 1 and r1 == all_d and xi in (RHO, LAM, R) and r0 == RowSpec.of((D, m), tail=xi):
        return RowType("RT3", (m, xi.token))
    if t1.is_trivial or t1.d != d or not _xi_ok(xi, d):
        return Violation(0, None, "rows 0 and 1 match none of RT1-RT7")
    l = t1.m
    if l == m and r0 == r1 == RowSpec.of((D, m), tail=xi):
        return RowType("RT4", (m, d, xi.token))
    if l == m + 1:
        i = r0.first(lambda s: s != D)
        if i < m:
            zeta = r1.entry(i)
            if (zeta in ZETAS and r0 == RowSpec.of((D, i), (MU, m - i), tail=xi)
                    and r1 == RowSpec.of((D, i), (zeta, 1), (MU, m - i), tail=xi)):
                return RowType("RT5", (i, m, d, zeta.token, xi.token), (i, i + 1), i)
    if l > m:
        zeta = r1.entry(l - 1)
        if (zeta in ZETAS and r0 == RowSpec.of((D, m), tail=xi)
                and r1 == RowSpec.of((D, l - 1), (zeta, 1), tail=xi)):
            return RowType("RT6", (m, l, d, zeta.token, xi.token), None, l - 1)
    if l - 1 > m > 0 and (l - 1 - m) % d == 0:
        if r0 == RowSpec.of((D, m - 1), (MU, 1), tail=xi) and r1 == RowSpec.of((D, l - 1), (MU, 1), tail=xi):
            return RowType("RT7", (m, l, d, xi.token), (m - 1, l - 1))
    return Violation(0, None, "rows 0 and 1 match none of RT1-RT7")


def _upper_row_type(row: RowSpec, theta: NatCong, q: int) -> str | Violation:
    if row == RowSpec((), D):
        return "RT8"
    i = row.first(lambda s: s != D)
    entries = list(row.prefix[i:]) + [row.tail]
    if row.tail == R:
        if theta.is_trivial or theta.d != 1 or len(row.prefix) != theta.m:
            return Violation(q, None, "RT10 needs θ_q = (m,m+1)# with R from column m")
        entries = entries[:-1]
    elif not (row.tail.is_N and len(row.prefix) <= theta.min):
        return Violation(q, None, "RT9 needs an N tail starting no later than min θ_q")
    prev = None
    for k, s in enumerate(entries):
        if not (s.is_N and s.q == q):
            return Violation(q, i + k, f"expected an N-symbol of S_{q}")
        if prev is not None and not leqC(prev, s):
            return Violation(q, i + k, "N-symbols must be nondecreasing")
        prev = s
    return "RT10" if row.tail == R else "RT9"


def validate(P: CPair) -> Violation | None:
    """None if P is a C-pair, otherwise the first violated condition."""
    n = P.n
    if n < 1:
        return Violation(None, None, "need n >= 1")
    for q in range(n):
        if not leq(P.theta[q + 1], P.theta[q]):
            return Violation(q + 1, None, "C-chain must be descending")
    for q, row in enumerate(P.rows):
        for s in row.prefix + (row.tail,):
            if s.is_N and not (2 <= q <= n and s.q == q):
                return Violation(q, None, "N-symbol in the wrong row")
    t = P.row01
    if isinstance(t, Violation):
        return t
    for q in range(2, n + 1):
        v = _upper_row_type(P.rows[q], P.theta[q], q)
        if isinstance(v, Violation):
            return v
    for q in range(1, n + 1):
        for c in range(P.horizon + 1):
            s, below = P.entry(q, c), P.entry(q - 1, c)
            if s.is_N and (below in (D, MUU, MUD) or below.is_N):
                return Violation(q, c, "V1")
            if q >= 2 and s == R and below != R:
                return Violation(q, c, "V2")
    odd = [(q, c) for q, r in enumerate(P.rows) for c, s in enumerate(r.prefix) if s in (MUU, MUD)]
    if len(odd) > 1 or any(r.tail in (MUU, MUD) for r in P.rows):
        return Violation(1, None, "at most one entry from {μ↑, μ↓}")
    return None


def row_types(P: CPair) -> list[str]:
    out = [P.row01.name]
    out += [_upper_row_type(P.rows[q], P.theta[q], q) for q in range(2, P.n + 1)]
    return out


def is_exceptional(P: CPair) -> ExceptionalInfo | None:
    for q in range(2, P.n + 1):
        th = P.theta[q]
        if th.is_trivial or th.d % 2:
            continue
        m, half = th.m, th.d // 2
        if q > 2:
            if P.entry(q, m) != Symbol("N", NormalSubgroup("alternating", q)):
                continue
        elif not (P.entry(2, m) == D and P.entry(1, m) in XI_ANY
                  and leq(NatCong(m, half), P.theta[1])):
            continue
        return ExceptionalInfo(q, NatCong(m, half))
    return None


def cg_member(P: CPair, a: Pair, b: Pair) -> bool:
    alpha, beta = a.p, b.p
    q, r, i, j = alpha.rank, beta.rank, a.i, b.i
    s = P.entry(q, i)
    if s != P.entry(r, j):
        return False
    kind = s.kind
    th = P.theta[q]
    if kind == "R":
        return True
    if kind == "D":
        return alpha == beta and th.contains(i, j)
    if kind == "N":
        return (q == r and th.contains(i, j) and greens(alpha, beta, "H")
                and subgroup_contains(s.group, pd(alpha, beta)))
    if kind == "lam":
        return greens(alpha.hat, beta.hat, "L")
    if kind == "rho":
        return greens(alpha.hat, beta.hat, "R")
    if alpha.hat != beta.hat:
        return False
    if kind == "muD":
        return greens(alpha, beta, "L")
    if kind == "muU":
        return greens(alpha, beta, "R")
    if q == r:
        return th.contains(i, j)
    if not P.theta[0].contains(i + r, j + q):
        return False
    below_q, below_r = i < th.min, j < P.theta[r].min
    return below_q == below_r


def cgx_member(P: CPair, a: Pair, b: Pair) -> bool:
    x = P.exceptional
    if x is None:
        raise InvalidInput("cgx is only defined for exceptional C-pairs")
    if cg_member(P, a, b):
        return True
    q = x.q
    return (a.p.rank == q and b.p.rank == q
            and x.half.contains(a.i, b.i) and not P.theta[q].contains(a.i, b.i)
            and greens(a.p, b.p, "H") and pd(a.p, b.p).sign == -1)


def member(P: CPair, a: Pair, b: Pair, exceptional: bool = False) -> bool:
    return cgx_member(P, a, b) if exceptional else cg_member(P, a, b)


def leq_C(P1: CPair, P2: CPair) -> bool:
    """Componentwise order on chains and matrices."""
    if P1.n != P2.n:
        raise InvalidInput("C-pairs of different degrees")
    if not all(leq(t1, t2) for t1, t2 in zip(P1.theta, P2.theta)):
        return False
    h = max(P1.horizon, P2.horizon)
    return all(leqC(P1.entry(q, c), P2.entry(q, c)) for q in range(P1.n + 1) for c in range(h + 1))


def _includes_cg(P1: CPair, P2: CPair) -> bool:
    if not leq_C(P1, P2):
        return False
    t1 = P1.row01
    if t1.muin is None:
        return True
    if P2.theta[0].min <= t1.muin[0] and P2.theta[1].min <= t1.muin[1]:
        return True
    t2 = P2.row01
    return t2.muin is not None and t2.muin[1] - t2.muin[0] == t1.muin[1] - t1.muin[0]


def includes(P1: CPair, P2: CPair, exc1: bool = False, exc2: bool = False) -> bool:
    """Containment of the congruence named by (P1, exc1) in that named by (P2, exc2)."""
    x1, x2 = P1.exceptional, P2.exceptional
    if (exc1 and x1 is None) or (exc2 and x2 is None):
        raise InvalidInput("exceptional flag on a non-exceptional C-pair")
    if not _includes_cg(P1, P2):
        return False
    if not exc1:
        return True
    q = x1.q
    th1, th2 = P1.theta[q], P2.theta[q]
    if exc2:
        if x2.q != q:
            return True
        ratio, rem = divmod(th1.per, th2.per)
        return rem == 0 and ratio % 2 == 1
    if not divides(2 * th2.per, th1.per):
        return False
    top = Symbol("N", NormalSubgroup("symmetric", q))
    h = max(P2.horizon, th2.m)
    return all(P2.entry(q, c) in (top, R) for c in range(th2.m, h + 1))


def finite_index(P: CPair) -> bool:
    return not P.theta[P.n].is_trivial


def rees_cpair(n: int, corners) -> CPair:
    """The C-pair of the Rees congruence of the ideal generated by the corner D-classes."""
    corners = [DCoord(*c) for c in corners]
    for c in corners:
        if not (0 <= c.q <= n and c.i >= 0):
            raise InvalidInput(f"corner {c} out of range")
    for a in corners:
        for b in corners:
            if a != b and d_leq(a, b):
                raise InvalidInput("corners must be pairwise incomparable")
    theta, rows = [], []
    for q in range(n + 1):
        cols = [c.i for c in corners if q <= c.q]
        if cols:
            m = min(cols)
            theta.append(NatCong(m, 1))
            rows.append(RowSpec.of((D, m), tail=R))
        else:
            theta.append(NatCong())
            rows.append(RowSpec((), D))
    return CPair(n, tuple(theta), tuple(rows))


def normalize_n1(P: CPair) -> CPair:
    """For n = 1: μ↑, μ↓ and unmatched μ act as Δ, and λ, ρ act as R."""
    if P.n != 1:
        return P
    swap = {MUU: D, MUD: D, LAM: R, RHO: R}
    rows = [list(r.prefix) for r in P.rows]
    t = P.row01
    if not isinstance(t, Violation) and t.zeta_col is not None and P.entry(1, t.zeta_col) == MU:
        r1 = rows[1]
        r1.extend([P.rows[1].tail] * (t.zeta_col + 1 - len(r1)))
        r1[t.zeta_col] = D
    new_rows = tuple(RowSpec(tuple(swap.get(s, s) for s in pre), swap.get(r.tail, r.tail))
                     for pre, r in zip(rows, P.rows))
    return CPair(1, P.theta, new_rows)
