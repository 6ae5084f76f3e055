"""Finitary C-matrices: the congruences of the d-twisted monoids Ptw(n,d)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterator

from .partition import InvalidInput, greens, pd, subgroup_contains
from .symbols import D, MU, MUD, MUU, R, Symbol, leqC, n_symbols, parse_token
from .twisted import ZERO

ZETAS = (D, MUU, MUD, MU)


@dataclass(frozen=True)
class Violation:
    row: int | None
    col: int | None
    condition: str

    def __str__(self):
        where = ", ".join(f"{k}={v}" for k, v in (("row", self.row), ("col", self.col)) if v is not None)
        return f"{self.condition} ({where})" if where else self.condition


@dataclass(frozen=True)
class RowType:
    """Recognized type of rows 0 and 1, with its parameters."""

    name: str
    params: tuple = ()
    muin: tuple[int, int] | None = None
    zeta_col: int | None = None


@dataclass(frozen=True)
class FCMatrix:
    n: int
    d: int
    rows: tuple[tuple[Symbol, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n + 1 or any(len(r) != self.d + 1 for r in rows):
            raise InvalidInput(f"matrix must be {self.n + 1} x {self.d + 1}")

    @classmethod
    def from_tokens(cls, n: int, d: int, rows) -> "FCMatrix":
        return cls(n, d, tuple(tuple(parse_token(t) for t in r) for r in rows))

    def tokens(self) -> list[list[str]]:
        return [[s.token for s in r] for r in self.rows]

    def entry(self, q: int, i: int) -> Symbol:
        return self.rows[q][i]

    @cached_property
    def mins(self) -> tuple[int, ...]:
        return tuple(_first_R(r) for r in self.rows)

    def min_q(self, q: int) -> int:
        return self.mins[q]

    @cached_property
    def row01(self) -> RowType | Violation:
        return _row01_type(self.rows[0], self.rows[1], self.d)

    def grid(self) -> str:
        """Compact text grid, top row first."""
        return "\n".join(" ".join(str(s) for s in r) for r in reversed(self.rows))

    def __repr__(self):
        return f"FCMatrix(n={self.n}, d={self.d}, rows={self.tokens()})"


def _first_R(row) -> int:
    for k, s in enumerate(row):
        if s == R:
            return k
    return len(row)


def _all(row, lo, hi, sym) -> bool:
    return all(row[c] == sym for c in range(lo, hi))


def _row01_type(r0, r1, d) -> RowType | Violation:
    k0, k1 = _first_R(r0), _first_R(r1)
    for q, (row, k) in enumerate(((r0, k0), (r1, k1))):
        if not _all(row, k, d + 1, R):
            return Violation(q, k, "entries after the first R must be R")
    first0 = next((c for c in range(k0) if r0[c] != D), k0)
    if k0 == k1 and first0 == k0 and _all(r1, 0, k1, D):
        return RowType("fRT1", (k0,))
    if k1 == k0 + 1 and k0 <= d and first0 < k0:
        i = first0
        if (_all(r0, i, k0, MU) and _all(r1, 0, i, D) and r1[i] in ZETAS
                and _all(r1, i + 1, k0 + 1, MU)):
            return RowType("fRT2", (i, k0, r1[i].token), (i, i + 1), i)
    if k0 < k1 and first0 == k0 and _all(r1, 0, k1 - 1, D) and r1[k1 - 1] in ZETAS:
        return RowType("fRT3", (k0, k1, r1[k1 - 1].token), None, k1 - 1)
    if 0 < k0 < k1 - 1 <= d:
        if (_all(r0, 0, k0 - 1, D) and r0[k0 - 1] == MU
                and _all(r1, 0, k1 - 1, D) and r1[k1 - 1] == MU):
            return RowType("fRT4", (k0, k1), (k0 - 1, k1 - 1))
    return Violation(0, None, "rows 0 and 1 match none of fRT1-fRT4")


def _check_upper_row(row, q, d) -> Violation | None:
    k = _first_R(row)
    if not _all(row, k, d + 1, R):
        return Violation(q, k, "entries after the first R must be R")
    i = next((c for c in range(k) if row[c] != D), k)
    prev = None
    for c in range(i, k):
        s = row[c]
        if not s.is_N or s.q != q:
            return Violation(q, c, f"fRT5 needs N-symbols of S_{q} between the Δs and the Rs")
        if prev is not None and not leqC(prev, s):
            return Violation(q, c, "fRT5 needs nondecreasing N-symbols")
        prev = s
    return None


def _verticality(rows, width) -> Violation | None:
    for q in range(1, len(rows)):
        for c in range(width):
            s, below = rows[q][c], rows[q - 1][c]
            if s.is_N and (below in (D, MUU, MUD) or below.is_N):
                return Violation(q, c, "V1")
            if q >= 2 and s == R and below != R:
                return Violation(q, c, "V2")
    return None


def validate_fc(M: FCMatrix) -> Violation | None:
    """None if M is an fC-matrix, otherwise the first violated condition."""
    if M.n < 1 or M.d < 0:
        return Violation(None, None, "need n >= 1 and d >= 0")
    for q, row in enumerate(M.rows):
        for c, s in enumerate(row):
            if s.kind in ("lam", "rho"):
                return Violation(q, c, "no λ or ρ in a finitary matrix")
            if s.is_N and not (2 <= q <= M.n and s.q == q):
                return Violation(q, c, "N-symbol in the wrong row")
    t = M.row01
    if isinstance(t, Violation):
        return t
    for q in range(2, M.n + 1):
        v = _check_upper_row(M.rows[q], q, M.d)
        if v:
            return v
    return _verticality(M.rows, M.d + 1)


def _rows01(n, d) -> Iterator[tuple[tuple, tuple]]:
    w = d + 1
    zetas = (D,) if n == 1 else ZETAS

    def row(*segments):
        out = []
        for sym, count in segments:
            out.extend([sym] * count)
        assert len(out) == w
        return tuple(out)

    for k in range(w + 1):
        yield row((D, k), (R, w - k)), row((D, k), (R, w - k))
    for i in range(d + 1):
        for k in range(i + 1, d + 1):
            for z in zetas:
                yield (row((D, i), (MU, k - i), (R, w - k)),
                       row((D, i), (z, 1), (MU, k - i), (R, w - k - 1)))
    for k in range(w + 1):
        for l in range(k + 1, w + 1):
            for z in zetas:
                yield row((D, k), (R, w - k)), row((D, l - 1), (z, 1), (R, w - l))
    for k in range(1, w + 1):
        for l in range(k + 2, w + 1):
            yield (row((D, k - 1), (MU, 1), (R, w - k)),
                   row((D, l - 1), (MU, 1), (R, w - l)))


def _upper_rows(q, d) -> list[tuple]:
    w = d + 1
    syms = n_symbols(q)
    out = []
    for k in range(w + 1):
        for i in range(k + 1):
            for seq in combinations_with_replacement(syms, k - i):
                out.append((D,) * i + tuple(seq) + (R,) * (w - k))
    return out


def _compatible(upper, lower) -> bool:
    for s, below in zip(upper, lower):
        if s.is_N and (below in (D, MUU, MUD) or below.is_N):
            return False
        if s == R and below != R:
            return False
    return True


def enumerate_fc(n: int, d: int) -> list[FCMatrix]:
    """All fC-matrices for Ptw(n,d) in deterministic order.

    For n = 1 the redundant symbols are dropped (the entry ζ is always Δ), so
    the output is in bijection with the congruences.
    """
    if n < 1 or d < 0:
        raise InvalidInput("need n >= 1 and d >= 0")
    uppers = [_upper_rows(q, d) for q in range(2, n + 1)]
    out = []

    def extend(rows):
        q = len(rows)
        if q > n:
            out.append(FCMatrix(n, d, tuple(rows)))
            return
        for cand in uppers[q - 2]:
            if _compatible(cand, rows[-1]):
                extend(rows + [cand])

    for r0, r1 in _rows01(n, d):
        extend([r0, r1])
    return out


def normalize_fc(M: FCMatrix) -> FCMatrix:
    """For n = 1, rewrite the entry ζ to Δ (μ↑, μ↓ and unmatched μ act as Δ)."""
    if M.n != 1:
        return M
    t = M.row01
    if isinstance(t, Violation) or t.zeta_col is None or M.rows[1][t.zeta_col] == D:
        return M
    r1 = list(M.rows[1])
    r1[t.zeta_col] = D
    return FCMatrix(M.n, M.d, (M.rows[0], tuple(r1)))


def cg_fc_member(M: FCMatrix, a, b) -> bool:
    if a is ZERO or b is ZERO:
        if a is ZERO and b is ZERO:
            return True
        x = b if a is ZERO else a
        return M.rows[x.p.rank][x.i] == R
    alpha, beta = a.p, b.p
    q, r, i, j = alpha.rank, beta.rank, a.i, b.i
    s = M.rows[q][i]
    if s != M.rows[r][j]:
        return False
    kind = s.kind
    if kind == "R":
        return True
    if kind == "D":
        return i == j and alpha == beta
    if kind == "N":
        return i == j and greens(alpha, beta, "H") and subgroup_contains(s.group, pd(alpha, beta))
    if alpha.hat != beta.hat:
        return False
    if kind == "muD":
        return greens(alpha, beta, "L")
    if kind == "muU":
        return greens(alpha, beta, "R")
    # mu
    return (q, i) == (r, j) or i - j == M.mins[q] - M.mins[r]


def includes_fc(M1: FCMatrix, M2: FCMatrix) -> bool:
    """cg(M1) is contained in cg(M2)."""
    if (M1.n, M1.d) != (M2.n, M2.d):
        raise InvalidInput("matrices of different shapes")
    for r1, r2 in zip(M1.rows, M2.rows):
        if not all(leqC(s, t) for s, t in zip(r1, r2)):
            return False
    t1 = M1.row01
    if t1.name not in ("fRT2", "fRT4"):
        return True
    if M2.mins[0] <= t1.muin[0] and M2.mins[1] <= t1.muin[1]:
        return True
    return (M2.row01.name in ("fRT2", "fRT4")
            and M2.mins[1] - M2.mins[0] == M1.mins[1] - M1.mins[0])


def _column(n, entries: dict) -> FCMatrix:
    return FCMatrix(n, 0, tuple((entries.get(q, D),) for q in range(n + 1)))


def family_d0(n: int) -> list[tuple[str, FCMatrix]]:
    """The congruences of Ptw(n,0) as named single-column matrices."""
    if n < 2:
        raise InvalidInput("the d = 0 family is stated for n >= 2")

    def rees(q):
        return {p: R for p in range(q + 1)}

    out = [("Delta", _column(n, {})), ("R_0", _column(n, rees(0)))]
    out += [("mu_down", _column(n, {0: R, 1: MUD})), ("mu_up", _column(n, {0: R, 1: MUU})),
            ("mu", _column(n, {0: R, 1: MU})), ("R_1", _column(n, rees(1)))]
    out.append(("mu_S2", _column(n, {0: R, 1: MU, 2: n_symbols(2)[0]})))
    for q in range(2, n + 1):
        for s in n_symbols(q):
            out.append((f"R_{s}", _column(n, {**rees(q - 1), q: s})))
        out.append((f"R_{q}", _column(n, rees(q))))
    return out


def family_n1(d: int) -> list[tuple[str, FCMatrix]]:
    """The three families R_ij, sigma_ij, tau_ij of congruences on Ptw(1,d)."""
    if d < 0:
        raise InvalidInput("need d >= 0")
    w = d + 1

    def mat(r0, r1):
        return FCMatrix(1, d, (tuple(r0), tuple(r1)))

    out = []
    for i in range(w + 1):
        for j in range(i, w + 1):
            out.append((f"R_{i}{j}", mat([D] * i + [R] * (w - i), [D] * j + [R] * (w - j))))
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            out.append((f"sigma_{i}{j}", mat([D] * i + [MU] * (j - i) + [R] * (w - j),
                                             [D] * (i + 1) + [MU] * (j - i) + [R] * (w - j - 1))))
    for i in range(1, w + 1):
        for j in range(i + 2, w + 1):
            out.append((f"tau_{i}{j}", mat([D] * (i - 1) + [MU] + [R] * (w - i),
                                           [D] * (j - 1) + [MU] + [R] * (w - j))))
    return out


def is_rees_fc(M: FCMatrix) -> bool:
    """R-region closed downward in rank and rightward in column, Δ elsewhere."""
    for q, row in enumerate(M.rows):
        for i, s in enumerate(row):
            if s == R:
                if q > 0 and M.rows[q - 1][i] != R:
                    return False
                if i < M.d and row[i + 1] != R:
                    return False
            elif s != D:
                return False
    return True
