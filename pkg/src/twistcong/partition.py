"""Partition monoid P_n: products with floating components, structural maps,
Green's relations, permutational differences and the congruences of P_n.

Vertex codes: 1..n are upper vertices, n+1..2n are lower vertices (code n+v is v').
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

MAX_ENUM_DEGREE = 5


class InvalidInput(ValueError):
    pass


def _canonical(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


@dataclass(frozen=True)
class Partition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("degree must be positive")
        flat = sorted(c for b in self.blocks for c in b)
        if flat != list(range(1, 2 * self.n + 1)):
            raise InvalidInput(f"blocks do not partition 1..{2 * self.n}")
        if any(len(b) == 0 for b in self.blocks):
            raise InvalidInput("empty block")
        object.__setattr__(self, "blocks", _canonical(self.blocks))

    @classmethod
    def from_labels(cls, n: int, labels) -> "Partition":
        """Build from a block label per code 1..2n (labels[k] is the block of code k+1)."""
        groups: dict = {}
        for code, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(code)
        return cls(n, tuple(tuple(g) for g in groups.values()))

    @classmethod
    def from_signed(cls, blocks) -> "Partition":
        """Build from signed labels: upper v is v, lower v' is -v."""
        n = max(abs(x) for b in blocks for x in b)
        return cls(n, tuple(tuple(x if x > 0 else n - x for x in b) for b in blocks))

    def to_signed(self) -> list[list[int]]:
        n = self.n
        return [[c if c <= n else -(c - n) for c in b] for b in self.blocks]

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(n, tuple((v, n + v) for v in range(1, n + 1)))

    @classmethod
    def omega(cls, n: int) -> "Partition":
        return cls(n, (tuple(range(1, 2 * n + 1)),))

    @classmethod
    def from_permutation(cls, images) -> "Partition":
        """The unit with transversals {v} u {images[v-1]}'."""
        n = len(images)
        return cls(n, tuple((v, n + images[v - 1]) for v in range(1, n + 1)))

    @cached_property
    def labels(self) -> tuple[int, ...]:
        lab = [0] * (2 * self.n)
        for k, b in enumerate(self.blocks):
            for c in b:
                lab[c - 1] = k
        return tuple(lab)

    @cached_property
    def transversals(self) -> tuple[tuple[frozenset, frozenset], ...]:
        """(upper part, lower part) of each transversal, ordered by minimum upper element."""
        n = self.n
        out = []
        for b in self.blocks:
            up = frozenset(c for c in b if c <= n)
            lo = frozenset(c - n for c in b if c > n)
            if up and lo:
                out.append((up, lo))
        out.sort(key=lambda t: min(t[0]))
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.transversals)

    @cached_property
    def dom(self) -> frozenset:
        return frozenset().union(*(t[0] for t in self.transversals))

    @cached_property
    def codom(self) -> frozenset:
        return frozenset().union(*(t[1] for t in self.transversals))

    @cached_property
    def ker(self) -> frozenset:
        n = self.n
        return frozenset(
            frozenset(c for c in b if c <= n) for b in self.blocks if b[0] <= n
        )

    @cached_property
    def coker(self) -> frozenset:
        n = self.n
        return frozenset(
            frozenset(c - n for c in b if c > n) for b in self.blocks if b[-1] > n
        )

    @cached_property
    def hat(self) -> "Partition":
        n = self.n
        parts = []
        for b in self.blocks:
            up = tuple(c for c in b if c <= n)
            lo = tuple(c for c in b if c > n)
            parts.extend(p for p in (up, lo) if p)
        return Partition(self.n, tuple(parts))

    @cached_property
    def star(self) -> "Partition":
        """Reflection swapping upper and lower rows."""
        n = self.n
        return Partition(n, tuple(tuple(c + n if c <= n else c - n for c in b) for b in self.blocks))

    def __mul__(self, other: "Partition") -> "Partition":
        return multiply(self, other)[0]

    def __repr__(self):
        return f"Partition({self.to_signed()})"


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def multiply(a: Partition, b: Partition) -> tuple[Partition, int]:
    """Product ab together with the number of floating components."""
    if a.n != b.n:
        raise InvalidInput("degree mismatch")
    n = a.n
    # nodes 0..n-1 upper of a, n..2n-1 lower of b, 2n..3n-1 middle row
    parent = list(range(3 * n))

    def node_a(c):
        return c - 1 if c <= n else 2 * n + c - n - 1

    def node_b(c):
        return 2 * n + c - 1 if c <= n else c - 1

    for blocks, node in ((a.blocks, node_a), (b.blocks, node_b)):
        for blk in blocks:
            r = _find(parent, node(blk[0]))
            for c in blk[1:]:
                s = _find(parent, node(c))
                if s != r:
                    parent[s] = r
    roots = [_find(parent, x) for x in range(3 * n)]
    product = Partition.from_labels(n, roots[: 2 * n])
    floats = len(set(roots[2 * n:]) - set(roots[: 2 * n]))
    return product, floats


def hat(a: Partition) -> Partition:
    return a.hat


def greens(a: Partition, b: Partition, relation: str) -> bool:
    if a.n != b.n:
        raise InvalidInput("degree mismatch")
    if relation == "R":
        return a.dom == b.dom and a.ker == b.ker
    if relation == "L":
        return a.codom == b.codom and a.coker == b.coker
    if relation == "H":
        return greens(a, b, "R") and greens(a, b, "L")
    if relation == "D":
        return a.rank == b.rank
    raise InvalidInput(f"unknown relation {relation!r}")


@dataclass(frozen=True)
class Permutation:
    q: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, self.q + 1)):
            raise InvalidInput("images is not a permutation")

    def cycle_type(self) -> tuple[int, ...]:
        seen = set()
        lengths = []
        for s in range(1, self.q + 1):
            if s in seen:
                continue
            k, x = 0, s
            while x not in seen:
                seen.add(x)
                x = self.images[x - 1]
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))

    @property
    def sign(self) -> int:
        return -1 if sum(c - 1 for c in self.cycle_type()) % 2 else 1

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.q + 1))


def pd(a: Partition, b: Partition, order: tuple[int, ...] | None = None) -> Permutation:
    """Permutational difference of H-related a, b.

    ``order`` optionally permutes a's transversal ordering; the result then
    changes only by conjugation.
    """
    if not greens(a, b, "H") or a.rank == 0:
        raise InvalidInput("pd needs H-related partitions of positive rank")
    ta = list(a.transversals)
    if order is not None:
        ta = [ta[k] for k in order]
    lower_index = {lo: k for k, (_, lo) in enumerate(ta, start=1)}
    pairing = dict(b.transversals)
    return Permutation(a.rank, tuple(lower_index[pairing[up]] for up, _ in ta))


@dataclass(frozen=True)
class NormalSubgroup:
    kind: str  # "trivial" | "klein" | "alternating" | "symmetric"
    q: int

    def __post_init__(self):
        if self.kind not in _LEVEL:
            raise InvalidInput(f"unknown subgroup kind {self.kind!r}")
        if self.kind == "klein" and self.q != 4:
            raise InvalidInput("Klein4 needs q = 4")
        if self.q < 1:
            raise InvalidInput("q must be positive")

    @property
    def level(self) -> int:
        """Position in the chain of normal subgroups of S_q (trivial lowest)."""
        if self.kind == "alternating" and self.q <= 2:
            return 0
        return _LEVEL[self.kind]

    @property
    def is_trivial(self) -> bool:
        return self.level == 0

    def contains(self, p: Permutation) -> bool:
        return subgroup_contains(self, p)


_LEVEL = {"trivial": 0, "klein": 1, "alternating": 2, "symmetric": 3}


def subgroup_contains(N: NormalSubgroup, p: Permutation) -> bool:
    if N.q != p.q:
        raise InvalidInput("subgroup and permutation degrees differ")
    if N.kind == "symmetric":
        return True
    if N.kind == "alternating":
        return p.sign == 1
    if N.kind == "klein":
        return p.is_identity or p.cycle_type() == (2, 2)
    return p.is_identity


def nontrivial_normal_subgroups(q: int) -> list[NormalSubgroup]:
    """Nontrivial normal subgroups of S_q in increasing order."""
    if q < 2:
        return []
    if q == 2:
        return [NormalSubgroup("symmetric", 2)]
    if q == 4:
        return [NormalSubgroup("klein", 4), NormalSubgroup("alternating", 4), NormalSubgroup("symmetric", 4)]
    return [NormalSubgroup("alternating", q), NormalSubgroup("symmetric", q)]


def restricted_growth_strings(length: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of the given length in lexicographic order."""
    if length == 0:
        yield ()
        return
    s = [0] * length

    def rec(pos, top):
        if pos == length:
            yield tuple(s)
            return
        for v in range(top + 2):
            s[pos] = v
            yield from rec(pos + 1, max(top, v))

    s[0] = 0
    yield from rec(1, 0)


def enumerate_partitions(n: int) -> list[Partition]:
    if not 1 <= n <= MAX_ENUM_DEGREE:
        raise InvalidInput(f"degree must be in 1..{MAX_ENUM_DEGREE}")
    return [Partition.from_labels(n, rgs) for rgs in restricted_growth_strings(2 * n)]


@dataclass(frozen=True)
class PnCongruence:
    name: str
    member: Callable[[Partition, Partition], bool]

    def __call__(self, a: Partition, b: Partition) -> bool:
        return self.member(a, b)


def _hat_rel(kind: str):
    if kind == "mu":
        return lambda a, b: a.hat == b.hat
    rel = "L" if kind == "lambda" else "R"
    return lambda a, b: greens(a.hat, b.hat, rel)


def _nu(N: NormalSubgroup):
    def rel(a, b):
        return (
            a.rank == b.rank == N.q
            and greens(a, b, "H")
            and subgroup_contains(N, pd(a, b))
        )

    return rel


def enumerate_cong_Pn(n: int) -> list[PnCongruence]:
    """The congruences of P_n, each with a membership predicate."""
    if n < 1:
        raise InvalidInput("n must be positive")
    out: list[PnCongruence] = []

    def rees(q):
        return lambda a, b: a == b or (a.rank <= q and b.rank <= q)

    if n == 1:
        # P_1 is a two-element semilattice: only the trivial and universal relations
        return [PnCongruence("mu_0", lambda a, b: a == b), PnCongruence("R_1", rees(1))]

    for q in (0, 1):
        for kind in ("mu", "lambda", "rho"):
            base = _hat_rel(kind)
            if kind == "mu" and q == 0:
                out.append(PnCongruence("mu_0", lambda a, b: a == b))
                continue
            out.append(PnCongruence(
                f"{kind}_{q}",
                lambda a, b, q=q, base=base: a == b or (a.rank <= q and b.rank <= q and base(a, b)),
            ))
    s2 = _nu(NormalSubgroup("symmetric", 2))
    for kind in ("mu", "lambda", "rho"):
        base = _hat_rel(kind)
        out.append(PnCongruence(
            f"{kind}_S2",
            lambda a, b, base=base: a == b or (a.rank <= 1 and b.rank <= 1 and base(a, b)) or s2(a, b),
        ))
    for q in range(0, n + 1):
        out.append(PnCongruence(f"R_{q}", rees(q)))
        if q >= 2:
            for N in nontrivial_normal_subgroups(q):
                nu = _nu(N)
                out.append(PnCongruence(
                    f"R_{subgroup_name(N)}",
                    lambda a, b, q=q, nu=nu: a == b or (a.rank < q and b.rank < q) or nu(a, b),
                ))
    return out


def subgroup_name(N: NormalSubgroup) -> str:
    if N.is_trivial:
        return "1"
    letter = {"klein": "K", "alternating": "A", "symmetric": "S"}[N.kind]
    return f"{letter}{N.q}"
