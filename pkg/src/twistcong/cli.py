"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .cpair import includes, is_exceptional, leq_C, member, validate
from .fcmatrix import enumerate_fc
from .io import (count_rows_csv, cpair_from_json, dumps, element_from_json, fc_to_json,
                 load_file, relation_from_json)
from .lattice import build_lattice, lattice_dot, lattice_json
from .oracle import all_congruences, bell_number, build_monoid, classify
from .partition import InvalidInput
from .verify import verify

MAX_ENUM = (6, 8)


def _nd(args):
    if args.n < 1 or args.d < 0:
        raise InvalidInput("need n >= 1 and d >= 0")
    if args.n > MAX_ENUM[0] or args.d > MAX_ENUM[1]:
        raise InvalidInput(f"(n,d) over the budget (n <= {MAX_ENUM[0]}, d <= {MAX_ENUM[1]})")
    return args.n, args.d


def cmd_enum(args, out):
    n, d = _nd(args)
    mats = enumerate_fc(n, d)
    if args.json:
        out.write(dumps([fc_to_json(M) for M in mats]))
    else:
        for k, M in enumerate(mats):
            out.write(f"# {k}\n{M.grid()}\n")
        out.write(f"{len(mats)} matrices\n")
    return 0


def cmd_lattice(args, out):
    n, d = _nd(args)
    L = build_lattice(n, d)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as f:
            f.write(lattice_dot(L, labels=args.labels, rank=args.rank))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as f:
            f.write(dumps(lattice_json(L)))
    out.write(f"nodes={len(L.nodes)} edges={len(L.hasse)} rees={len(L.rees)}\n")
    return 0


def cmd_count_table(args, out):
    if args.max_n < 1 or args.max_d < 0:
        raise InvalidInput("need max-n >= 1 and max-d >= 0")
    rows = []
    for n in range(1, args.max_n + 1):
        for d in range(args.max_d + 1):
            t = time.perf_counter()
            count = len(enumerate_fc(n, d))
            if args.oracle:
                size = (d + 1) * bell_number(2 * n) + 1
                if size <= args.oracle_limit:
                    got = len(all_congruences(build_monoid(n, d)))
                    if got != count:
                        raise InvalidInput(f"oracle count {got} differs from {count} at ({n},{d})")
            rows.append((n, d, count, time.perf_counter() - t))
    out.write(count_rows_csv(rows, timing=not args.no_timing))
    return 0


def cmd_verify(args, out):
    n, d = _nd(args)
    rep = verify(n, d, args.level)
    extra = f" congruences={rep.congruences}" if rep.congruences is not None else ""
    out.write(f"verify n={n} d={d} level={args.level} matrices={rep.matrices}{extra}: "
              f"{'ok' if rep.ok else 'FAILED'}\n")
    for p in rep.problems:
        out.write(f"  {p}\n")
    return 0 if rep.ok else 1


def _load_cpair(path):
    P, exc = cpair_from_json(load_file(path))
    v = validate(P)
    if v is not None:
        raise InvalidInput(f"{path}: invalid C-pair: {v}")
    if exc and is_exceptional(P) is None:
        raise InvalidInput(f"{path}: exceptional flag on a non-exceptional C-pair")
    return P, exc


def cmd_member(args, out):
    P, exc = _load_cpair(args.cpair)
    exc = exc or args.exceptional
    if exc and is_exceptional(P) is None:
        raise InvalidInput("C-pair is not exceptional")
    try:
        a = element_from_json(json.loads(args.a), P.n)
        b = element_from_json(json.loads(args.b), P.n)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"malformed element: {e}") from e
    out.write(f"{str(member(P, a, b, exc)).lower()}\n")
    return 0


def cmd_compare(args, out):
    P1, e1 = _load_cpair(args.first)
    P2, e2 = _load_cpair(args.second)
    if P1.n != P2.n:
        raise InvalidInput("C-pairs of different degrees")
    res = {"leq_C": leq_C(P1, P2), "includes_12": includes(P1, P2, e1, e2), "includes_21": includes(P2, P1, e2, e1)}
    out.write(dumps(res))
    return 0


def cmd_classify(args, out):
    n, d = _nd(args)
    m = build_monoid(n, d)
    rel = relation_from_json(load_file(args.relation), m.size)
    out.write(dumps(fc_to_json(classify(m, rel))))
    return 0


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistcong", description="Congruences of twisted partition monoids.")
    sub = p.add_subparsers(dest="command", required=True)

    def nd(s):
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--d", type=int, required=True)

    s = sub.add_parser("enum", help="list the fC-matrices of Ptw(n,d)")
    nd(s)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("lattice", help="build Cong(Ptw(n,d)) and export it")
    nd(s)
    s.add_argument("--dot", metavar="PATH")
    s.add_argument("--json", metavar="PATH")
    s.add_argument("--labels", choices=("grid", "none"), default="grid")
    s.add_argument("--rank", action="store_true", help="align nodes by chain height")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("count-table", help="CSV of lattice sizes")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--max-d", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="cross-check counts against the oracle")
    s.add_argument("--oracle-limit", type=int, default=200, help="largest monoid size to brute-force")
    s.add_argument("--no-timing", action="store_true", help="leave the seconds column empty")
    s.set_defaults(func=cmd_count_table)

    s = sub.add_parser("verify", help="check the classification at (n,d)")
    nd(s)
    s.add_argument("--level", choices=("quick", "exhaustive"), default="quick")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("member", help="test whether two elements are related by a C-pair congruence")
    s.add_argument("cpair", metavar="CPAIR_FILE")
    s.add_argument("a", metavar="ELEMENT_A", help='JSON, e.g. {"i":0,"p":[[1,-1],[2],[-2]]}')
    s.add_argument("b", metavar="ELEMENT_B")
    s.add_argument("--exceptional", action="store_true")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("compare", help="inclusion between two C-pair congruences")
    s.add_argument("first", metavar="CPAIR_FILE_1")
    s.add_argument("second", metavar="CPAIR_FILE_2")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("classify", help="fC-matrix of an explicit congruence on Ptw(n,d)")
    nd(s)
    s.add_argument("--relation", required=True, metavar="FILE", help='JSON {"classes": [[indices]...]}')
    s.set_defaults(func=cmd_classify)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
