"""JSON and CSV serialization."""

from __future__ import annotations

import csv
import io
import json

from .cpair import CPair, RowSpec
from .fcmatrix import FCMatrix
from .natcong import NatCong
from .oracle import CongRelation
from .partition import InvalidInput, Partition
from .twisted import ZERO, Pair


def partition_to_json(p: Partition) -> list:
    return p.to_signed()


def partition_from_json(obj, n: int | None = None) -> Partition:
    try:
        p = Partition.from_signed(obj)
    except (TypeError, ValueError) as e:
        raise InvalidInput(f"malformed partition: {obj!r}") from e
    if n is not None and p.n != n:
        raise InvalidInput(f"partition has degree {p.n}, expected {n}")
    return p


def element_to_json(x) -> object:
    if x is ZERO:
        return "zero"
    return {"i": x.i, "p": partition_to_json(x.p)}


def element_from_json(obj, n: int | None = None):
    if obj == "zero":
        return ZERO
    if not isinstance(obj, dict) or set(obj) != {"i", "p"} or not isinstance(obj["i"], int) or obj["i"] < 0:
        raise InvalidInput(f"malformed element: {obj!r}")
    return Pair(obj["i"], partition_from_json(obj["p"], n))


def natcong_to_json(t: NatCong) -> object:
    return "trivial" if t.is_trivial else {"min": t.m, "per": t.d}


def natcong_from_json(obj) -> NatCong:
    if obj == "trivial":
        return NatCong()
    if not isinstance(obj, dict) or set(obj) != {"min", "per"}:
        raise InvalidInput(f"malformed congruence on N: {obj!r}")
    return NatCong(obj["min"], obj["per"])


def cpair_to_json(P: CPair, exceptional: bool = False) -> dict:
    return {
        "n": P.n,
        "theta": [natcong_to_json(t) for t in P.theta],
        "rows": [{"prefix": [s.token for s in r.prefix], "tail": r.tail.token} for r in P.rows],
        "exceptional": exceptional,
    }


def cpair_from_json(obj) -> tuple[CPair, bool]:
    try:
        n = obj["n"]
        theta = [natcong_from_json(t) for t in obj["theta"]]
        rows = [RowSpec.from_tokens(r["prefix"], r["tail"]) for r in obj["rows"]]
        exc = bool(obj.get("exceptional", False))
    except (KeyError, TypeError) as e:
        raise InvalidInput(f"malformed C-pair: {e}") from e
    return CPair(n, tuple(theta), tuple(rows)), exc


def fc_to_json(M: FCMatrix) -> dict:
    return {"n": M.n, "d": M.d, "rows": M.tokens()}


def fc_from_json(obj) -> FCMatrix:
    try:
        return FCMatrix.from_tokens(obj["n"], obj["d"], obj["rows"])
    except (KeyError, TypeError) as e:
        raise InvalidInput(f"malformed fC-matrix: {e}") from e


def relation_to_json(rel: CongRelation) -> dict:
    return {"classes": rel.classes()}


def relation_from_json(obj, size: int) -> CongRelation:
    try:
        classes = [list(c) for c in obj["classes"]]
    except (KeyError, TypeError) as e:
        raise InvalidInput(f"malformed relation: {e}") from e
    flat = [k for c in classes for k in c]
    if sorted(flat) != list(range(size)):
        raise InvalidInput(f"classes must partition 0..{size - 1}")
    return CongRelation.from_classes(classes, size)


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def load_file(path):
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInput(f"cannot read {path}: {e}") from e


def count_rows_csv(rows, timing: bool = True) -> str:
    """CSV with header n,d,count,seconds; seconds left empty when timing is off."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "d", "count", "seconds"])
    for n, d, count, secs in rows:
        w.writerow([n, d, count, f"{secs:.3f}" if timing else ""])
    return buf.getvalue()
