import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given

from twistcong.cli import run
from twistcong.corpus import exceptional_examples, noncomp_pair, rees_example
from twistcong.fcmatrix import enumerate_fc
from twistcong.io import (
    count_rows_csv,
    cpair_from_json,
    cpair_to_json,
    element_from_json,
    element_to_json,
    fc_from_json,
    fc_to_json,
    natcong_from_json,
    natcong_to_json,
    partition_from_json,
    partition_to_json,
    relation_from_json,
    relation_to_json,
)
from twistcong.natcong import NatCong
from twistcong.oracle import all_congruences, build_monoid
from twistcong.partition import InvalidInput, Partition
from twistcong.twisted import ZERO, Pair

from conftest import partitions


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_partition_json_example():
    blocks = [[2, 3, -4, -5], [1, 4], [5, 6], [-1, -2, -6], [-3]]
    p = partition_from_json(blocks)
    assert partition_to_json(p) == [[1, 4], [2, 3, -4, -5], [5, 6], [-1, -2, -6], [-3]]
    with pytest.raises(InvalidInput):
        partition_from_json([[1, 2], [2]])
    with pytest.raises(InvalidInput):
        partition_from_json(p.to_signed(), n=3)


@given(partitions())
def test_partition_round_trip(p):
    assert partition_from_json(json.loads(json.dumps(partition_to_json(p)))) == p


def test_element_and_natcong_json():
    x = Pair(3, Partition.identity(2))
    assert element_to_json(x) == {"i": 3, "p": [[1, -1], [2, -2]]}
    assert element_from_json(element_to_json(x)) == x
    assert element_to_json(ZERO) == "zero" and element_from_json("zero") is ZERO
    with pytest.raises(InvalidInput):
        element_from_json({"i": -1, "p": [[1, -1]]})
    assert natcong_to_json(NatCong()) == "trivial"
    assert natcong_to_json(NatCong(2, 3)) == {"min": 2, "per": 3}
    assert natcong_from_json({"min": 2, "per": 3}) == NatCong(2, 3)
    with pytest.raises(InvalidInput):
        natcong_from_json({"min": 2})


@pytest.mark.parametrize("P", [rees_example(), *exceptional_examples()])
def test_cpair_round_trip(P):
    js = json.loads(json.dumps(cpair_to_json(P, True)))
    assert set(js) == {"n", "theta", "rows", "exceptional"}
    assert cpair_from_json(js) == (P, True)


def test_fc_and_relation_json():
    for M in enumerate_fc(2, 1):
        assert fc_from_json(fc_to_json(M)) == M
    m = build_monoid(1, 1)
    for c in all_congruences(m):
        js = relation_to_json(c)
        assert js["classes"] == sorted(js["classes"], key=min)
        assert relation_from_json(js, m.size) == c
    with pytest.raises(InvalidInput):
        relation_from_json({"classes": [[0, 1]]}, 5)


def test_count_table_csv():
    code, text = cli("count-table", "--max-n", "2", "--max-d", "1", "--oracle", "--no-timing")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["n", "d", "count", "seconds"]
    assert [r[:3] for r in rows[1:]] == [["1", "0", "3"], ["1", "1", "7"], ["2", "0", "9"], ["2", "1", "43"]]
    assert cli("count-table", "--max-n", "2", "--max-d", "1", "--no-timing") == (0, text)
    assert count_rows_csv([(1, 0, 3, 0.5)]).splitlines()[1] == "1,0,3,0.500"


def test_lattice_command(tmp_path):
    dot, js = tmp_path / "out.dot", tmp_path / "out.json"
    code, text = cli("lattice", "--n", "3", "--d", "2", "--dot", str(dot), "--json", str(js), "--labels", "none")
    assert code == 0 and text.startswith("nodes=329 ")
    data = json.loads(js.read_text())
    assert len(data["nodes"]) == 329
    assert dot.read_text().count("fillcolor") == len(data["rees"])
    first = dot.read_text()
    cli("lattice", "--n", "3", "--d", "2", "--dot", str(dot), "--labels", "none")
    assert dot.read_text() == first


def test_enum_command():
    code, text = cli("enum", "--n", "1", "--d", "0", "--json")
    assert code == 0 and len(json.loads(text)) == 3
    code, text = cli("enum", "--n", "1", "--d", "1")
    assert text.endswith("7 matrices\n")


def test_verify_command():
    assert cli("verify", "--n", "2", "--d", "1", "--level", "exhaustive")[0] == 0
    code, text = cli("verify", "--n", "3", "--d", "1")
    assert code == 0 and "ok" in text


def test_member_and_compare(tmp_path):
    p1, p2 = noncomp_pair(2)
    f1, f2 = tmp_path / "p1.json", tmp_path / "p2.json"
    f1.write_text(json.dumps(cpair_to_json(p1)))
    f2.write_text(json.dumps(cpair_to_json(p2)))
    a = Partition.from_signed([[1, -1], [2], [-2]])
    x = json.dumps(element_to_json(Pair(0, a.hat)))
    y = json.dumps(element_to_json(Pair(1, a)))
    assert cli("member", str(f1), x, y) == (0, "true\n")
    assert cli("member", str(f2), x, y) == (0, "false\n")
    code, text = cli("compare", str(f1), str(f2))
    assert code == 0 and json.loads(text) == {"leq_C": True, "includes_12": False, "includes_21": False}


def test_classify_command(tmp_path):
    m = build_monoid(2, 1)
    c = all_congruences(m)[5]
    f = tmp_path / "rel.json"
    f.write_text(json.dumps(relation_to_json(c)))
    code, text = cli("classify", "--n", "2", "--d", "1", "--relation", str(f))
    assert code == 0
    assert fc_from_json(json.loads(text)) in set(enumerate_fc(2, 1))


def test_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli("compare", str(bad), str(bad))[0] == 2
    assert cli("enum", "--n", "0", "--d", "1")[0] == 2
    assert cli("classify", "--n", "4", "--d", "1", "--relation", str(bad))[0] == 2
    invalid = tmp_path / "invalid.json"
    js = cpair_to_json(rees_example())
    js["theta"][0] = "trivial"
    invalid.write_text(json.dumps(js))
    assert cli("member", str(invalid), '"zero"', '"zero"')[0] == 2
    assert "error:" in capsys.readouterr().err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "twistcong", "count-table", "--max-n", "1", "--max-d", "1",
                          "--no-timing"], capture_output=True, text=True, check=True)
    assert res.stdout == "n,d,count,seconds\n1,0,3,\n1,1,7,\n"
