from fractions import Fraction as F

import pytest

from qdvolumes.table import (
    TableFormatError,
    default_table_path,
    find_conflicts,
    load_table,
    serialize_table,
    summarize,
    verify_table,
)

HEADER = "dim,genus,stratum,num,den,pi_power\n"


def test_round_trip_is_byte_identical():
    text = default_table_path().read_text()
    assert serialize_table(load_table()) == text


def test_sample_row(tmp_path):
    f = tmp_path / "t.csv"
    f.write_text(HEADER + "4,2,5 -1,28,135,4\n")
    rows = load_table(f)
    assert rows[0].coefficient == F(28, 135)
    [rep] = verify_table(rows, 4)
    assert rep.status == "PASS"


@pytest.mark.parametrize(
    "line",
    ["4,2,5 -1,28,135,2", "4,1,5 -1,28,135,4", "5,2,5 -1,28,135,4", "4,2,3 -1,1,1,4", "4,2,5 -1,0,1,4", "4,2,5 -1,x,1,4"],
)
def test_rejects_inconsistent_rows(tmp_path, line):
    f = tmp_path / "t.csv"
    f.write_text(HEADER + line + "\n")
    with pytest.raises(TableFormatError):
        load_table(f)


def test_rejects_bad_header(tmp_path):
    f = tmp_path / "t.csv"
    f.write_text("a,b\n1,2\n")
    with pytest.raises(TableFormatError):
        load_table(f)


def test_known_conflicts():
    conflicts = find_conflicts(load_table())
    names = {s.display() for s in conflicts}
    assert {"4,1^2,-1^6", "4,3,-1^7"} <= names
    vals = {r.coefficient for r in conflicts[next(s for s in conflicts if s.display() == "4,1^2,-1^6")]}
    assert vals == {F(743, 1260), F(1531, 2520)}
    reps = verify_table(load_table(), 4)
    flagged = [r for r in reps if r.status == "CONFLICT"]
    assert {r.row.stratum.display() for r in flagged} == names
    assert all(r.computed is None for r in flagged)


def test_conflicts_reported_not_resolved(tmp_path):
    f = tmp_path / "t.csv"
    f.write_text(HEADER + "3,1,2 -1^2,4,3,2\n3,1,2 -1^2,5,3,2\n2,0,-1^4,2,1,2\n")
    reps = verify_table(load_table(f), 4)
    assert [r.status for r in reps] == ["PASS", "CONFLICT", "CONFLICT"]
    assert {r.detail for r in reps if r.status == "CONFLICT"} == {"matches pipeline", "differs from pipeline"}


def test_deterministic_order(tmp_path):
    lines = ["2,0,-1^4,2,1,2", "3,1,2 -1^2,4,3,2", "4,2,5 -1,28,135,4", "9,1,4 3 -1^7,71,72,8"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    a.write_text(HEADER + "\n".join(lines) + "\n")
    b.write_text(HEADER + "\n".join(reversed(lines)) + "\n")
    ra = [(r.row.stratum, r.status, r.computed) for r in verify_table(load_table(a), 4)]
    rb = [(r.row.stratum, r.status, r.computed) for r in verify_table(load_table(b), 4, workers=2)]
    assert ra == rb
    assert summarize(verify_table(load_table(a), 4)) == {"PASS": 3, "SKIP": 1}


def test_wrong_value_fails(tmp_path):
    f = tmp_path / "t.csv"
    f.write_text(HEADER + "2,0,-1^4,3,1,2\n")
    [rep] = verify_table(load_table(f), 4)
    assert rep.status == "FAIL" and rep.computed == 2
