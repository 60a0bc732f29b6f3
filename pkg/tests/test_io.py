import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diskarr.analysis import verify_bounds
from diskarr.arrangement import build_arrangement
from diskarr.generators import comb_pair, grid_instance, random_instance, spiral_pair
from diskarr.io import (
    InstanceFormatError,
    canonicalize,
    format_rational,
    parse_instance,
    parse_rational,
    read_instance,
    report_to_dict,
    serialize_instance,
    serialize_report,
    write_instance,
)

SQUARE = '{"format_version": 1, "disks": [[["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]]}'


def test_rational_examples():
    assert parse_rational("-2/4") == Fraction(-1, 2)
    assert format_rational(parse_rational("-2/4")) == "-1/2"
    assert parse_rational("7") == 7
    with pytest.raises(InstanceFormatError, match="zero denominator"):
        parse_rational("3/0")
    for bad in ["1.5", "1/-2", "one", "", "1/2/3"]:
        with pytest.raises(InstanceFormatError):
            parse_rational(bad)
    with pytest.raises(InstanceFormatError):
        parse_rational(0.5)


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize("inst", [spiral_pair(3), grid_instance(2, 1), comb_pair(2), random_instance(3, 10, 4)],
                         ids=["spiral", "grid", "comb", "random"])
def test_instance_round_trip(inst):
    text = serialize_instance(inst)
    back = parse_instance(text)
    assert [d.vertices for d in back.disks] == [d.canonical().vertices for d in inst.disks]
    assert back.expected == inst.expected and back.markers == inst.markers
    assert back.generator == inst.generator and back.params == inst.params
    assert serialize_instance(back) == text
    assert canonicalize(text.encode()) == text


def test_canonical_form_normalises():
    messy = ('{"disks": [[["0", "0"], ["0", "2/2"], ["4/4", "1"], [" 1 ", "0/3"]]],'
             ' "format_version": 1, "expected": {"mu": 1}}')
    canon = canonicalize(messy)
    doc = json.loads(canon)
    # clockwise input comes back counterclockwise, in lowest terms
    assert doc["disks"] == [[["0/1", "0/1"], ["1/1", "0/1"], ["1/1", "1/1"], ["0/1", "1/1"]]]
    assert canonicalize(canon) == canon


def test_start_vertex_does_not_matter():
    a = SQUARE
    b = SQUARE.replace('[["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]]', '[["1", "1"], ["0", "1"], ["0", "0"], ["1", "0"]]')
    assert a != b and canonicalize(a) == canonicalize(b)


def test_file_round_trip(tmp_path):
    inst = spiral_pair(4)
    path = tmp_path / "s.json"
    write_instance(inst, path)
    assert serialize_instance(read_instance(path)) == path.read_text()


@pytest.mark.parametrize("text, where", [
    ("{nope", "line 1 column 2"),
    ("[]", "top level"),
    ('{"format_version": 2, "disks": []}', "format_version"),
    ('{"format_version": 1}', "disks"),
    ('{"format_version": 1, "disks": [[["0", "0"], ["1", "0"], ["1", "1/0"]]]}', r"disks\[0\]\[2\]\.y"),
    ('{"format_version": 1, "disks": [[["0", "0"], ["1", "0"]]]}', r"disks\[0\]"),
    ('{"format_version": 1, "disks": [[["0", "0"], ["2", "0"], ["0", "2"], ["2", "2"]]]}', r"disks\[0\]"),
    ('{"format_version": 1, "disks": [[[0, 0], ["1", "0"], ["1", "1"]]]}', r"disks\[0\]\[0\]\.x"),
    ('{"format_version": 1, "disks": [[["0", "0"], ["1"]]]}', r"disks\[0\]\[1\]"),
    (SQUARE[:-1] + ', "expected": {"mu": "two"}}', "expected"),
    (SQUARE[:-1] + ', "markers": {"a": ["1"]}}', "markers.a"),
])
def test_parse_errors_are_positioned(text, where):
    with pytest.raises(InstanceFormatError, match=where):
        parse_instance(text)


def test_rejects_non_utf8():
    with pytest.raises(InstanceFormatError, match="UTF-8"):
        parse_instance(b"\xff\xfe")


def test_report_format():
    inst = spiral_pair(3)
    report = verify_bounds(build_arrangement(inst.disks))
    checks = [{"name": "delta", "expected": 3, "measured": 3, "status": "PASS"}]
    doc = report_to_dict(report, checks, {"build_s": 0.1})
    assert doc["status"] == "PASS" and doc["delta"] == 3 and doc["diameter"] == 6
    assert doc["delta_matrix"] == [[0, 3], [3, 0]]
    assert {v["status"] for v in doc["verdicts"]} == {"PASS"}
    assert all("slack" in v for v in doc["verdicts"])
    assert json.loads(serialize_report(report, checks)) == {**doc, "timings": {}}

    checks[0]["status"] = "FAIL"
    assert report_to_dict(report, checks)["status"] == "FAIL"
