import json
from fractions import Fraction

import pytest

from geoschottky.document import DocumentError, load, save
from geoschottky.families import truncate
from geoschottky.schottky import SchottkyDescription, describe


def build(kind, level, depth=None):
    desc = describe(truncate(kind, level, depth))
    return SchottkyDescription(desc.entries, kind=(kind, level, depth))


def test_save_contains_printed_matrix_strings():
    text = save(build("cantor", 1))
    doc = json.loads(text)
    assert doc["format_version"] == 1
    assert doc["kind"] == {"family": "cantor", "level": 1}
    entry = doc["entries"][0]
    assert entry["index"] == 1
    assert entry["matrix"] == ["-18", "323/12", "12", "-18"]
    assert entry["interval"] == ["17/12", "19/12"]
    assert entry["id"]["family"] == "cantor"


def test_round_trip_over_test_matrix():
    cases = [
        ("cantor", 1, None),
        ("cantor", 3, None),
        ("loch-ness", 0, None),
        ("loch-ness", 2, None),
        ("blooming", 1, 1),
        ("blooming", 2, 2),
    ]
    for kind, level, depth in cases:
        desc = build(kind, level, depth)
        assert load(save(desc)) == desc


def test_round_trip_is_byte_stable():
    desc = build("cantor", 2)
    text = save(desc)
    assert save(load(text)) == text


def test_custom_kind_round_trip():
    desc = describe(truncate("cantor", 1))  # kind=None
    text = save(desc)
    assert json.loads(text)["kind"] == "custom"
    assert load(text) == desc


def corrupt(mutator):
    doc = json.loads(save(build("cantor", 2)))
    mutator(doc)
    return json.dumps(doc)


def expect_rejection(text, reason, witness=None):
    with pytest.raises(DocumentError) as info:
        load(text)
    assert info.value.reason == reason
    if witness is not None:
        assert info.value.witness == witness
    return info.value


def test_corrupt_non_symmetric_index():
    def drop_negative_one(doc):
        doc["entries"] = [e for e in doc["entries"] if e["index"] != -1]

    expect_rejection(corrupt(drop_negative_one), "index-set-not-symmetric", 1)


def test_corrupt_zero_index():
    def zero_index(doc):
        doc["entries"][0]["index"] = 0

    expect_rejection(corrupt(zero_index), "bad-index", 0)


def test_corrupt_duplicate_index():
    def duplicate(doc):
        doc["entries"][2]["index"] = 1

    # entry 2 is renamed to 1: duplicate detected before symmetry
    expect_rejection(corrupt(duplicate), "duplicate-index", 1)


def test_corrupt_negative_determinant():
    def flip(doc):
        doc["entries"][0]["matrix"] = ["1", "0", "0", "-1"]

    expect_rejection(corrupt(flip), "determinant-not-positive", 1)


def test_corrupt_zero_determinant():
    def degenerate(doc):
        doc["entries"][1]["matrix"] = ["2", "4", "1", "2"]

    expect_rejection(corrupt(degenerate), "determinant-not-positive", -1)


def test_corrupt_interval_mismatch():
    def widen(doc):
        doc["entries"][0]["interval"] = ["1", "2"]

    expect_rejection(corrupt(widen), "interval-circle-mismatch", 1)


def test_corrupt_inverse_mismatch():
    def clone(doc):
        doc["entries"][1]["matrix"] = doc["entries"][0]["matrix"]
        doc["entries"][1]["interval"] = doc["entries"][0]["interval"]

    value = expect_rejection(corrupt(clone), "inverse-mismatch")
    assert abs(value.witness) == 1


def test_corrupt_rational_string():
    def garble(doc):
        doc["entries"][0]["matrix"][1] = "323//12"

    expect_rejection(corrupt(garble), "bad-rational", 1)


def test_corrupt_rational_type():
    def floatify(doc):
        doc["entries"][0]["matrix"][1] = 26.9166667

    expect_rejection(corrupt(floatify), "rational-not-a-string", 1)


def test_corrupt_interval_not_ordered():
    def reverse(doc):
        doc["entries"][0]["interval"] = ["19/12", "17/12"]

    expect_rejection(corrupt(reverse), "interval-not-ordered", 1)


def test_corrupt_format_version():
    def bump(doc):
        doc["format_version"] = 7

    expect_rejection(corrupt(bump), "format-version", 7)


def test_corrupt_json_syntax():
    expect_rejection("{not json", "json-syntax")


def test_corrupt_empty_entries():
    def clear(doc):
        doc["entries"] = []

    expect_rejection(corrupt(clear), "no-entries")


def test_json_numbers_never_carry_rationals():
    # every matrix/interval value is a string, so any conforming JSON
    # reader preserves them exactly
    doc = json.loads(save(build("blooming", 2, 3)))
    for entry in doc["entries"]:
        assert all(isinstance(v, str) for v in entry["matrix"])
        assert all(isinstance(v, str) for v in entry["interval"])


def test_loaded_intervals_parse_to_canonical_rationals():
    desc = load(save(build("blooming", 1, 2)))
    for entry in desc.entries:
        lo, hi = entry.interval
        assert isinstance(lo, Fraction) and isinstance(hi, Fraction)
        circle = entry.transform.isometric_circle()
        assert (circle.left, circle.right) == (lo, hi)
