import pytest

from errors import NonPlottableError
from problem import Problem
from fileio import report_rows, rows_to_csv, rows_to_svg


def test_report_rows_example1(example1):
    rows = report_rows(example1)
    assert rows == [
        {"label": "frontier", "U1": 4, "U2": -5},
        {"label": "frontier", "U1": 2, "U2": 0},
        {"label": "frontier", "U1": -2, "U2": 1},
        {"label": "CR", "U1": 1, "U2": "1/4"},
        {"label": "ER", "U1": "16/7", "U2": "-5/7"},
        {"label": "FS", "U1": 1, "U2": -2},
    ]


def test_report_rows_example2(example2):
    rows = {r["label"]: (r["U1"], r["U2"]) for r in report_rows(example2) if r["label"] != "frontier"}
    assert rows == {"CR": ("-1/2", "-1/2"), "ER": ("2/5", "-7/5"), "FS": ("-1/2", -2)}


def test_several_competitive_profiles_are_numbered(family):
    labels = [r["label"] for r in report_rows(family(-1)) if r["label"].startswith("CR")]
    assert labels == ["CR1", "CR2", "CR3", "CR4"]


def test_report_needs_two_agents():
    with pytest.raises(NonPlottableError):
        report_rows(Problem.from_rows([[1, -1], [2, -1], [1, -3]]))


def test_rows_to_csv(example1):
    lines = rows_to_csv(report_rows(example1)).splitlines()
    assert lines[0] == "label,U1,U2"
    assert lines[4] == "CR,1,1/4"
    assert len(lines) == 7


def test_rows_to_svg(example2):
    svg = rows_to_svg(report_rows(example2), title="example 2")
    assert "<svg" in svg
