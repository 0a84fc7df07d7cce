import json

import pytest

from octahedral.report import SCHEMA_VERSION, Report, render_report


def _sample():
    report = Report("sample")
    s = report.section("first")
    s.add("two is two", 2, 2)
    s.add("a|b", ["x"], ["y"], locus="elsewhere")
    report.section("second").add("empty", None, None)
    return report


def test_passing_and_failing_checks():
    report = _sample()
    assert not report.passed
    assert [c.claim for c in report.failures] == ["a|b"]
    assert report.sections[1].passed
    assert report.checks[1].locus == "elsewhere"
    assert report.checks[0].locus == "first"


def test_json_form():
    payload = json.loads(render_report(_sample(), "json"))
    assert payload["schema_version"] == SCHEMA_VERSION
    assert payload["counts"] == {"checks": 3, "failed": 1}
    assert payload["sections"][0]["checks"][1]["pass"] is False


def test_markdown_form():
    text = render_report(_sample(), "md")
    assert text.startswith("# sample\n")
    assert "2 of 3 checks pass." in text
    assert "| a\\|b |" in text
    assert "**NO**" in text


def test_extend():
    a, b = Report("a"), _sample()
    a.extend(b)
    assert len(a.checks) == 3


def test_unknown_format():
    with pytest.raises(ValueError):
        render_report(Report("x"), "html")
