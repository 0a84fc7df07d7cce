import time

import pytest

from octahedral.suites import SUITES, run_suite


@pytest.mark.parametrize("name", list(SUITES) + ["all"])
def test_suite_passes(name):
    report, code = run_suite(name)
    assert [c.claim for c in report.failures] == []
    assert code == 0
    assert report.checks


def test_all_covers_every_suite_within_a_minute():
    start = time.perf_counter()
    report, code = run_suite("all")
    assert time.perf_counter() - start < 60
    assert code == 0
    assert len(report.sections) >= len(SUITES)


def test_unknown_suite():
    report, code = run_suite("nope")
    assert code == 2
    assert report.checks == []
