"""Acceptance gate: one test per acceptance criterion, exact values, zero tolerance.

Each test runs the matching checker from tilecohom.accept and reports its
failure detail verbatim, so `pytest -v` gives one pass/fail line per criterion.
"""

import io

import tilecohom.accept as accept


def test_criterion_01_window_combinatorics():
    result = accept.criterion_1()
    assert result.number == 1
    assert result.ok, result.detail


def test_criterion_02_slicing_census():
    result = accept.criterion_2()
    assert result.number == 2
    assert result.ok, result.detail


def test_criterion_03_homological_constants():
    result = accept.criterion_3()
    assert result.number == 3
    assert result.ok, result.detail


def test_criterion_04_gamma_zero():
    result = accept.criterion_4()
    assert result.number == 4
    assert result.ok, result.detail


def test_criterion_05_gamma_zero_half():
    result = accept.criterion_5()
    assert result.number == 5
    assert result.ok, result.detail


def test_criterion_06_gamma_third_sqrt3_zero():
    result = accept.criterion_6()
    assert result.number == 6
    assert result.ok, result.detail


def test_criterion_07_gamma_third_sqrt3_pair():
    result = accept.criterion_7()
    assert result.number == 7
    assert result.ok, result.detail


def test_criterion_08_gamma_third_sqrt3_third():
    result = accept.criterion_8()
    assert result.number == 8
    assert result.ok, result.detail


def test_criterion_09_gamma_zero_sixth_sqrt3():
    result = accept.criterion_9()
    assert result.number == 9
    assert result.ok, result.detail


def test_criterion_10_gamma_half_pair_cases():
    result = accept.criterion_10()
    assert result.number == 10
    assert result.ok, result.detail


def test_criterion_11_generic_sample():
    result = accept.criterion_11()
    assert result.number == 11
    assert result.ok, result.detail


def test_criterion_12_property_suites():
    result = accept.criterion_12()
    assert result.number == 12
    assert result.ok, result.detail


def test_run_all_prints_one_line_per_criterion(monkeypatch):
    stubs = (
        lambda: accept.CriterionResult(1, "stub pass", True, ""),
        lambda: accept.CriterionResult(2, "stub fail", False, "got 0, want 1"),
    )
    monkeypatch.setattr(accept, "CRITERIA", stubs)
    stream = io.StringIO()
    assert accept.run_all(stream=stream) is False
    lines = stream.getvalue().splitlines()
    assert lines == [
        "PASS criterion 1: stub pass",
        "FAIL criterion 2: stub fail [got 0, want 1]",
    ]
