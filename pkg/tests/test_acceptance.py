"""The acceptance gate: each criterion runs at its pinned tolerance and
prints one pass/fail line.  `qhyp verify-all` executes the same checks."""

from qhyp import acceptance


def _check(result):
    print(result.line())
    assert result.passed, result.detail


def test_criterion_01_cfe_identity():
    _check(acceptance.criterion_1())


def test_criterion_02_slope_calculus():
    _check(acceptance.criterion_2())


def test_criterion_03_exceptional_slopes():
    _check(acceptance.criterion_3())


def test_criterion_04_alexander_formula():
    _check(acceptance.criterion_4())


def test_criterion_05_fiberedness_and_genus():
    _check(acceptance.criterion_5())


def test_criterion_06_monodromy_crosscheck():
    _check(acceptance.criterion_6())


def test_criterion_07_oracle_triangle():
    _check(acceptance.criterion_7())


def test_criterion_08_cusped_volume_target():
    _check(acceptance.criterion_8())


def test_criterion_09_closed_filling_targets():
    _check(acceptance.criterion_9())


def test_criterion_10_monotonicity_inequality():
    _check(acceptance.criterion_10())


def test_criterion_11_census_bounds():
    _check(acceptance.criterion_11())


def test_criterion_12_property_suites():
    _check(acceptance.criterion_12())
