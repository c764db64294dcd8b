from importlib import resources

import pytest

from qhyp import census
from qhyp.rationals import ExactRational


def test_row_counts():
    assert len(census.census_rows()) == 62
    assert len(census.name_rows()) == 15


def test_tetrahedra():
    assert census.tetrahedra("K7_45") == 7
    assert census.tetrahedra("K2_1") == 2
    assert census.tetrahedra("K9_296") == 9
    with pytest.raises(ValueError):
        census.tetrahedra("X1_2")


def test_gromov_norm():
    assert census.gromov_norm(0) == 0
    assert census.gromov_norm(1.01494) == 1.0
    assert abs(census.gromov_norm(2.029883) - 2.0) < 1e-4
    with pytest.raises(ValueError):
        census.gromov_norm(-1.0)


def test_lookup():
    assert census.lookup("D", 1).rolfsen_name == "5_2"
    assert census.lookup("D'", 4).rolfsen_name == "10_1"
    assert census.lookup("D", -2).rolfsen_name == "6_2"
    with pytest.raises(census.UnknownRowError):
        census.lookup("D", 99)


def test_find_shared():
    row = census.find_shared("K5_12")
    assert row.slope_on_knot == ExactRational(3)
    assert row.slope_on_fig8 == ExactRational(3, 2)
    assert row.vol_filled_str == "1.440699"
    assert row.knot_name == "8_20"
    assert len(census.find_all_shared("K3_2")) == 2
    with pytest.raises(census.UnknownRowError):
        census.find_shared("K1_1")


def test_no_filling_row():
    row = census.find_shared("K2_1")
    assert not row.has_filling
    assert row.vol_filled is None
    check = census.check_volume_bounds(row)
    assert check.passed and check.vacuous


def test_all_bounds():
    for row in census.census_rows():
        check = census.check_volume_bounds(row)
        assert check.passed, check.describe()
        if not check.vacuous:
            assert check.upper_margin > 0
            assert check.filling_margin > 0
        if row.vol_filled is not None:
            assert row.vol_filled < row.vol_complement


def test_example_bound_values():
    row = census.find_shared("K5_19")
    assert row.knot_name == "6_2"
    check = census.check_volume_bounds(row)
    assert check.upper_bound == pytest.approx(3.6638 * 5)
    assert check.filling_margin == pytest.approx(4.400833 - 1.649610)
    row9 = [r for r in census.census_rows() if r.census_name == "K9_435"][0]
    assert census.check_volume_bounds(row9).passed


def test_slope_cross_check():
    verdicts = [census.slope_pair_matches(r) for r in census.census_rows()]
    confirmed = [v for v in verdicts if v is not None]
    assert len(confirmed) == 12
    assert all(confirmed)


def test_round_trip_bytes():
    raw = resources.files("qhyp.data").joinpath("census_fillings.csv").read_text(
        encoding="utf-8"
    )
    assert census.serialize_census() == raw
