import json

import pytest

from qhyp.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cfe(capsys):
    code, out = run_cli(capsys, "cfe", "3,-2")
    assert code == 0
    blob = json.loads(out)
    assert blob["value"] == "2/5"
    code, out = run_cli(capsys, "cfe", "--alternating", "2")
    assert json.loads(out)["entries"] == [2, 2, -2, 2]


def test_knot_report(capsys):
    code, out = run_cli(capsys, "knot", "--family", "D", "--n", "-2")
    assert code == 0
    blob = json.loads(out)
    assert blob["rolfsen_name"] == "6_2"
    assert blob["fibered"] is True
    assert blob["fiber_genus"] == 2
    assert blob["monic"] is True


def test_knot_rejects_unknot(capsys):
    code = main(["knot", "--knot", "0,5"])
    assert code == 1


def test_surgery_check(capsys):
    code, out = run_cli(capsys, "surgery-check", "--family", "D'", "--n", "3")
    assert code == 0
    assert "final slope on the twist knot: 1" in out
    assert "figure-eight slope -1/3" in out


def test_jones(capsys):
    code, out = run_cli(capsys, "jones", "--knot", "2,-2", "--color", "2", "--r", "7")
    assert code == 0
    blob = json.loads(out)
    assert blob["abs"] == pytest.approx(0.356896, abs=1e-5)


def test_tv_csv_and_determinism(capsys):
    args = ("tv", "--knot", "2,-2", "--r-min", "5", "--r-max", "15", "--r-step", "2")
    code, out1 = run_cli(capsys, *args)
    assert code == 0
    assert out1.splitlines()[0] == "r,tv,logslope"
    assert len(out1.splitlines()) == 7
    _, out2 = run_cli(capsys, *args)
    assert out1 == out2


def test_ltv_json(capsys):
    code, out = run_cli(
        capsys,
        "ltv", "--knot", "2,-3", "--slope", "5",
        "--r-min", "11", "--r-max", "41", "--r-step", "10",
        "--format", "json",
    )
    assert code == 0
    blob = json.loads(out)
    assert blob["census"]["name"] == "K3_2"
    assert "estimate" in blob["complement"]
    assert "filling" in blob


def test_monodromy(capsys):
    code, out = run_cli(capsys, "monodromy", "--genus", "2")
    assert code == 0
    assert "cross-check: PASS" in out


def test_census_row(capsys):
    code, out = run_cli(capsys, "census", "--row", "K5_19")
    assert code == 0
    blob = json.loads(out)
    assert blob[0]["knotName"] == "6_2"
    assert blob[0]["tetrahedra"] == 5


def test_census_bounds(capsys):
    code, out = run_cli(capsys, "census", "--check-bounds")
    assert code == 0
    assert "62/62 rows pass" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["jones", "--knot", "2,-2"])  # missing required flags
    assert err.value.code == 2
