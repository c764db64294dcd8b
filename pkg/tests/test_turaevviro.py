import math
import random

import pytest

from qhyp.rationals import ExactRational, evaluate_minus_cfe, minus_cfe
from qhyp.twistknots import DoubleTwistKnot, mirror
from qhyp.quantum.turaevviro import (
    TVSample,
    _tv_surgery_double,
    eta_squared,
    tv_knot_complement,
    tv_surgery,
)

FIG8 = DoubleTwistKnot(2, -2)


def test_three_sphere_normalization():
    for r in (5, 7, 11, 21):
        sample = tv_surgery(DoubleTwistKnot(0, 5), ExactRational(1), r)
        assert sample.tv == pytest.approx(eta_squared(r), rel=1e-10)


def test_complement_basics():
    sample = tv_knot_complement(FIG8, 5)
    assert sample.tv > 0 and math.isfinite(sample.logslope)
    with pytest.raises(ValueError):
        tv_knot_complement(FIG8, 6)
    with pytest.raises(ValueError):
        tv_surgery(FIG8, ExactRational(1, 0), 7)


def test_complement_mirror_invariance():
    for r in (7, 11):
        for knot in (DoubleTwistKnot(2, -3), DoubleTwistKnot(4, -2)):
            a = tv_knot_complement(knot, r)
            b = tv_knot_complement(mirror(knot), r)
            assert a.tv == pytest.approx(b.tv, rel=1e-9)


def test_trefoil_complement_growth_is_small():
    # zero Gromov norm: the growth stays near zero while a hyperbolic
    # complement of similar size is already well above one
    trefoil = [tv_knot_complement(DoubleTwistKnot(2, 2), r) for r in (51, 101, 151)]
    assert all(abs(s.logslope) < 0.5 for s in trefoil)
    hyp = tv_knot_complement(FIG8, 101)
    assert hyp.logslope > 1.5


def test_shared_surgery_homeomorphisms():
    # fillings described on the twist-knot side and on the figure-eight
    # side are the same manifold, so the invariants agree identically
    for n, r in [(1, 11), (2, 11), (-2, 11), (3, 9)]:
        a = tv_surgery(DoubleTwistKnot(2 * n, -3), ExactRational(4 * n + 1), r)
        b = tv_surgery(FIG8, ExactRational(-(4 * n + 1), n), r)
        assert a.tv == pytest.approx(b.tv, rel=1e-9), (n, r)
    for n, r in [(2, 11), (3, 11), (-3, 9), (-2, 13)]:
        a = tv_surgery(DoubleTwistKnot(2 * n, -2), ExactRational(1), r)
        b = tv_surgery(FIG8, ExactRational(-1, n), r)
        assert a.tv == pytest.approx(b.tv, rel=1e-9), (n, r)


def test_amphichiral_slope_symmetry():
    rng = random.Random(2)
    for _ in range(30):
        p, q = rng.randint(1, 9), rng.randint(1, 6)
        r = rng.choice((7, 9, 11, 13))
        a = tv_surgery(FIG8, ExactRational(p, q), r)
        b = tv_surgery(FIG8, ExactRational(-p, q), r)
        assert a.tv == pytest.approx(b.tv, rel=1e-9, abs=1e-30)


def test_chain_invariance():
    rng = random.Random(9)
    for _ in range(25):
        s = ExactRational(rng.randint(1, 15) * rng.choice((1, -1)), rng.randint(1, 6))
        chain = minus_cfe(s)
        variant = chain[:-1] + [chain[-1] + 1, 1]
        assert evaluate_minus_cfe(variant) == s
        r = rng.choice((7, 9, 11))
        a = _tv_surgery_double(FIG8, s, chain, r)
        b = _tv_surgery_double(FIG8, s, variant, r)
        assert a.tv == pytest.approx(b.tv, rel=1e-8, abs=1e-30)


def test_precision_modes_agree():
    sample_d = tv_surgery(FIG8, ExactRational(5), 31, precision="double")
    sample_x = tv_surgery(FIG8, ExactRational(5), 31, precision="extended")
    assert sample_d.tv == pytest.approx(sample_x.tv, rel=1e-7)
    assert sample_x.precision.startswith("mp")
    with pytest.raises(ValueError):
        tv_surgery(FIG8, ExactRational(5), 31, precision="quad")


def test_flagged_exceptional_filling_escalates():
    sample = tv_surgery(FIG8, ExactRational(1), 151)
    assert sample.condition > 1e6
    assert sample.precision.startswith("mp")
    assert abs(sample.logslope) < 0.3


def test_sample_dataclass():
    s = TVSample(r=7, tv=1.0, logslope=0.0)
    assert not s.flagged
