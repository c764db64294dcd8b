import math
import random

import pytest

from qhyp.quantum.diagram import component_count, writhe
from qhyp.quantum.jones import (
    colored_jones,
    figure_eight_cross_sum,
    figure_eight_cross_sum_mp,
    fusion_value_mp,
)
from qhyp.quantum.oracles import (
    OracleTooExpensiveError,
    colored_jones_kauffman_oracle,
    colored_jones_rmatrix_oracle,
)
from qhyp.quantum.roots import RootOfUnityContext, quantum_integer
from qhyp.twistknots import DoubleTwistKnot, mirror

FIG8 = DoubleTwistKnot(2, -2)


def test_quantum_integer():
    ctx = RootOfUnityContext(5)
    assert quantum_integer(1, ctx) == pytest.approx(1.0)
    assert quantum_integer(0, ctx) == pytest.approx(0.0)
    assert quantum_integer(2, ctx) == pytest.approx(2 * math.cos(4 * math.pi / 5))
    ctx7 = RootOfUnityContext(7)
    t = ctx7.t
    for n in range(5):
        direct = (t**n - t**-n) / (t - 1 / t)
        assert quantum_integer(n, ctx7) == pytest.approx(direct.real, abs=1e-12)


def test_context_validation():
    with pytest.raises(ValueError):
        RootOfUnityContext(6)
    with pytest.raises(ValueError):
        RootOfUnityContext(1)
    ctx = RootOfUnityContext(9)
    assert ctx.color_set == (0, 2, 4, 6)
    assert len(ctx.color_set) == 4 == (9 - 1) // 2
    assert ctx.t == pytest.approx(ctx.q**2)


def test_template_components():
    for m in range(-4, 5):
        for n in range(-4, 5):
            expected = 2 if (m % 2 and n % 2) else 1
            assert component_count(m, n) == expected


def test_unknots_give_one():
    for r in (5, 9, 15):
        ctx = RootOfUnityContext(r)
        for N in range(1, min(6, r - 1) + 1):
            for m, n in [(0, 5), (0, -4), (1, 2)]:
                assert colored_jones(DoubleTwistKnot(m, n), N, ctx) == pytest.approx(
                    1.0, abs=1e-9
                )


def test_jones_polynomial_values():
    # the dimension-two value is the Jones polynomial at t = q^2
    def poly(coeffs, t):
        return sum(c * t**e for e, c in coeffs.items())

    fig8_poly = {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}
    left_trefoil = {4: -1, 3: 1, 1: 1}
    for r in (7, 9, 13):
        ctx = RootOfUnityContext(r)
        assert colored_jones(FIG8, 2, ctx) == pytest.approx(
            poly(fig8_poly, ctx.t), abs=1e-10
        )
        assert colored_jones(DoubleTwistKnot(2, 2), 2, ctx) == pytest.approx(
            poly(left_trefoil, ctx.t), abs=1e-10
        )


def test_fusion_vs_kauffman():
    for r in (5, 7, 9, 11):
        ctx = RootOfUnityContext(r)
        for m in range(-4, 5):
            for n in range(-4, 5):
                knot = DoubleTwistKnot(m, n)
                if knot.is_link or abs(m) + abs(n) > 8:
                    continue
                f = colored_jones(knot, 2, ctx)
                kb = colored_jones_kauffman_oracle(knot, ctx)
                assert abs(f - kb) <= 1e-9 * max(1.0, abs(kb)), (m, n, r)


def test_fusion_vs_rmatrix_grid():
    for r in (5, 7, 9, 11):
        ctx = RootOfUnityContext(r)
        for m in (-3, -2, 2, 4):
            for n in (-3, -2, 2, 4):
                knot = DoubleTwistKnot(m, n)
                if knot.is_link:
                    continue
                for N in range(1, min(6, r - 1) + 1):
                    f = colored_jones(knot, N, ctx)
                    o = colored_jones_rmatrix_oracle(knot, N, ctx)
                    assert abs(f - o) <= 1e-9 * max(1.0, abs(o)), (m, n, N, r)


def test_rmatrix_examples():
    ctx5 = RootOfUnityContext(5)
    v = colored_jones_rmatrix_oracle(DoubleTwistKnot(2, 2), 2, ctx5)
    assert v == pytest.approx(colored_jones(DoubleTwistKnot(2, 2), 2, ctx5), abs=1e-9)
    assert colored_jones_rmatrix_oracle(FIG8, 1, ctx5) == pytest.approx(1.0)
    ctx11 = RootOfUnityContext(11)
    v = colored_jones_rmatrix_oracle(DoubleTwistKnot(4, -2), 3, ctx11)
    assert v == pytest.approx(colored_jones(DoubleTwistKnot(4, -2), 3, ctx11), abs=1e-9)
    with pytest.raises(OracleTooExpensiveError):
        colored_jones_rmatrix_oracle(DoubleTwistKnot(8, -6), 2, ctx11)
    with pytest.raises(OracleTooExpensiveError):
        colored_jones_rmatrix_oracle(FIG8, 9, ctx11)


def test_figure_eight_sum():
    # dimension two reduces to the Jones polynomial of the figure-eight
    for r in (7, 11, 51):
        ctx = RootOfUnityContext(r)
        t = ctx.t
        expected = t**2 - t + 1 - 1 / t + 1 / t**2
        assert figure_eight_cross_sum(2, ctx) == pytest.approx(expected, abs=1e-12)
    # fusion agrees across a level sample at every color
    for r in (5, 9, 21, 41):
        ctx = RootOfUnityContext(r)
        for N in range(1, (r - 1) // 2 + 1):
            f = colored_jones(FIG8, N, ctx)
            s = figure_eight_cross_sum(N, ctx)
            assert abs(f - s) <= 1e-9 * max(1.0, abs(s)), (N, r)


def test_mp_twins_match_double():
    ctx = RootOfUnityContext(21)
    for N in (1, 3, 7, 10):
        a = complex(figure_eight_cross_sum_mp(N, 21, 40))
        b = figure_eight_cross_sum(N, ctx)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(b))
    for color in (0, 1, 3, 5):
        a = complex(fusion_value_mp(DoubleTwistKnot(2, -3), color, 21, 40))
        b = colored_jones(DoubleTwistKnot(2, -3), color + 1, ctx)
        assert abs(a - b) <= 1e-9 * max(1.0, abs(b))


def test_mirror_conjugation():
    rng = random.Random(5)
    done = 0
    while done < 40:
        knot = DoubleTwistKnot(rng.randint(-4, 4), rng.randint(-4, 4))
        if knot.is_link:
            continue
        done += 1
        r = rng.choice((5, 7, 9))
        N = rng.randint(1, min(4, r - 1))
        ctx = RootOfUnityContext(r)
        v = colored_jones(knot, N, ctx)
        w = colored_jones(mirror(knot), N, ctx)
        assert abs(w - v.conjugate()) <= 1e-9 * max(1.0, abs(v))


def test_color_bounds():
    ctx = RootOfUnityContext(5)
    with pytest.raises(ValueError):
        colored_jones(FIG8, 5, ctx)  # color 4 > r - 2
    with pytest.raises(ValueError):
        colored_jones(FIG8, 0, ctx)
    with pytest.raises(ValueError):
        colored_jones(DoubleTwistKnot(3, 3), 2, ctx)  # a link


def test_writhe_matches_letter_signs():
    # writhe plus/minus counts recover the letter count
    from qhyp.quantum.diagram import braid_letters, signed_crossing_counts

    for m, n in [(2, -2), (2, 2), (4, -3), (-4, -3), (0, 5)]:
        pos, neg = signed_crossing_counts(m, n)
        assert pos + neg == len(braid_letters(m, n))
        assert pos - neg == writhe(m, n)
