from fractions import Fraction

import pytest

import coarselen as cl


def test_seed_words():
    assert cl.evaluate_word("X^1 Y^1") == (1, 1, 1, 1, 1)
    assert cl.evaluate_word([("Y", 1), ("X", 1)]) == (1, 1, -1, 1, 1)
    assert cl.eval_xy("X^1 Y^1") == (1, 0)
    assert all(isinstance(c, Fraction) for c in cl.evaluate_word("X^1/3 Y^2"))


def test_exact_and_float_modes():
    assert cl.eval_xy("X^0.5 Y^1 X^0.5") == (Fraction(1, 4), Fraction(1, 2))
    x, y = cl.eval_xy("X^0.5 Y^1 X^0.5", exact=False)
    assert isinstance(x, float) and (x, y) == (0.25, 0.5)
    assert cl.word_length([("X", Fraction(1, 2)), ("Y", 1), ("X", 0.5)]) == 2
    assert cl.coarse_length("X^1 Y^1 X^0") == 3
    assert cl.normalize("X^1 Y^0 X^1") == "X^2"


def test_group_law():
    x, y = (1, 0, 0, 0, 0), (0, 1, 0, 0, 0)
    assert cl.bracket(x, y) == (0, 0, 2, 0, 0)
    assert cl.multiply(x, y) == (1, 1, 1, 1, 1)
    assert cl.multiply(y, x, exact=False) == (1.0, 1.0, -1.0, 1.0, 1.0)


def test_balanced_checkpoints():
    assert cl.eval_xy(cl.balanced_word(2)) == (Fraction(5, 8), Fraction(1, 8))
    assert cl.eval_xy(cl.balanced_word(3)) == (Fraction(14, 27), Fraction(5, 27))


def test_maps():
    assert cl.map_xy("a", Fraction(1, 2), 1, 0) == (Fraction(1, 4), Fraction(1, 2))
    assert cl.map_uvw("b", Fraction(1, 2), 1, 1, 1) == (1, 1, 1)
    with pytest.raises(cl.CoarselenError):
        cl.map_xy("a", 2, 1, 0)


def test_membership():
    third = cl.membership(Fraction(1, 3), Fraction(1, 3))
    assert third["status"] == "Outside"
    assert third["failed_condition"] == "4x > 3(1-y)^2"
    assert third["boundary_equality"]
    assert cl.membership(1, 0)["status"] == "EndpointMember"
    assert cl.membership(0.36, 0.36, exact=False)["member"]
    assert not cl.membership(0.3334, 0.3334, eps=1e-3, exact=False)["member"]


def test_search():
    report = cl.nearest_reachable(1 / 3, 1 / 3, 1, threads=1)
    assert 0.068 < float(report["distance"]) < 0.069
    rows = cl.coarse_length_profile(1 / 3, 1 / 3, 3, threads=1)
    dists = [float(r["report"]["distance"]) for r in rows]
    assert dists == sorted(dists, reverse=True) and dists[-1] > 0
    gap = cl.diagonal_gap(1, threads=1)
    assert abs(float(gap["gap"]) - (cl.GOLDEN_GAP - 1 / 3)) < 1e-9


def test_synthesis():
    result = cl.synthesize_word(0.25, 0.5)
    assert result["success"] and result["word_text"] == "X^0.5 Y^1 X^0.5"
    miss = cl.synthesize_word(0.3334, 0.3334, max_steps=3)
    assert not miss["success"] and miss["message"]
    with pytest.raises(cl.CoarselenError):
        cl.synthesize_word(0.5, 0.5)


def test_figure_and_suites():
    svg = cl.render_svg(resolution=32)
    assert svg.count('class="boundary"') == 6 and svg.count('class="marker"') == 4
    assert cl.run_suite("algebra", trials=100)["passed"]
    assert cl.run_suite("invariance", exact=False, trials=100)["passed"]
