from fractions import Fraction

import pytest

from mbdom.families import disjoint_union, complete, path, star, tkb, ts
from mbdom.formulas import (
    FormulaError,
    beck_bound,
    beck_sum,
    dense_round_bound,
    f_of_b,
    fraction_bound,
    gamma_clique_union,
    gamma_cycle_b1,
    gamma_power,
    gamma_tkb,
    gamma_tree_b1,
    gamma_ts,
    mindeg_condition,
    mindeg_win_threshold,
    tree_b1_case,
    tree_gamma_bounds,
)
from mbdom.game import GameConfig, Player
from mbdom.guarantees import INFINITY
from mbdom.solver import solve_rounds


def test_powers():
    assert gamma_power(7, 1, 1) == 3
    assert gamma_power(10, 2, 1) == 3
    assert gamma_power(9, 1, 1, "cycle") == 4
    assert gamma_cycle_b1(9) == 4
    with pytest.raises(FormulaError):
        gamma_power(2, 1, 1, "cycle")


def test_tree_b1():
    assert gamma_tree_b1(path(4), Player.DOMINATOR) == 2
    assert gamma_tree_b1(star(3), Player.DOMINATOR) == 1
    assert tree_b1_case(star(3), Player.DOMINATOR) == "star"
    assert gamma_tree_b1(star(3), Player.STALLER) == INFINITY


def test_f_and_tkb():
    assert (f_of_b(2), f_of_b(3)) == (4, 6)
    assert gamma_tkb(8, 2) == 2
    assert gamma_ts(20, 2, 6) == 7
    with pytest.raises(FormulaError):
        gamma_tkb(5, 1)
    with pytest.raises(FormulaError):
        gamma_ts(10, 2, 4)


def test_gamma_ts_matches_solver():
    for n, s in [(10, 2), (11, 1), (12, 2), (9, 0)]:
        g, _ = ts(n, 2, s)
        assert solve_rounds(GameConfig(g, 2, Player.STALLER), want_pv=False).value == gamma_ts(n, 2, s)


def test_bounds():
    r = tree_gamma_bounds(20, 2)
    assert (r.lower, r.upper) == (2, 7)
    r = tree_gamma_bounds(5, 2)
    assert (r.lower, r.upper) == (1, 2)
    for b in range(2, 11):
        assert 4 * f_of_b(b) > b * (b + 3)


def test_fraction_bound():
    assert fraction_bound(8, 1) == 6
    assert fraction_bound(9, 2) == 8
    assert fraction_bound(10, 10**6) == 10


def test_mindeg():
    assert mindeg_win_threshold(8, 1) == pytest.approx(2)
    assert not mindeg_condition(8, 2, 1)
    assert mindeg_condition(8, 3, 1)
    assert dense_round_bound(100, 50, 2) == 47


def test_clique_union_matches_solver():
    for delta, copies, b in [(1, 3, 1), (2, 3, 1), (3, 2, 1), (2, 4, 2), (3, 3, 2)]:
        g = disjoint_union(*[complete(delta + 1)] * copies)
        want = gamma_clique_union(g.n, delta, b)
        assert solve_rounds(GameConfig(g, b), want_pv=False).value == want


def test_beck_sum_is_exact():
    assert beck_sum([1], 1) == Fraction(1, 2)
    assert beck_sum([1, 1, 2], 1) == Fraction(5, 4)
    assert beck_bound([1, 1, 2], 1) == 1
    assert beck_bound([3] * 64, 3) == 1
