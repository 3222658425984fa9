import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbdom.families import path, star, star_chain, tkb, ts
from mbdom.game import GameConfig, Player
from mbdom.goodness import (
    SequenceError,
    dominator_first_set,
    find_problematic,
    forest_after,
    greedy_good,
    greedy_reduction,
    is_admissible,
    is_b_good,
    is_good,
)
from mbdom.graph import Graph, trees_up_to
from mbdom.solver import solve_rounds


def double_star(b):
    # centers 0 and 1, each with b+1 leaves
    edges = [(0, 1)] + [(0, 2 + i) for i in range(b + 1)] + [(1, 3 + b + i) for i in range(b + 1)]
    return Graph.from_edges(2 * b + 4, edges)


def test_forest_after_examples():
    assert forest_after(path(2), [0]).final == frozenset()
    assert forest_after(tkb(7, 2), []).forests == [frozenset(range(7))]
    assert forest_after(star(3), [0]).final == frozenset()


def test_forest_after_rejects_bad_sequences():
    with pytest.raises(SequenceError):
        forest_after(path(4), [1, 1])
    with pytest.raises(SequenceError):
        forest_after(path(4), [1], A=[1])
    with pytest.raises(SequenceError):
        forest_after(path(2), [0, 1])


def test_admissibility():
    for b in (1, 2, 3):
        assert is_admissible(star(b), [0], b)
        assert not is_admissible(star(b + 1), [0], b)
    g, chain = ts(10, 2, 2)
    assert is_admissible(g, chain, 2)


def test_problematic_examples():
    for b in (1, 2, 3):
        w = find_problematic(star(b + 1), (), b)
        assert w is not None and w.sequence == () and w.u == 0
        assert str(w) == "∅ | 0"
        assert not is_b_good(star(b + 1), b)
    assert find_problematic(path(2), (), 1) is None
    assert find_problematic(star(3), (1,), 2) is None
    assert is_b_good(path(2), 1)
    assert is_b_good(tkb(8, 2), 2)


def test_witness_is_a_replayable_staller_win():
    # Staller claims the witness vertices in order and wins
    for t in trees_up_to(8, 2):
        w = find_problematic(t, (), 1)
        if w is None:
            continue
        assert is_admissible(t, w.sequence, 1)
        assert not solve_rounds(GameConfig(t, 1, Player.STALLER), want_pv=False).finite


def test_greedy_examples():
    assert greedy_reduction(path(2), 1) == frozenset()
    for b in (1, 2):
        assert greedy_reduction(star(b + 1), b) == frozenset(range(b + 2))
    assert greedy_reduction(path(5), 1) == frozenset({2, 3, 4})


def test_greedy_agrees_with_search():
    for t in trees_up_to(10, 2):
        for b in (1, 2, 3):
            assert greedy_good(t, b) == is_b_good(t, b)


def test_dominator_first_examples():
    for b in (1, 2):
        assert dominator_first_set(star(b + 1), b) == frozenset({0})
    assert dominator_first_set(path(2), 1) == frozenset()
    assert dominator_first_set(double_star(1), 1) is None
    assert not solve_rounds(GameConfig(double_star(1), 1), want_pv=False).finite


def test_good_with_preclaimed_matches_solver():
    for t in trees_up_to(7, 2):
        for b in (1, 2):
            for a in range(t.n):
                cfg = GameConfig(t, b, Player.STALLER, preclaimed=frozenset({a}))
                assert is_good(t, {a}, b) == solve_rounds(cfg, want_pv=False).finite


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(1, 3))
def test_star_chains_of_b_stars_are_good(sizes, b):
    g, _ = star_chain([b] * len(sizes))
    assert is_b_good(g, b)
