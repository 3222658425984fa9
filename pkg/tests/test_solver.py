import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import naive_max_dominated, naive_value
from mbdom.families import ary_stack, complete, cycle, fraction_sharp, path, star
from mbdom.game import GameConfig, Player, replay, Outcome
from mbdom.graph import Graph, InstanceTooLarge, trees_up_to
from mbdom.guarantees import INFINITY
from mbdom.solver import optimal_move, solve_max_dominated, solve_rounds, solver_cap


def rounds(g, b=1, first=Player.DOMINATOR, **kw):
    return solve_rounds(GameConfig(g, b, first), **kw).value


def test_examples():
    assert rounds(path(7)) == 3
    for b in (1, 2, 3):
        assert rounds(star(b + 1), b, Player.STALLER) == INFINITY
    assert rounds(path(4), 1, Player.STALLER) == 2
    for n in range(1, 8):
        assert rounds(complete(n)) == 1


def test_fraction_sharp_values():
    g = fraction_sharp(8, 1)
    assert solve_max_dominated(GameConfig(g, 1, Player.DOMINATOR)) == 7
    assert solve_max_dominated(GameConfig(g, 1, Player.STALLER)) == 6


def test_finite_value_means_everything_dominated():
    for t in trees_up_to(8, 2):
        cfg = GameConfig(t, 1, Player.STALLER)
        if solve_rounds(cfg, want_pv=False).finite:
            assert solve_max_dominated(cfg) == t.n


def small_graphs(count, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        p = rng.random()
        yield Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.mark.parametrize("b", [1, 2])
def test_matches_naive_minimax(b):
    for g in small_graphs(60, 7, b):
        for first in Player:
            assert rounds(g, b, first) == naive_value(g, b, first is Player.DOMINATOR)


def test_max_dominated_matches_naive_minimax():
    for g in small_graphs(40, 7, 5):
        for b in (1, 2):
            for first in Player:
                want = naive_max_dominated(g, b, first is Player.DOMINATOR)
                assert solve_max_dominated(GameConfig(g, b, first)) == want


def test_exact_claims_equal_unrestricted_claims():
    for g in small_graphs(80, 7, 11):
        for b in (1, 2):
            for first in Player:
                cfg = GameConfig(g, b, first)
                assert solve_rounds(cfg, exact_b=True).value == solve_rounds(cfg, exact_b=False).value


def test_relabelling_preserves_value():
    rng = random.Random(4)
    for g in small_graphs(40, 9, 12):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        for first in Player:
            assert rounds(g, 1, first) == rounds(h, 1, first)


def test_value_is_monotone_in_bias():
    for g in small_graphs(40, 9, 13):
        for first in Player:
            vals = [rounds(g, b, first) for b in (1, 2, 3)]
            assert vals[0] >= vals[1] >= vals[2]


def test_principal_variation_replays():
    for g in small_graphs(40, 9, 14):
        for first in Player:
            cfg = GameConfig(g, 1, first)
            rep = solve_rounds(cfg)
            _, status = replay(cfg, rep.pv)
            if rep.finite:
                assert status.outcome is Outcome.DOMINATOR_WON and status.rounds == rep.value
            else:
                assert status.outcome is Outcome.STALLER_WON


def test_optimal_move_achieves_value():
    from mbdom.game import initial_state, apply_move, game_status
    from mbdom.strategies import GreedyStaller

    for g in small_graphs(20, 8, 15):
        cfg = GameConfig(g, 1)
        val = solve_rounds(cfg, want_pv=False).value
        if val == INFINITY:
            continue
        s = initial_state(cfg)
        while not game_status(cfg, s).decided:
            mv = optimal_move(cfg, s) if s.to_move is Player.DOMINATOR else GreedyStaller().choose(cfg, s, ())
            s = apply_move(cfg, s, mv)
        assert game_status(cfg, s).rounds <= val


def test_cap_is_enforced():
    with pytest.raises(InstanceTooLarge):
        solve_rounds(GameConfig(path(solver_cap(1) + 1), 1))
    assert solve_rounds(GameConfig(path(16), 1), cap=16, want_pv=False).value == 8


def test_ary_stack_is_a_staller_win():
    assert rounds(ary_stack(1, 2), 1, Player.DOMINATOR, want_pv=False) == INFINITY


def test_preclaimed_and_targets():
    cfg = GameConfig(star(3), 2, Player.STALLER, preclaimed=frozenset({1}))
    assert solve_rounds(cfg).finite
    cfg = GameConfig(path(5), 1, target=frozenset({0}))
    assert solve_rounds(cfg).value == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.integers(1, 2), st.sampled_from(list(Player)))
def test_cycle_values_are_finite(n, b, first):
    n = max(n, 3)
    v = rounds(cycle(n), b, first)
    assert v != INFINITY and v <= n
