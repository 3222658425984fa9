import math
import random

import pytest

from mbdom.families import ary_stack, complete, cycle_power, disjoint_union, path, path_power, star, tkb, ts
from mbdom.game import GameConfig, Move, Outcome, Player, initial_state, play_match
from mbdom.graph import Graph, trees_up_to
from mbdom.guarantees import DominatesAtLeast, LastsAtLeast, StallerWins, WinWithin
from mbdom.solver import solve_rounds, verify_strategy
from mbdom.strategies import (
    DStarStaller,
    GreedyStaller,
    IntervalDominator,
    NeighborhoodBreakerDominator,
    NotApplicable,
    Optimal,
    PathAdversaryStaller,
    PathFamily,
    SamplingError,
    TkbDominator,
    TkbStaller,
    ary_tree_maker,
    build_dominating_subset,
    by_name,
    problematic_staller,
    recursive_good_dominator,
    star_pairing_dominator,
)


def test_interval_first_move_and_guarantees():
    cfg = GameConfig(path(7), 1)
    s = IntervalDominator(7, 1, 1)
    assert s.choose(cfg, initial_state(cfg), ()) == Move.dominator([1])
    assert s.guarantee(cfg) == WinWithin(3)
    cfg9 = GameConfig(cycle_power(9, 1), 1)
    assert IntervalDominator(9, 1, 1, "cycle").guarantee(cfg9) == WinWithin(4)
    assert verify_strategy(cfg9, IntervalDominator(9, 1, 1, "cycle")).ok
    assert not IntervalDominator(7, 1, 1).applies(GameConfig(path(7), 1, Player.STALLER))


def test_path_adversary():
    fam = PathFamily.single(5)
    cfg = fam.config(1, 1, Player.STALLER)
    s = PathAdversaryStaller(fam, 1, 1)
    assert s.choose(cfg, initial_state(cfg), ()) == Move.staller(1)
    fam7 = PathFamily.single(7)
    cfg7 = fam7.config(1, 1, Player.DOMINATOR)
    assert PathAdversaryStaller(fam7, 1, 1).guarantee(cfg7) == LastsAtLeast(3)
    assert verify_strategy(cfg7, PathAdversaryStaller(fam7, 1, 1)).ok


def test_path_adversary_on_short_paths():
    fam = PathFamily.from_lengths([2, 2])
    cfg = fam.config(1, 1, Player.STALLER)
    s = PathAdversaryStaller(fam, 1, 1)
    assert s.guarantee(cfg).rounds >= math.ceil(4 / 2)
    assert verify_strategy(cfg, s).ok


@pytest.mark.parametrize("k,b", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_path_adversary_on_families(k, b):
    rng = random.Random(k * 10 + b)
    for _ in range(6):
        lengths = [rng.randint(1, 6) for _ in range(rng.randint(1, 2))]
        fam = PathFamily.from_lengths(lengths)
        if fam.n > 11:
            continue
        for first in Player:
            cfg = fam.config(k, b, first)
            r = verify_strategy(cfg, PathAdversaryStaller(fam, k, b))
            assert r.ok, (lengths, first, r.reason)


def test_problematic_staller():
    for b in (1, 2, 3):
        cfg = GameConfig(star(b + 1), b, Player.STALLER)
        s = problematic_staller(star(b + 1), b)
        assert s.guarantee(cfg) == StallerWins()
        assert verify_strategy(cfg, s).ok
    t = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    cfg = GameConfig(t, 1, Player.STALLER)
    assert verify_strategy(cfg, problematic_staller(t, 1)).ok
    assert not problematic_staller(path(2), 1).applies(GameConfig(path(2), 1, Player.STALLER))


def test_problematic_staller_dominator_first():
    for t in trees_up_to(8, 2):
        cfg = GameConfig(t, 1, Player.DOMINATOR)
        s = problematic_staller(t, 1)
        if s.applies(cfg):
            assert verify_strategy(cfg, s).ok


def test_recursive_good_dominator():
    cfg = GameConfig(path(2), 1, Player.STALLER)
    assert verify_strategy(cfg, recursive_good_dominator(path(2), 1)).ok
    for t, b in [(tkb(8, 2), 2), (path(6), 1)]:
        assert verify_strategy(GameConfig(t, b, Player.STALLER), recursive_good_dominator(t, b)).ok
    assert not recursive_good_dominator(star(2), 1).applies(GameConfig(star(2), 1, Player.STALLER))


def test_recursive_good_dominator_first():
    for t in trees_up_to(8, 1):
        for b in (1, 2):
            cfg = GameConfig(t, b, Player.DOMINATOR)
            s = recursive_good_dominator(t, b)
            if s.applies(cfg):
                assert verify_strategy(cfg, s).ok


def test_star_pairing():
    g, chain = ts(10, 2, 2)
    cfg = GameConfig(g, 2, Player.STALLER)
    s = star_pairing_dominator(g, chain, 2, TkbDominator(4, 2))
    assert s.guarantee(cfg) == WinWithin(3)
    assert verify_strategy(cfg, s).ok
    inner = recursive_good_dominator(path(4), 1)
    empty = star_pairing_dominator(path(4), [], 1, inner)
    c4 = GameConfig(path(4), 1, Player.STALLER)
    assert empty.guarantee(c4) == inner.guarantee(c4)


def test_star_pairing_answers_inside_the_star():
    g, chain = ts(10, 2, 2)
    cfg = GameConfig(g, 2, Player.STALLER)
    s = star_pairing_dominator(g, chain, 2, TkbDominator(4, 2))
    leaf = chain[0] + 1
    st = initial_state(cfg)
    from mbdom.game import apply_move

    st = apply_move(cfg, st, Move.staller(leaf))
    mv = s.choose(cfg, st, (Move.staller(leaf),))
    assert set(mv.vertices) == {chain[0], chain[0] + 2}


@pytest.mark.parametrize("b", [2, 3])
def test_tkb_strategies(b):
    for k in range(2, 11):
        cfg = GameConfig(tkb(k, b), b, Player.STALLER)
        d, s = TkbDominator(k, b), TkbStaller(k, b)
        assert d.guarantee(cfg).rounds == s.guarantee(cfg).rounds
        assert verify_strategy(cfg, d).ok
        assert verify_strategy(cfg, s).ok


def test_dstar_staller():
    for t in trees_up_to(10, 1):
        cfg = GameConfig(t, 2, Player.STALLER)
        s = DStarStaller(t, 2)
        assert s.guarantee(cfg).rounds == -(-t.n // 10)
        if t.n >= 5:
            assert verify_strategy(cfg, s).ok


def test_neighborhood_breaker():
    g = disjoint_union(complete(4), complete(4))
    cfg = GameConfig(g, 1)
    s = NeighborhoodBreakerDominator(g, 1)
    assert s.guarantee(cfg) == WinWithin(4)
    assert verify_strategy(cfg, s).ok
    with pytest.raises(NotApplicable):
        NeighborhoodBreakerDominator(path(8), 1)
    sub = NeighborhoodBreakerDominator(g, 1, "subset", subset=range(8))
    assert sub.potential == s.potential
    assert sub.choose(cfg, initial_state(cfg), ()) == s.choose(cfg, initial_state(cfg), ())


def test_fraction_mode_on_trees():
    for t in trees_up_to(9, 2):
        for b in (1, 2):
            cfg = GameConfig(t, b, Player.DOMINATOR, objective="dominated")
            s = NeighborhoodBreakerDominator(t, b, "fraction")
            g = s.guarantee(cfg)
            assert g.count >= t.n - t.n // (b + 1) ** 2
            assert verify_strategy(cfg, s, guarantee=g).ok


def test_build_dominating_subset():
    A = build_dominating_subset(complete(9), p=1.0)
    assert A == frozenset(range(9))
    rng = random.Random(2)
    n = 60
    g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.68])
    A = build_dominating_subset(g, seed=1, p=0.5, min_hits=4, max_size=30)
    assert len(A) <= 30 and all(len(g.neighbors(v) & A) > 4 for v in range(n))
    from mbdom.families import cycle

    with pytest.raises(SamplingError):
        build_dominating_subset(cycle(5))


def test_ary_tree_maker():
    from mbdom.hypergraph import maker_wins_against_all, root_leaf_paths

    h = root_leaf_paths(2, 3)
    assert maker_wins_against_all(h, 1, ary_tree_maker(2, 3).choose)[0]
    claw = ary_tree_maker(3, 2)
    assert claw.choose(0, 0) == 0
    assert claw.choose(1, 0b0010) in (2, 3)


def test_ary_stack_staller():
    from mbdom.strategies import AryStackStaller

    cfg = GameConfig(ary_stack(1, 2), 1)
    assert verify_strategy(cfg, AryStackStaller(1, 2)).ok


def test_by_name_and_optimal():
    cfg = GameConfig(path(7), 1)
    d = by_name("interval", Player.DOMINATOR, cfg, {"k": 1})
    s = by_name("greedy", Player.STALLER, cfg)
    assert play_match(cfg, d, s).status.outcome is Outcome.DOMINATOR_WON
    opt = Optimal(Player.DOMINATOR)
    assert verify_strategy(cfg, opt, guarantee=WinWithin(3)).ok
    with pytest.raises(NotApplicable):
        by_name("nope", Player.DOMINATOR, cfg)


def test_verify_reports_counterexamples():
    cfg = GameConfig(path(7), 1)
    r = verify_strategy(cfg, IntervalDominator(7, 1, 1), guarantee=WinWithin(2))
    assert not r.ok and r.counterexample
    from mbdom.game import replay

    _, status = replay(cfg, r.counterexample)
    assert status.outcome is not Outcome.DOMINATOR_WON or status.rounds > 2


from hypothesis import given, settings
from hypothesis import strategies as hst


@settings(max_examples=40, deadline=None)
@given(hst.integers(5, 30), hst.floats(0.2, 0.95), hst.floats(0.1, 1.0), hst.integers(0, 6), hst.integers(0, 99))
def test_sampler_output_meets_its_predicates(n, density, p, hits, seed):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density])
    try:
        A = build_dominating_subset(g, seed=seed, p=p, min_hits=hits, max_size=n * p + 2, budget=20)
    except SamplingError:
        return
    assert len(A) <= n * p + 2
    assert all(len(g.neighbors(v) & A) > hits for v in range(n))
