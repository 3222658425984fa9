import pytest

from mbdom.families import complete, cycle, path, star
from mbdom.game import (
    GameConfig,
    GameOver,
    Move,
    OccupiedVertex,
    Outcome,
    OversizedClaim,
    Player,
    WrongTurn,
    apply_move,
    format_transcript,
    game_status,
    initial_state,
    parse_transcript,
    play_match,
    replay,
)
from mbdom.graph import Graph
from mbdom.strategies import FirstFree, GreedyStaller, IntervalDominator, ProblematicStaller


def test_initial_states():
    for g, b, first in [(path(3), 1, Player.DOMINATOR), (path(3), 1, Player.STALLER), (cycle(5), 2, Player.DOMINATOR)]:
        st = initial_state(GameConfig(g, b, first))
        assert not st.dominator and not st.staller and st.to_move is first


def test_center_of_p3_wins_at_once():
    cfg = GameConfig(path(3), 1)
    st = apply_move(cfg, initial_state(cfg), Move.dominator([1]))
    status = game_status(cfg, st)
    assert status.outcome is Outcome.DOMINATOR_WON and status.rounds == 1


def test_staller_completes_a_closed_neighbourhood():
    cfg = GameConfig(star(2), 1, Player.STALLER)
    st, status = replay(cfg, [Move.staller(0), Move.dominator([1]), Move.staller(2)])
    assert status.outcome is Outcome.STALLER_WON


def test_illegal_moves():
    cfg = GameConfig(path(3), 1, Player.STALLER)
    st = apply_move(cfg, initial_state(cfg), Move.staller(1))
    with pytest.raises(OccupiedVertex):
        apply_move(cfg, st, Move.dominator([1]))
    with pytest.raises(WrongTurn):
        apply_move(cfg, st, Move.staller(0))
    with pytest.raises(OversizedClaim):
        apply_move(cfg, st, Move.dominator([0, 2]))
    cfg = GameConfig(path(3), 1)
    st = apply_move(cfg, initial_state(cfg), Move.dominator([1]))
    with pytest.raises(GameOver):
        apply_move(cfg, st, Move.staller(0))


def test_status_edge_cases():
    k1 = GameConfig(Graph.from_edges(1, []), 1)
    assert game_status(k1, initial_state(k1)).outcome is Outcome.ONGOING
    cfg = GameConfig(complete(3), 2)
    st, status = replay(cfg, [Move.dominator([0, 1])])
    assert status.outcome is Outcome.DOMINATOR_WON


def test_interval_dominator_on_p7():
    cfg = GameConfig(path(7), 1)
    m = play_match(cfg, IntervalDominator(7, 1, 1), GreedyStaller())
    assert m.status.outcome is Outcome.DOMINATOR_WON and m.status.rounds <= 3


def test_first_free_on_k2():
    cfg = GameConfig(path(2), 1)
    m = play_match(cfg, FirstFree(Player.DOMINATOR), FirstFree(Player.STALLER))
    assert m.status.outcome is Outcome.DOMINATOR_WON and m.status.rounds == 1


def test_problematic_staller_beats_first_free():
    for b in (1, 2, 3):
        cfg = GameConfig(star(b + 1), b, Player.STALLER)
        m = play_match(cfg, FirstFree(Player.DOMINATOR), ProblematicStaller(star(b + 1), b))
        assert m.status.outcome is Outcome.STALLER_WON


def test_transcript_roundtrip():
    cfg = GameConfig(path(7), 1)
    m = play_match(cfg, IntervalDominator(7, 1, 1), GreedyStaller())
    text = m.transcript()
    moves, result = parse_transcript(text)
    assert moves == m.moves and result == str(m.status)
    assert replay(cfg, moves)[1] == m.status
    assert format_transcript(moves, m.status) == text
