"""Rules of the (b:1) Maker-Breaker domination game.

Dominator claims between 1 and ``b`` free vertices per move, Staller claims
exactly one.  Dominator wins as soon as her vertices dominate the target set
(all of V by default); Staller wins once some target vertex can no longer be
dominated, or when the board runs out.

Two optional extensions exist for the tree characterization and the
path-family adversary: ``preclaimed`` vertices start in Dominator's set, and
``forbidden`` vertices may never be claimed by Dominator.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .graph import Graph, bits, mask_of

if TYPE_CHECKING:
    from .strategies.base import Strategy


class Player(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def other(self) -> Player:
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR

    @property
    def tag(self) -> str:
        return "D" if self is Player.DOMINATOR else "S"

    @classmethod
    def parse(cls, text: str) -> Player:
        t = text.strip().lower()
        if t in ("d", "dominator", "dom"):
            return cls.DOMINATOR
        if t in ("s", "staller", "sta"):
            return cls.STALLER
        raise ValueError(f"unknown player {text!r}")


DOMINATOR = Player.DOMINATOR
STALLER = Player.STALLER


class IllegalMove(ValueError):
    pass


class OccupiedVertex(IllegalMove):
    pass


class WrongTurn(IllegalMove):
    pass


class OversizedClaim(IllegalMove):
    pass


class GameOver(IllegalMove):
    pass


class StrategyError(RuntimeError):
    """A strategy produced an illegal move; carries the offending side and move."""

    def __init__(self, side: Player, move, history, cause: Exception):
        self.side = side
        self.move = move
        self.history = list(history)
        self.cause = cause
        super().__init__(f"{side.value} strategy played illegal move {move}: {cause}")


@dataclass(frozen=True)
class GameConfig:
    board: Graph
    bias: int = 1
    first: Player = Player.DOMINATOR
    preclaimed: frozenset[int] = frozenset()
    forbidden: frozenset[int] = frozenset()
    target: frozenset[int] | None = None
    # "rounds": stop at the first decided status; "dominated": play until the
    # mover has no legal move and score |N[D] ∩ target|
    objective: str = "rounds"

    def __post_init__(self):
        if self.bias < 1:
            raise ValueError("bias must be at least 1")
        if self.objective not in ("rounds", "dominated"):
            raise ValueError(f"unknown objective {self.objective!r}")
        for name in ("preclaimed", "forbidden"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.target is not None:
            object.__setattr__(self, "target", frozenset(self.target))
        if self.preclaimed & self.forbidden:
            raise ValueError("preclaimed and forbidden vertices overlap")

    @property
    def n(self) -> int:
        return self.board.n

    @property
    def full_mask(self) -> int:
        return (1 << self.board.n) - 1

    @property
    def target_mask(self) -> int:
        return self.full_mask if self.target is None else mask_of(self.target)

    @property
    def forbidden_mask(self) -> int:
        return mask_of(self.forbidden)

    def with_(self, **changes) -> GameConfig:
        from dataclasses import replace

        return replace(self, **changes)


@dataclass(frozen=True)
class GameState:
    dominator: frozenset[int] = frozenset()
    staller: frozenset[int] = frozenset()
    to_move: Player = Player.DOMINATOR
    dominator_moves: int = 0

    def free(self, n: int) -> list[int]:
        taken = self.dominator | self.staller
        return [v for v in range(n) if v not in taken]


@dataclass(frozen=True)
class Move:
    player: Player
    vertices: tuple[int, ...]

    @classmethod
    def dominator(cls, vertices: Iterable[int]) -> Move:
        return cls(Player.DOMINATOR, tuple(sorted(set(vertices))))

    @classmethod
    def staller(cls, vertex: int) -> Move:
        return cls(Player.STALLER, (vertex,))

    def __str__(self) -> str:
        return f"{self.player.tag} " + ",".join(str(v) for v in self.vertices)


class Outcome(enum.Enum):
    ONGOING = "Ongoing"
    DOMINATOR_WON = "DominatorWon"
    STALLER_WON = "StallerWon"


@dataclass(frozen=True)
class GameStatus:
    outcome: Outcome
    rounds: int | None = None

    @property
    def decided(self) -> bool:
        return self.outcome is not Outcome.ONGOING

    def __str__(self) -> str:
        if self.outcome is Outcome.DOMINATOR_WON:
            return f"DominatorWon {self.rounds}"
        return self.outcome.value


ONGOING = GameStatus(Outcome.ONGOING)
STALLER_WON = GameStatus(Outcome.STALLER_WON)


def initial_state(cfg: GameConfig) -> GameState:
    return GameState(frozenset(cfg.preclaimed), frozenset(), cfg.first, 0)


def claimable(cfg: GameConfig, st: GameState) -> list[int]:
    taken = st.dominator | st.staller | cfg.forbidden
    return [v for v in range(cfg.n) if v not in taken]


def dominated(cfg: GameConfig, st: GameState) -> frozenset[int]:
    m = 0
    for v in st.dominator:
        m |= cfg.board.closed_mask(v)
    return frozenset(bits(m))


def dominated_count(cfg: GameConfig, st: GameState) -> int:
    m = 0
    for v in st.dominator:
        m |= cfg.board.closed_mask(v)
    return (m & cfg.target_mask).bit_count()


def game_status(cfg: GameConfig, st: GameState) -> GameStatus:
    masks = cfg.board.closed_masks
    dmask = mask_of(st.dominator)
    smask = mask_of(st.staller)
    covered = 0
    for v in st.dominator:
        covered |= masks[v]
    target = cfg.target_mask
    if target & ~covered == 0:
        return GameStatus(Outcome.DOMINATOR_WON, st.dominator_moves)
    blocked = smask | cfg.forbidden_mask
    for t in bits(target & ~covered):
        if masks[t] & ~blocked == 0:
            return STALLER_WON
    free = cfg.full_mask & ~(dmask | smask)
    if free == 0:
        return STALLER_WON
    if st.to_move is Player.DOMINATOR and free & ~cfg.forbidden_mask == 0:
        return STALLER_WON
    return ONGOING


def game_over(cfg: GameConfig, st: GameState) -> bool:
    if cfg.objective == "rounds":
        return game_status(cfg, st).decided
    if st.to_move is Player.DOMINATOR:
        return not claimable(cfg, st)
    return not st.free(cfg.n)


def apply_move(cfg: GameConfig, st: GameState, mv: Move) -> GameState:
    if game_over(cfg, st):
        raise GameOver("game is already over")
    if mv.player is not st.to_move:
        raise WrongTurn(f"{mv.player.value} moved but it is {st.to_move.value}'s turn")
    vs = mv.vertices
    if len(set(vs)) != len(vs) or not vs:
        raise IllegalMove(f"claim {vs} must be a nonempty set of distinct vertices")
    for v in vs:
        if not 0 <= v < cfg.n:
            raise IllegalMove(f"vertex {v} is not on the board")
        if v in st.dominator or v in st.staller:
            raise OccupiedVertex(f"vertex {v} is already claimed")
    if mv.player is Player.STALLER:
        if len(vs) != 1:
            raise OversizedClaim("Staller claims exactly one vertex")
        return GameState(st.dominator, st.staller | {vs[0]}, Player.DOMINATOR, st.dominator_moves)
    if len(vs) > cfg.bias:
        raise OversizedClaim(f"Dominator claimed {len(vs)} vertices with bias {cfg.bias}")
    bad = [v for v in vs if v in cfg.forbidden]
    if bad:
        raise IllegalMove(f"vertex {bad[0]} is forbidden for Dominator")
    return GameState(st.dominator | set(vs), st.staller, Player.STALLER, st.dominator_moves + 1)


# -- match playback ----------------------------------------------------------

@dataclass
class Match:
    config: GameConfig
    moves: list[Move] = field(default_factory=list)
    state: GameState | None = None
    status: GameStatus = ONGOING

    def transcript(self) -> str:
        return format_transcript(self.moves, self.status)


def format_transcript(moves: Sequence[Move], status: GameStatus) -> str:
    lines = [str(m) for m in moves]
    lines.append(f"RESULT {status}")
    return "\n".join(lines) + "\n"


def parse_transcript(text: str) -> tuple[list[Move], str]:
    moves = []
    result = ""
    for raw in text.splitlines():
        s = raw.strip()
        if not s:
            continue
        tag, _, rest = s.partition(" ")
        if tag == "RESULT":
            result = rest.strip()
        elif tag in ("D", "S"):
            vs = tuple(int(x) for x in rest.split(","))
            moves.append(Move(Player.DOMINATOR if tag == "D" else Player.STALLER, vs))
        else:
            raise ValueError(f"bad transcript line {s!r}")
    return moves, result


def replay(cfg: GameConfig, moves: Iterable[Move]) -> tuple[GameState, GameStatus]:
    st = initial_state(cfg)
    for mv in moves:
        st = apply_move(cfg, st, mv)
    return st, game_status(cfg, st)


def play_match(cfg: GameConfig, dom: Strategy, sta: Strategy, max_rounds: int | None = None) -> Match:
    st = initial_state(cfg)
    match = Match(cfg, [], st)
    while not game_over(cfg, st):
        if max_rounds is not None and st.dominator_moves >= max_rounds:
            break
        player = dom if st.to_move is Player.DOMINATOR else sta
        mv = player.choose(cfg, st, tuple(match.moves))
        try:
            st = apply_move(cfg, st, mv)
        except IllegalMove as exc:
            raise StrategyError(st.to_move, mv, match.moves, exc) from exc
        match.moves.append(mv)
    match.state = st
    match.status = game_status(cfg, st)
    return match
