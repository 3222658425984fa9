"""Exact evaluation of the domination game by memoized exhaustive search.

States are bit vectors (Dominator set, Staller set, side to move).  The round
value is found by iterative deepening on a boolean question -- can Dominator
force a win within ``d`` more moves? -- whose answers are cached as bounds per
state, so deeper iterations reuse shallower ones.
"""

from __future__ import annotations

import itertools
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from .game import (
    GameConfig,
    GameState,
    IllegalMove,
    Move,
    Outcome,
    Player,
    apply_move,
    claimable,
    dominated_count,
    game_over,
    game_status,
    initial_state,
)
from .graph import InstanceTooLarge, bits, domination_number, mask_of
from .guarantees import (
    INFINITY,
    DominatesAtLeast,
    Guarantee,
    LastsAtLeast,
    StallerWins,
    WinWithin,
    value_json,
)

DEFAULT_CAPS = {1: 14, 2: 13, 3: 12}
FALLBACK_CAP = 11


def solver_cap(bias: int, caps: dict[int, int] | None = None) -> int:
    table = DEFAULT_CAPS if caps is None else caps
    return table.get(bias, FALLBACK_CAP)


def _check_cap(cfg: GameConfig, cap: int | None) -> None:
    limit = solver_cap(cfg.bias) if cap is None else cap
    if cfg.n > limit:
        raise InstanceTooLarge(f"instance too large: n={cfg.n} exceeds solver cap {limit} for bias {cfg.bias}")


@dataclass
class SolveReport:
    value: float
    states: int
    pv: list[Move] | None = None

    @property
    def finite(self) -> bool:
        return self.value != INFINITY

    def to_dict(self) -> dict:
        out = {"value": value_json(self.value), "states": self.states}
        if self.pv is not None:
            out["pv"] = [str(m) for m in self.pv]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _RoundSearch:
    """Depth-bounded AND/OR search for the round-minimizing game."""

    def __init__(self, cfg: GameConfig, exact_b: bool = True):
        self.cfg = cfg
        self.n = cfg.n
        self.b = cfg.bias
        self.masks = cfg.board.closed_masks
        self.full = cfg.full_mask
        self.target = cfg.target_mask
        self.forbidden = cfg.forbidden_mask
        self.exact_b = exact_b
        # (D, S, dominator_to_move) -> [largest depth known to fail, smallest known to win]
        self.memo: dict[tuple[int, int, bool], list] = {}
        self.nodes = 0
        self.unbounded = self.n + 1

    def cover(self, claim: int) -> int:
        c = 0
        masks = self.masks
        while claim:
            low = claim & -claim
            c |= masks[low.bit_length() - 1]
            claim ^= low
        return c

    def win(self, d_mask: int, s_mask: int, dom_turn: bool, depth: int) -> bool:
        key = (d_mask, s_mask, dom_turn)
        entry = self.memo.get(key)
        if entry is None:
            entry = [-1, math.inf]
            self.memo[key] = entry
        elif depth <= entry[0]:
            return False
        elif depth >= entry[1]:
            return True
        self.nodes += 1
        cov = self.cover(d_mask)
        if dom_turn:
            res = self._dominator(d_mask, s_mask, cov, depth)
        else:
            res = self._staller(d_mask, s_mask, cov, depth)
        if res:
            entry[1] = min(entry[1], depth)
        else:
            entry[0] = max(entry[0], depth)
        return res

    def _dominator(self, d_mask: int, s_mask: int, cov: int, depth: int) -> bool:
        if depth <= 0:
            return False
        masks = self.masks
        claim = self.full & ~(d_mask | s_mask) & ~self.forbidden
        if claim == 0:
            return False
        und = self.target & ~cov
        forced = 0
        best_gain = 0
        relevant = 0
        for t in bits(und):
            f = masks[t] & claim
            if f == 0:
                return False
            if f & (f - 1) == 0:
                forced |= f
            relevant |= f
        avail = claim.bit_count()
        hi = min(self.b, avail)
        if forced.bit_count() > hi:
            return False
        if self.exact_b:
            pool = relevant & ~forced
            sizes = [min(hi, forced.bit_count() + pool.bit_count())]
        else:
            pool = claim & ~forced
            sizes = range(max(1, forced.bit_count()), hi + 1)
        for v in bits(claim):
            g = (masks[v] & und).bit_count()
            if g > best_gain:
                best_gain = g
        if depth * self.b * best_gain < und.bit_count():
            return False
        order = sorted(bits(pool), key=lambda v: -(masks[v] & und).bit_count())
        nf = forced.bit_count()
        target = self.target
        for size in sizes:
            for combo in itertools.combinations(order, size - nf):
                c = forced
                for v in combo:
                    c |= 1 << v
                if size == 0:
                    continue
                new_cov = cov | self.cover(c)
                if target & ~new_cov == 0:
                    return True
                if depth > 1 and self.win(d_mask | c, s_mask, False, depth - 1):
                    return True
        return False

    def _staller(self, d_mask: int, s_mask: int, cov: int, depth: int) -> bool:
        masks = self.masks
        free = self.full & ~(d_mask | s_mask)
        if free == 0:
            return False
        claim = free & ~self.forbidden
        if claim == 0:
            return False
        und = self.target & ~cov
        pressure: dict[int, int] = {}
        relevant = 0
        for t in bits(und):
            f = masks[t] & claim
            c = f.bit_count()
            if c <= 1:
                return False
            relevant |= masks[t] & free
            for v in bits(f):
                if c < pressure.get(v, 99):
                    pressure[v] = c
        moves = bits(relevant) if self.exact_b else bits(free)
        moves.sort(key=lambda v: (pressure.get(v, 99), -(masks[v] & und).bit_count()))
        for v in moves:
            if not self.win(d_mask, s_mask | (1 << v), True, depth):
                return False
        return True

    # -- principal variation ------------------------------------------------
    def dominator_moves(self, d_mask: int, s_mask: int) -> list[int]:
        """All legal claims in lexicographic order (as masks)."""
        claim = bits(self.full & ~(d_mask | s_mask) & ~self.forbidden)
        hi = min(self.b, len(claim))
        sizes = [hi] if self.exact_b else range(1, hi + 1)
        out = []
        for size in sizes:
            for combo in itertools.combinations(claim, size):
                out.append(combo)
        out.sort()
        return [mask_of(c) for c in out]

    def decided_win(self, d_mask: int, s_mask: int, dom_turn: bool, depth: int) -> bool:
        if self.target & ~self.cover(d_mask) == 0:
            return True
        return self.win(d_mask, s_mask, dom_turn, depth)


def _initial_masks(cfg: GameConfig) -> tuple[int, int]:
    return mask_of(cfg.preclaimed), 0


def _lower_bound(cfg: GameConfig) -> int:
    if cfg.target is None and not cfg.preclaimed and not cfg.forbidden and cfg.n <= 20:
        return max(1, -(-domination_number(cfg.board) // cfg.bias))
    return 1


def solve_rounds(cfg: GameConfig, exact_b: bool = True, cap: int | None = None,
                 want_pv: bool = True) -> SolveReport:
    """Exact value: rounds Dominator needs against best Staller play, or infinity."""
    _check_cap(cfg, cap)
    search = _RoundSearch(cfg, exact_b=exact_b)
    d0, s0 = _initial_masks(cfg)
    dom_first = cfg.first is Player.DOMINATOR
    if cfg.target_mask & ~search.cover(d0) == 0:
        # already dominated before any move is made
        return SolveReport(0, 0, [] if want_pv else None)
    if not search.win(d0, s0, dom_first, search.unbounded):
        value = INFINITY
    else:
        value = None
        depth = _lower_bound(cfg)
        while value is None:
            if search.win(d0, s0, dom_first, depth):
                value = depth
            depth += 1
    pv = _principal_variation(search, cfg, value) if want_pv else None
    return SolveReport(value, len(search.memo), pv)


def _principal_variation(search: _RoundSearch, cfg: GameConfig, value: float) -> list[Move]:
    d_mask, s_mask = _initial_masks(cfg)
    dom_turn = cfg.first is Player.DOMINATOR
    st = initial_state(cfg)
    remaining = search.unbounded if value == INFINITY else int(value)
    line: list[Move] = []
    while not game_over(cfg, st):
        if dom_turn:
            options = search.dominator_moves(d_mask, s_mask)
            chosen = options[0]
            if value != INFINITY:
                for c in options:
                    if search.decided_win(d_mask | c, s_mask, False, remaining - 1):
                        chosen = c
                        break
                remaining -= 1
            mv = Move.dominator(bits(chosen))
            d_mask |= chosen
        else:
            free = bits(search.full & ~(d_mask | s_mask))
            chosen = free[0]
            for v in free:
                if value == INFINITY:
                    ok = not search.win(d_mask, s_mask | (1 << v), True, search.unbounded)
                else:
                    ok = not search.win(d_mask, s_mask | (1 << v), True, remaining - 1)
                if ok:
                    chosen = v
                    break
            mv = Move.staller(chosen)
            s_mask |= 1 << chosen
        st = apply_move(cfg, st, mv)
        line.append(mv)
        dom_turn = not dom_turn
    return line


# -- max-dominated objective -------------------------------------------------

def solve_max_dominated(cfg: GameConfig, cap: int | None = None) -> int:
    """Value of the game played to exhaustion with payoff |N[D] ∩ target|."""
    _check_cap(cfg, cap)
    masks = cfg.board.closed_masks
    full = cfg.full_mask
    target = cfg.target_mask
    forb = cfg.forbidden_mask
    b = cfg.bias
    memo: dict[tuple[int, int, bool], int] = {}

    def cover(m: int) -> int:
        c = 0
        for v in bits(m):
            c |= masks[v]
        return c

    total = target.bit_count()

    def value(d_mask: int, s_mask: int, dom_turn: bool) -> int:
        key = (d_mask, s_mask, dom_turn)
        hit = memo.get(key)
        if hit is not None:
            return hit
        cov = cover(d_mask)
        und = target & ~cov
        free = full & ~(d_mask | s_mask)
        claim = free & ~forb
        if und == 0:
            res = total
        elif dom_turn:
            if claim == 0:
                res = total - und.bit_count()
            else:
                relevant = 0
                for t in bits(und):
                    relevant |= masks[t] & claim
                size = min(b, claim.bit_count())
                pool = bits(relevant)
                filler = bits(claim & ~relevant)
                best = -1
                if len(pool) >= size:
                    combos = (mask_of(c) for c in itertools.combinations(pool, size))
                else:
                    combos = iter([mask_of(pool) | mask_of(filler[: size - len(pool)])])
                for c in combos:
                    r = value(d_mask | c, s_mask, False)
                    if r > best:
                        best = r
                        if best == total:
                            break
                res = best
        else:
            if free == 0:
                res = total - und.bit_count()
            else:
                relevant = 0
                for t in bits(und):
                    relevant |= masks[t] & free
                moves = bits(relevant) if relevant else bits(free)[:1]
                floor = total - und.bit_count()
                best = total + 1
                for v in moves:
                    r = value(d_mask, s_mask | (1 << v), True)
                    if r < best:
                        best = r
                        if best == floor:
                            break
                res = best
        memo[key] = res
        return res

    d0, s0 = _initial_masks(cfg)
    return value(d0, s0, cfg.first is Player.DOMINATOR)


# -- exhaustive strategy verification ---------------------------------------

@dataclass
class VerifyResult:
    ok: bool
    counterexample: list[Move] | None = None
    reason: str = ""
    lines: int = 0
    status: str = ""

    def __bool__(self) -> bool:
        return self.ok


VERIFY_CAP = 16


def _opponent_moves(cfg: GameConfig, st: GameState, exact_b: bool) -> list[Move]:
    if st.to_move is Player.STALLER:
        return [Move.staller(v) for v in st.free(cfg.n)]
    opts = claimable(cfg, st)
    hi = min(cfg.bias, len(opts))
    sizes = [hi] if exact_b else range(1, hi + 1)
    return [Move.dominator(c) for size in sizes for c in itertools.combinations(opts, size)]


def verify_strategy(cfg: GameConfig, strat, side: Player | None = None,
                    guarantee: Guarantee | None = None, opponent_exact_b: bool = False,
                    cap: int = VERIFY_CAP) -> VerifyResult:
    """Check ``strat`` meets ``guarantee`` against every opponent line.

    The opponent enumerates every legal move (Dominator: every claim of size
    1..b unless ``opponent_exact_b``).  The first failing line is returned
    as a counterexample.
    """
    if cfg.n > cap:
        raise InstanceTooLarge(f"instance too large: n={cfg.n} exceeds verification cap {cap}")
    side = strat.side if side is None else side
    if guarantee is None:
        guarantee = strat.guarantee(cfg)
    if guarantee is None:
        raise ValueError("strategy declares no guarantee for this configuration")
    if isinstance(guarantee, DominatesAtLeast) and cfg.objective != "dominated":
        cfg = cfg.with_(objective="dominated")

    lines = 0

    def judge(st: GameState) -> bool | None:
        """True/False once the line is settled, None to keep exploring."""
        status = game_status(cfg, st)
        if isinstance(guarantee, WinWithin):
            if status.outcome is Outcome.DOMINATOR_WON:
                return status.rounds <= guarantee.rounds
            if status.decided:
                return False
            if st.dominator_moves >= guarantee.rounds:
                return False
            return None
        if isinstance(guarantee, StallerWins):
            if status.outcome is Outcome.DOMINATOR_WON:
                return False
            if status.decided:
                return True
            return None
        if isinstance(guarantee, LastsAtLeast):
            if status.outcome is Outcome.DOMINATOR_WON:
                return status.rounds >= guarantee.rounds
            if status.decided or st.dominator_moves >= guarantee.rounds:
                return True
            return None
        if isinstance(guarantee, DominatesAtLeast):
            if dominated_count(cfg, st) >= guarantee.count:
                return True
            if game_over(cfg, st):
                return False
            return None
        raise TypeError(f"unknown guarantee {guarantee!r}")

    def explore(st: GameState, history: list[Move]) -> VerifyResult | None:
        nonlocal lines
        verdict = judge(st)
        if verdict is not None:
            lines += 1
            if verdict:
                return None
            return VerifyResult(False, list(history), f"guarantee violated: {guarantee}",
                                status=str(game_status(cfg, st)))
        if st.to_move is side:
            mv = strat.choose(cfg, st, tuple(history))
            try:
                nxt = apply_move(cfg, st, mv)
            except IllegalMove as exc:
                return VerifyResult(False, list(history) + [mv], f"illegal strategy move: {exc}")
            history.append(mv)
            bad = explore(nxt, history)
            history.pop()
            return bad
        for mv in _opponent_moves(cfg, st, opponent_exact_b):
            history.append(mv)
            bad = explore(apply_move(cfg, st, mv), history)
            history.pop()
            if bad is not None:
                return bad
        return None

    bad = explore(initial_state(cfg), [])
    if bad is not None:
        bad.lines = lines
        return bad
    return VerifyResult(True, None, "", lines)


def optimal_move(cfg: GameConfig, st: GameState, cap: int | None = None,
                 cache: dict | None = None) -> Move:
    """A solver-optimal move for the side to move (lexicographic tie-break).

    Dominator wins as fast as possible; Staller wins if he can, otherwise
    delays as long as possible.  ``cache`` keeps search tables across calls.
    """
    _check_cap(cfg, cap)
    if cache is None:
        search = _RoundSearch(cfg)
    else:
        search = cache.get(cfg)
        if search is None:
            search = cache[cfg] = _RoundSearch(cfg)
    d_mask, s_mask = mask_of(st.dominator), mask_of(st.staller)
    unbounded = search.unbounded
    if st.to_move is Player.DOMINATOR:
        options = search.dominator_moves(d_mask, s_mask)
        for depth in range(1, unbounded + 1):
            for c in options:
                if search.decided_win(d_mask | c, s_mask, False, depth - 1):
                    return Move.dominator(bits(c))
        return Move.dominator(bits(options[0]))
    free = bits(search.full & ~(d_mask | s_mask))
    # maximize the remaining value; losing lines for Dominator first
    best_v, best_depth = free[0], -1
    for v in free:
        if not search.win(d_mask, s_mask | (1 << v), True, unbounded):
            return Move.staller(v)
        depth = 0
        while not search.win(d_mask, s_mask | (1 << v), True, depth):
            depth += 1
        if depth > best_depth:
            best_v, best_depth = v, depth
    return Move.staller(best_v)


def replay_value(cfg: GameConfig, moves: Sequence[Move]) -> tuple[GameState, object]:
    st = initial_state(cfg)
    for mv in moves:
        st = apply_move(cfg, st, mv)
    return st, game_status(cfg, st)
