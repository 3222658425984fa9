"""Strategy interface and a few generic players."""

from __future__ import annotations

from collections.abc import Sequence

from ..game import GameConfig, GameState, Move, Player, claimable
from ..graph import InstanceTooLarge, bits, mask_of
from ..guarantees import Guarantee


class NotApplicable(ValueError):
    """The strategy's preconditions do not hold for this configuration."""


class Strategy:
    """A deterministic move rule for one side.

    ``choose`` must depend only on its arguments, so a strategy can be
    replayed and verified exhaustively.  Subclasses may keep caches of pure
    computations.
    """

    side: Player = Player.DOMINATOR
    name: str = "strategy"

    def applies(self, cfg: GameConfig) -> bool:
        return True

    def guarantee(self, cfg: GameConfig) -> Guarantee | None:
        return None

    def choose(self, cfg: GameConfig, st: GameState, history: Sequence[Move]) -> Move:
        raise NotImplementedError

    def require(self, cfg: GameConfig) -> None:
        if not self.applies(cfg):
            raise NotApplicable(f"{self.name} does not apply to this configuration")

    def __repr__(self) -> str:
        return f"<{self.name} ({self.side.value})>"


# -- helpers shared by strategies --------------------------------------------

def free_vertices(cfg: GameConfig, st: GameState) -> list[int]:
    return st.free(cfg.n)


def covered_mask(cfg: GameConfig, vertices) -> int:
    c = 0
    masks = cfg.board.closed_masks
    for v in vertices:
        c |= masks[v]
    return c


def pad_claim(cfg: GameConfig, st: GameState, picks: Sequence[int]) -> Move:
    """Dominator move from ``picks``: drop illegal entries, cap at b, and
    fall back to the lowest claimable vertex if nothing is left."""
    legal = set(claimable(cfg, st))
    out: list[int] = []
    for v in picks:
        if v in legal and v not in out:
            out.append(v)
        if len(out) == cfg.bias:
            break
    if not out:
        out = [min(legal)]
    return Move.dominator(out)


def winning_block(cfg: GameConfig, st: GameState) -> int | None:
    """A free vertex completing the closed neighbourhood of an undominated
    target, if Staller has one."""
    masks = cfg.board.closed_masks
    cov = covered_mask(cfg, st.dominator)
    smask = mask_of(st.staller) | cfg.forbidden_mask
    free = cfg.full_mask & ~(mask_of(st.dominator) | mask_of(st.staller))
    for t in bits(cfg.target_mask & ~cov):
        rest = masks[t] & ~smask
        if rest & (rest - 1) == 0 and rest & free:
            return rest.bit_length() - 1
    return None


class FirstFree(Strategy):
    """Lowest free vertices: b of them for Dominator, one for Staller."""

    def __init__(self, side: Player):
        self.side = side
        self.name = "first-free"

    def choose(self, cfg, st, history):
        if self.side is Player.DOMINATOR:
            return Move.dominator(claimable(cfg, st)[: cfg.bias])
        return Move.staller(st.free(cfg.n)[0])


class GreedyStaller(Strategy):
    """Win at once if possible, otherwise attack the undominated vertex
    whose closed neighbourhood has the fewest free vertices left."""

    side = Player.STALLER
    name = "greedy"

    def choose(self, cfg, st, history):
        win = winning_block(cfg, st)
        if win is not None:
            return Move.staller(win)
        masks = cfg.board.closed_masks
        cov = covered_mask(cfg, st.dominator)
        free = cfg.full_mask & ~(mask_of(st.dominator) | mask_of(st.staller))
        best = None
        for t in bits(cfg.target_mask & ~cov):
            f = masks[t] & free
            if f and (best is None or f.bit_count() < best[0]):
                best = (f.bit_count(), t, f)
        if best is not None:
            return Move.staller(bits(best[2])[0])
        return Move.staller(st.free(cfg.n)[0])


class GreedyDominator(Strategy):
    """Claim vertices that dominate the most undominated targets."""

    side = Player.DOMINATOR
    name = "greedy"

    def choose(self, cfg, st, history):
        masks = cfg.board.closed_masks
        und = cfg.target_mask & ~covered_mask(cfg, st.dominator)
        picks = []
        for _ in range(cfg.bias):
            opts = [v for v in claimable(cfg, st) if v not in picks]
            if not opts:
                break
            v = max(opts, key=lambda x: ((masks[x] & und).bit_count(), -x))
            picks.append(v)
            und &= ~masks[v]
        return pad_claim(cfg, st, picks)


class Optimal(Strategy):
    """Solver-backed play; lexicographically first optimal move."""

    def __init__(self, side: Player, cap: int | None = None):
        self.side = side
        self.cap = cap
        self.name = "optimal"
        self._searches: dict = {}

    def applies(self, cfg):
        from ..solver import solver_cap

        return cfg.n <= (self.cap or solver_cap(cfg.bias))

    def choose(self, cfg, st, history):
        from ..solver import optimal_move

        if not self.applies(cfg):
            raise InstanceTooLarge(f"instance too large for solver-backed play: n={cfg.n}")
        return optimal_move(cfg, st, self.cap, cache=self._searches)
