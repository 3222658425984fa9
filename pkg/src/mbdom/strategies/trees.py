"""Strategies on trees: goodness-driven play, pairing over admissible stars,
the two T_{k,b} strategies and the d*-adversary."""

from __future__ import annotations

import math
from collections.abc import Sequence

from ..families import TkbLayout, tkb
from ..game import GameConfig, GameState, Move, Player, claimable
from ..goodness import Witness, dominator_first_set, find_problematic, forest_after, is_admissible
from ..graph import Graph, bits, canonical_forest, mask_of, minimum_dominating_set
from ..guarantees import LastsAtLeast, StallerWins, WinWithin
from .base import NotApplicable, Strategy, covered_mask, pad_claim, winning_block


def _components(t: Graph, alive: set[int]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp, stack = [s], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for u in t.adj[v]:
                if u in alive and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


# -- Staller from a problematic sequence -----------------------------------------

class ProblematicStaller(Strategy):
    """Staller plays v_1, ..., v_t, u of a problematic sequence, cashing in
    any leaf Dominator leaves unanswered.

    With Staller first the witness is for (T, preclaimed).  With Dominator
    first it is recomputed for the set she claimed in her first move.
    """

    side = Player.STALLER
    name = "problematic"

    def __init__(self, t: Graph, b: int, witness: Witness | None = None):
        self.t = t
        self.b = b
        self.fixed = witness
        self._cache: dict[frozenset, Witness | None] = {}

    def _witness(self, A: frozenset[int]) -> Witness | None:
        if self.fixed is not None and not A:
            return self.fixed
        if A not in self._cache:
            self._cache[A] = find_problematic(self.t, A, self.b)
        return self._cache[A]

    def _exclusion(self, cfg: GameConfig, history: Sequence[Move]) -> frozenset[int] | None:
        A = frozenset(cfg.preclaimed)
        if cfg.first is Player.DOMINATOR:
            if not history:
                return None
            A |= frozenset(history[0].vertices)
        return A

    def applies(self, cfg: GameConfig) -> bool:
        if cfg.board.adj != self.t.adj or cfg.bias != self.b or cfg.forbidden or cfg.target is not None:
            return False
        if cfg.first is Player.STALLER:
            return self._witness(frozenset(cfg.preclaimed)) is not None
        return not cfg.preclaimed and dominator_first_set(self.t, self.b) is None

    def guarantee(self, cfg: GameConfig):
        return StallerWins() if self.applies(cfg) else None

    def choose(self, cfg, st, history):
        win = winning_block(cfg, st)
        if win is not None:
            return Move.staller(win)
        A = self._exclusion(cfg, history)
        wit = self._witness(A) if A is not None else None
        free = set(st.free(cfg.n))
        if wit is not None:
            for v in wit.moves:
                if v in free:
                    return Move.staller(v)
        return Move.staller(min(free))


# -- Dominator following the goodness induction ----------------------------------

class RecursiveGoodDominator(Strategy):
    """Dominator on an (A,b)-good tree.

    The board splits into the components of T minus Staller's vertices, each
    carrying the exclusion set (A ∪ D) ∩ C.  When Staller claims w in a
    component C, every component C_i of C - w that is not good for its
    exclusion set (or is a lone undominated neighbour of w) gets its
    connector x_i claimed; if that leaves w undominated, a connector is
    claimed anyway.  With Dominator first the opening move is a set A with
    |A| <= b for which T is (A,b)-good.
    """

    side = Player.DOMINATOR
    name = "recursive-good"

    def __init__(self, t: Graph, b: int):
        self.t = t
        self.b = b
        self._good: dict[str, bool] = {}
        self._opening = None

    def component_good(self, comp: Sequence[int], excl: frozenset[int]) -> bool:
        mark = lambda v: "a" if v in excl else ""  # noqa: E731
        key = canonical_forest(self.t, comp, mark)
        if key not in self._good:
            self._good[key] = find_problematic(self.t, excl & set(comp), self.b, alive=comp) is None
        return self._good[key]

    def opening(self) -> frozenset[int] | None:
        if self._opening is None:
            self._opening = (dominator_first_set(self.t, self.b),)
        return self._opening[0]

    def applies(self, cfg: GameConfig) -> bool:
        if cfg.board.adj != self.t.adj or cfg.bias != self.b or cfg.forbidden or cfg.target is not None:
            return False
        if self.t.n < 2 and cfg.first is Player.STALLER:
            return False
        if cfg.first is Player.STALLER:
            return find_problematic(self.t, cfg.preclaimed, self.b) is None
        if cfg.preclaimed:
            return False
        return self.opening() is not None

    def guarantee(self, cfg: GameConfig):
        return WinWithin(cfg.n) if self.applies(cfg) else None

    def choose(self, cfg, st, history):
        t = self.t
        if cfg.first is Player.DOMINATOR and st.dominator_moves == 0:
            A = self.opening()
            return pad_claim(cfg, st, sorted(A) if A else [])
        if not history or history[-1].player is not Player.STALLER:
            return pad_claim(cfg, st, [])
        w = history[-1].vertices[0]
        dom = set(st.dominator)
        prev_s = set(st.staller) - {w}
        alive = set(range(t.n)) - prev_s
        comp = next(c for c in _components(t, alive) if w in c)
        rest = set(comp) - {w}
        excl = frozenset(dom)
        picks: list[int] = []
        connectors = []
        for sub in _components(t, rest):
            x = next(u for u in t.adj[w] if u in sub)
            connectors.append(x)
            if len(sub) == 1:
                bad = x not in dom
            else:
                bad = not self.component_good(sub, excl)
            if bad and x not in dom:
                picks.append(x)
        covered = covered_mask(cfg, dom | set(picks))
        if not picks and not (covered >> w) & 1:
            free_conn = [x for x in connectors if x not in dom and x not in st.staller]
            picks = free_conn[:1]
        return pad_claim(cfg, st, picks)


# -- pairing over the stars of an admissible sequence ----------------------------

class StarPairingDominator(Strategy):
    """Dominator, Staller first, on a tree with an admissible sequence.

    V_i = {v_i} plus the b leaves it removes.  Staller entering an untouched
    V_i is answered by taking the rest of V_i; a move on the residual forest
    is answered by ``inner`` there; once the residual is dominated, spare
    moves go to untouched V_i.
    """

    side = Player.DOMINATOR
    name = "star-pairing"

    def __init__(self, t: Graph, seq: Sequence[int], b: int, inner: Strategy | None = None):
        if not is_admissible(t, seq, b):
            raise NotApplicable("sequence is not admissible")
        self.t, self.seq, self.b = t, tuple(seq), b
        trace = forest_after(t, seq)
        self.blocks = [(step.vertex, (step.vertex,) + step.removed_leaves) for step in trace.steps]
        self.rest = sorted(trace.final)
        self.sub, self.labels = t.induced(self.rest) if self.rest else (None, [])
        self.back = {new: old for new, old in enumerate(self.labels)}
        self.fwd = {old: new for new, old in enumerate(self.labels)}
        self.inner = inner

    def sub_config(self, cfg: GameConfig) -> GameConfig | None:
        if self.sub is None:
            return None
        return GameConfig(self.sub, cfg.bias, Player.STALLER)

    def applies(self, cfg: GameConfig) -> bool:
        if cfg.board.adj != self.t.adj or cfg.bias != self.b or cfg.first is not Player.STALLER:
            return False
        if cfg.preclaimed or cfg.forbidden or cfg.target is not None:
            return False
        if self.sub is None:
            return True
        return self.inner is not None and self.inner.applies(self.sub_config(cfg))

    def guarantee(self, cfg: GameConfig):
        if not self.applies(cfg):
            return None
        if self.sub is None:
            return WinWithin(len(self.seq))
        g = self.inner.guarantee(self.sub_config(cfg))
        if not isinstance(g, WinWithin):
            return None
        return WinWithin(len(self.seq) + g.rounds)

    def _residual_dominated(self, dom: set[int]) -> bool:
        inside = {self.fwd[v] for v in dom if v in self.fwd}
        cov = 0
        for v in inside:
            cov |= self.sub.closed_mask(v)
        return cov == (1 << self.sub.n) - 1

    def choose(self, cfg, st, history):
        dom = set(st.dominator)
        w = history[-1].vertices[0] if history and history[-1].player is Player.STALLER else None
        for center, block in self.blocks:
            if w in block and not dom & set(block):
                return pad_claim(cfg, st, [v for v in block if v not in st.staller])
        if self.sub is not None and not self._residual_dominated(dom) and self.inner is not None:
            sub_cfg = self.sub_config(cfg)
            sub_hist = []
            for mv in history:
                inside = [self.fwd[v] for v in mv.vertices if v in self.fwd]
                if inside:
                    sub_hist.append(Move(mv.player, tuple(inside)))
            sub_st = GameState(
                frozenset(self.fwd[v] for v in dom if v in self.fwd),
                frozenset(self.fwd[v] for v in st.staller if v in self.fwd),
                Player.DOMINATOR,
                sum(1 for m in sub_hist if m.player is Player.DOMINATOR),
            )
            if sub_st.free(self.sub.n):
                mv = self.inner.choose(sub_cfg, sub_st, tuple(sub_hist))
                return pad_claim(cfg, st, [self.back[v] for v in mv.vertices])
        for center, block in self.blocks:
            if not dom & set(block) and center not in st.staller:
                return pad_claim(cfg, st, [center] + [v for v in block[1:] if v not in st.staller])
        return pad_claim(cfg, st, [])


# -- the star-chain trees T_{k,b} -----------------------------------------------

class TkbDominator(Strategy):
    """Staller first on T_{k,b}: complete an untouched star Staller just
    entered, then claim centers of stars free of Staller, preferring the
    full stars and low indices."""

    side = Player.DOMINATOR
    name = "tkb"

    def __init__(self, k: int, b: int):
        self.k, self.b = k, b
        self.layout = TkbLayout(k, b)
        self.stars = self.layout.stars()
        self.board = tkb(k, b)

    def applies(self, cfg):
        return (cfg.board.adj == self.board.adj and cfg.bias == self.b and cfg.first is Player.STALLER
                and not cfg.preclaimed and not cfg.forbidden and cfg.target is None and self.k >= 2)

    def guarantee(self, cfg):
        from ..formulas import gamma_tkb

        return WinWithin(gamma_tkb(self.k, self.b)) if self.applies(cfg) else None

    def choose(self, cfg, st, history):
        dom, sta = set(st.dominator), set(st.staller)
        w = history[-1].vertices[0] if history and history[-1].player is Player.STALLER else None
        picks: list[int] = []
        for star in self.stars:
            if w in star and not dom & set(star):
                picks += [v for v in star if v not in sta]
        last = len(self.stars) - 1
        order = sorted(range(len(self.stars)), key=lambda i: (i == last and self.layout.r != 1, i))
        for i in order:
            star = self.stars[i]
            if len(picks) >= self.b:
                break
            if not (dom | set(picks)) & set(star) and not sta & set(star):
                picks.append(star[0])
        return pad_claim(cfg, st, picks[: self.b])


class TkbStaller(Strategy):
    """Staller first on T_{k,b}: win at once if possible, else take a free
    center of a full star (untouched stars first), else the lowest free
    vertex.  With r = 1 the first move is the center of the enlarged star."""

    side = Player.STALLER
    name = "tkb"

    def __init__(self, k: int, b: int):
        self.k, self.b = k, b
        self.layout = TkbLayout(k, b)
        self.stars = self.layout.stars()
        self.board = tkb(k, b)

    def applies(self, cfg):
        return (cfg.board.adj == self.board.adj and cfg.bias == self.b and cfg.first is Player.STALLER
                and not cfg.preclaimed and not cfg.forbidden and cfg.target is None)

    def guarantee(self, cfg):
        from ..formulas import gamma_tkb

        return LastsAtLeast(gamma_tkb(self.k, self.b)) if self.applies(cfg) else None

    def choose(self, cfg, st, history):
        win = winning_block(cfg, st)
        if win is not None:
            return Move.staller(win)
        free = set(st.free(cfg.n))
        merged = self.layout.r == 1 and self.layout.q >= 2
        if merged and not st.staller and not st.dominator:
            return Move.staller(self.stars[-1][0])
        full = self.stars if merged else self.stars[:-1]
        dom = set(st.dominator)
        options = [s for s in full if s[0] in free]
        options.sort(key=lambda s: (bool(dom & set(s)), s[0]))
        if options:
            return Move.staller(options[0][0])
        return Move.staller(min(free))


# -- adversary from a minimum dominating set -------------------------------------

class DStarStaller(Strategy):
    """Staller first on a tree: for the first ⌈|A|/(b+1)⌉ moves claim a free
    vertex of a minimum dominating set A with the most privately assigned
    neighbours d*(v); afterwards the lowest free vertex."""

    side = Player.STALLER
    name = "dstar"

    def __init__(self, t: Graph, b: int):
        self.t, self.b = t, b
        self.A = minimum_dominating_set(t)
        inA = set(self.A)
        self.dstar = {v: 0 for v in self.A}
        for w in range(t.n):
            if w in inA:
                continue
            owners = sorted(u for u in t.adj[w] if u in inA)
            self.dstar[owners[0]] += 1
        self.phase = -(-len(self.A) // (b + 1))

    def applies(self, cfg):
        return cfg.board.adj == self.t.adj and cfg.bias == self.b and cfg.first is Player.STALLER

    def guarantee(self, cfg):
        if not self.applies(cfg):
            return None
        return LastsAtLeast(-(-self.t.n // (self.b * (self.b + 3))))

    def choose(self, cfg, st, history):
        free = set(st.free(cfg.n))
        if len(st.staller) < self.phase:
            opts = [v for v in self.A if v in free]
            if opts:
                return Move.staller(max(opts, key=lambda v: (self.dstar[v], -v)))
        return Move.staller(min(free))
