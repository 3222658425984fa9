"""Potential-function play and the minimum-degree constructions."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from ..families import ary_stack
from ..game import GameConfig, Move, Player
from ..graph import Graph, mask_of
from ..guarantees import DominatesAtLeast, StallerWins, WinWithin
from ..hypergraph import AryTreeMaker, beck_choice
from .base import NotApplicable, Strategy, pad_claim


class SamplingError(RuntimeError):
    pass


class NeighborhoodBreakerDominator(Strategy):
    """Dominator first, playing Breaker with bias q = b on the sets N[v]
    (``full``/``fraction``) or N[v] ∩ A (``subset``, claiming inside A only).

    In ``full`` and ``subset`` mode the potential must start below 1, so
    Staller never owns a whole set and Dominator ends up dominating.  In
    ``fraction`` mode the game is played to exhaustion and Staller owns at
    most ⌊Σ (b+1)^-|N[v]|⌋ closed neighbourhoods.
    """

    side = Player.DOMINATOR

    def __init__(self, g: Graph, b: int, mode: str = "full", subset=None):
        if mode not in ("full", "subset", "fraction"):
            raise ValueError(f"unknown mode {mode!r}")
        self.g, self.b, self.mode = g, b, mode
        self.name = "neighborhood-breaker"
        if mode == "subset":
            if subset is None:
                raise ValueError("subset mode needs the set A")
            self.A = frozenset(subset)
            self.sets = [g.closed_neighborhood(v) & self.A for v in range(g.n)]
        else:
            self.A = frozenset(range(g.n))
            self.sets = [g.closed_neighborhood(v) for v in range(g.n)]
        self.masks = [mask_of(s) for s in self.sets]
        self.potential = sum((Fraction(1, (1 + b) ** len(s)) for s in self.sets), Fraction(0))
        if mode != "fraction" and self.potential >= 1:
            raise NotApplicable(f"potential {float(self.potential):.4f} is not below 1")

    def applies(self, cfg):
        return (cfg.board.adj == self.g.adj and cfg.bias == self.b and cfg.first is Player.DOMINATOR
                and not cfg.preclaimed and not cfg.forbidden and cfg.target is None)

    def guarantee(self, cfg):
        if not self.applies(cfg):
            return None
        n, b = self.g.n, self.b
        if self.mode == "full":
            return WinWithin(-(-n // (b + 1)))
        if self.mode == "subset":
            return WinWithin(-(-len(self.A) // b))
        return DominatesAtLeast(n - math.floor(self.potential))

    def choose(self, cfg, st, history):
        maker = mask_of(st.staller)
        breaker = mask_of(st.dominator)
        free = mask_of(self.A) & ~(maker | breaker)
        picks = beck_choice(self.masks, self.b, maker, breaker, free, self.b)
        return pad_claim(cfg, st, picks)


def build_dominating_subset(g: Graph, b: int = 1, seed: int = 0, p: float | None = None,
                            min_hits: float | None = None, max_size: float | None = None,
                            budget: int = 200) -> frozenset[int]:
    """Sample A by independent inclusion until every vertex has more than
    ``min_hits`` neighbours in A and |A| <= ``max_size``.

    Defaults: p = 9 ln(n)/δ (capped at 1), min_hits = 2 ln n,
    max_size = (10/9) p n.  Raises SamplingError after ``budget`` tries.
    """
    n = g.n
    delta = g.min_degree()
    if p is None:
        p = 1.0 if delta == 0 else min(1.0, 9 * math.log(n) / delta)
    if min_hits is None:
        min_hits = 2 * math.log(n)
    if max_size is None:
        max_size = 10 / 9 * p * n
    rng = random.Random(seed)
    for _ in range(budget):
        A = frozenset(v for v in range(n) if rng.random() < p)
        if len(A) > max_size:
            continue
        if all(len(g.neighbors(v) & A) > min_hits for v in range(n)):
            return A
    raise SamplingError(f"no admissible subset found in {budget} attempts (p={p:.3f})")


class AryStackStaller(Strategy):
    """Staller on AryStack(b,k), Dominator first: pick a copy Dominator left
    untouched and play Maker's path strategy there; the closed neighbourhood
    of a leaf is exactly its root-to-leaf path."""

    side = Player.STALLER
    name = "ary-stack"

    def __init__(self, b: int, k: int):
        self.b, self.k = b, k
        self.board = ary_stack(b, k)
        self.size = sum((b + 1) ** i for i in range(k + 1))

    def applies(self, cfg):
        return (cfg.board.adj == self.board.adj and cfg.bias == self.b and cfg.first is Player.DOMINATOR
                and not cfg.preclaimed and not cfg.forbidden and cfg.target is None)

    def guarantee(self, cfg):
        return StallerWins() if self.applies(cfg) else None

    def choose(self, cfg, st, history):
        first = set(history[0].vertices) if history else set()
        copy = next((c for c in range(self.b + 1)
                     if not any(c * self.size <= v < (c + 1) * self.size for v in first)), 0)
        maker = AryTreeMaker(self.b + 1, self.k + 1, offset=copy * self.size)
        v = maker.choose(mask_of(st.staller), mask_of(st.dominator))
        free = st.free(cfg.n)
        return Move.staller(v if v in free else free[0])
