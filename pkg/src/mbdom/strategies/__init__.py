"""Strategies from the proofs, behind a common interface."""

from __future__ import annotations

from ..game import GameConfig, Player
from ..graph import Graph
from ..hypergraph import AryTreeMaker, BeckBreaker, Hypergraph
from .base import (
    FirstFree,
    GreedyDominator,
    GreedyStaller,
    NotApplicable,
    Optimal,
    Strategy,
)
from .beck import AryStackStaller, NeighborhoodBreakerDominator, SamplingError, build_dominating_subset
from .powers import IntervalDominator, PathAdversaryStaller, PathFamily
from .trees import (
    DStarStaller,
    ProblematicStaller,
    RecursiveGoodDominator,
    StarPairingDominator,
    TkbDominator,
    TkbStaller,
)


def interval_dominator(n: int, k: int, b: int, kind: str = "path") -> IntervalDominator:
    return IntervalDominator(n, k, b, kind)


def path_adversary_staller(family: PathFamily, k: int, b: int) -> PathAdversaryStaller:
    return PathAdversaryStaller(family, k, b)


def star_pairing_dominator(t: Graph, seq, b: int, inner: Strategy | None = None) -> StarPairingDominator:
    return StarPairingDominator(t, seq, b, inner)


def problematic_staller(t: Graph, b: int, witness=None) -> ProblematicStaller:
    return ProblematicStaller(t, b, witness)


def recursive_good_dominator(t: Graph, b: int) -> RecursiveGoodDominator:
    return RecursiveGoodDominator(t, b)


def tkb_dominator(k: int, b: int) -> TkbDominator:
    return TkbDominator(k, b)


def tkb_staller(k: int, b: int) -> TkbStaller:
    return TkbStaller(k, b)


def beck_breaker(h: Hypergraph, q: int) -> BeckBreaker:
    return BeckBreaker(h, q)


def neighborhood_breaker_dominator(g: Graph, b: int, mode: str = "full", subset=None):
    return NeighborhoodBreakerDominator(g, b, mode, subset)


def ary_tree_maker(branching: int, levels: int) -> AryTreeMaker:
    return AryTreeMaker(branching, levels)


def dstar_staller(t: Graph, b: int) -> DStarStaller:
    return DStarStaller(t, b)


DOMINATOR_NAMES = ("optimal", "first-free", "greedy", "interval", "recursive-good", "tkb",
                   "neighborhood-breaker")
STALLER_NAMES = ("optimal", "first-free", "greedy", "problematic", "tkb", "dstar", "ary-stack",
                 "path-adversary")


def by_name(name: str, side: Player, cfg: GameConfig, params: dict | None = None) -> Strategy:
    """Build a named strategy for ``cfg``; ``params`` carries family
    parameters (n, k, b, kind, ...) where a strategy needs them."""
    p = dict(params or {})
    g, b = cfg.board, cfg.bias
    if name == "optimal":
        return Optimal(side)
    if name == "first-free":
        return FirstFree(side)
    if name == "greedy":
        return GreedyDominator() if side is Player.DOMINATOR else GreedyStaller()
    if side is Player.DOMINATOR:
        if name == "interval":
            return IntervalDominator(g.n, p.get("k", 1), b, p.get("kind", "path"))
        if name == "recursive-good":
            return RecursiveGoodDominator(g, b)
        if name == "tkb":
            return TkbDominator(p["k"], b)
        if name == "neighborhood-breaker":
            return NeighborhoodBreakerDominator(g, b, p.get("mode", "full"))
    else:
        if name == "problematic":
            return ProblematicStaller(g, b)
        if name == "tkb":
            return TkbStaller(p["k"], b)
        if name == "dstar":
            return DStarStaller(g, b)
        if name == "ary-stack":
            return AryStackStaller(b, p["k"])
        if name == "path-adversary":
            return PathAdversaryStaller(PathFamily.single(g.n), p.get("k", 1), b)
    raise NotApplicable(f"unknown {side.value} strategy {name!r}")


__all__ = [
    "AryStackStaller", "AryTreeMaker", "BeckBreaker", "DStarStaller", "FirstFree",
    "GreedyDominator", "GreedyStaller", "IntervalDominator", "NeighborhoodBreakerDominator",
    "NotApplicable", "Optimal", "PathAdversaryStaller", "PathFamily", "ProblematicStaller",
    "RecursiveGoodDominator", "SamplingError", "StarPairingDominator", "Strategy",
    "TkbDominator", "TkbStaller", "ary_tree_maker", "beck_breaker", "build_dominating_subset",
    "by_name", "dstar_staller", "interval_dominator",
    "neighborhood_breaker_dominator", "path_adversary_staller", "problematic_staller",
    "recursive_good_dominator", "star_pairing_dominator", "tkb_dominator", "tkb_staller",
]
