"""Maker-Breaker games on hypergraphs with a (1:q) bias.

Maker claims one element per round, Breaker up to q.  Used for the potential
criterion and for the root-to-leaf path game on perfect trees.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .families import ary_parent
from .graph import Graph, bits, mask_of


class HypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))
        for s in self.sets:
            if not s:
                raise HypergraphError("winning sets must be nonempty")
            if not all(0 <= x < self.n for x in s):
                raise HypergraphError(f"winning set {sorted(s)} leaves the ground set")

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(s) for s in self.sets)

    def potential(self, q: int) -> Fraction:
        return sum((Fraction(1, (1 + q) ** len(s)) for s in self.sets), Fraction(0))

    def occupied(self, maker: Iterable[int]) -> int:
        m = mask_of(maker)
        return sum(1 for s in self.masks if s & ~m == 0)


def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    return Hypergraph(g.n, tuple(g.closed_neighborhood(v) for v in range(g.n)))


def root_leaf_paths(branching: int, levels: int) -> Hypergraph:
    """Root-to-leaf paths of the perfect tree in BFS labelling."""
    n = sum(branching ** i for i in range(levels))
    first_leaf = n - branching ** (levels - 1)
    paths = []
    for leaf in range(first_leaf, n):
        p, v = [], leaf
        while v is not None:
            p.append(v)
            v = ary_parent(v, branching)
        paths.append(frozenset(p))
    return Hypergraph(n, tuple(paths))


def random_hypergraph(rng: random.Random, max_vertices: int = 12, max_sets: int = 20,
                      max_size: int = 5) -> Hypergraph:
    n = rng.randint(1, max_vertices)
    count = rng.randint(1, max_sets)
    sets = []
    for _ in range(count):
        size = rng.randint(1, min(max_size, n))
        sets.append(frozenset(rng.sample(range(n), size)))
    return Hypergraph(n, tuple(sets))


# -- Beck potential breaker ----------------------------------------------------

def beck_choice(sets: Iterable[int], q: int, maker: int, breaker: int, free: int,
                count: int) -> list[int]:
    """Greedy potential moves for Breaker, one element at a time.

    A set is live while Breaker has no element in it; its weight is
    (1+q)^-(number of its elements not yet claimed by Maker).  Each pick
    kills the largest total live weight, ties going to the lowest element.
    """
    live = [s for s in sets if s & breaker == 0]
    picks: list[int] = []
    for _ in range(count):
        if not free:
            break
        best, best_w = None, Fraction(-1)
        for x in bits(free):
            bit = 1 << x
            w = Fraction(0)
            for s in live:
                if s & bit:
                    w += Fraction(1, (1 + q) ** (s & ~maker).bit_count())
            if w > best_w:
                best, best_w = x, w
        picks.append(best)
        bit = 1 << best
        free &= ~bit
        live = [s for s in live if not s & bit]
    return picks


class BeckBreaker:
    """Breaker for the (1:q) game on a hypergraph, playing first."""

    def __init__(self, h: Hypergraph, q: int):
        if q < 1:
            raise HypergraphError("q must be positive")
        self.h = h
        self.q = q
        self.masks = h.masks

    @property
    def bound(self) -> int:
        return int(self.h.potential(self.q))

    def choose(self, maker: int, breaker: int) -> list[int]:
        free = ((1 << self.h.n) - 1) & ~(maker | breaker)
        return beck_choice(self.masks, self.q, maker, breaker, free, self.q)


def max_maker_sets(h: Hypergraph, q: int, breaker: Callable[[int, int], list[int]],
                   breaker_first: bool = True) -> tuple[int, list[tuple[str, tuple[int, ...]]]]:
    """Most winning sets any Maker can fully occupy against a fixed Breaker.

    Returns the count and one Maker line achieving it.
    """
    full = (1 << h.n) - 1
    masks = h.masks

    @lru_cache(maxsize=None)
    def value(maker: int, brk: int, maker_turn: bool) -> tuple[int, tuple]:
        free = full & ~(maker | brk)
        if not free:
            return sum(1 for s in masks if s & ~maker == 0), ()
        if not maker_turn:
            picks = breaker(maker, brk)
            nb = brk | mask_of(picks)
            v, line = value(maker, nb, True)
            return v, (("B", tuple(picks)),) + line
        best, best_line = -1, ()
        for x in bits(free):
            v, line = value(maker | (1 << x), brk, False)
            if v > best:
                best, best_line = v, (("M", (x,)),) + line
        return best, best_line

    v, line = value(0, 0, not breaker_first)
    value.cache_clear()
    return v, list(line)


def maker_wins_against_all(h: Hypergraph, q: int, maker: Callable[[int, int], int],
                           maker_first: bool = True) -> tuple[bool, list]:
    """Does a fixed Maker occupy some winning set against every Breaker?

    Breaker may claim any 1..q free elements per round.  Returns
    (ok, counterexample line).
    """
    full = (1 << h.n) - 1
    masks = h.masks
    memo: dict[tuple[int, int, bool], bool] = {}
    line: list = []

    def won(m: int) -> bool:
        return any(s & ~m == 0 for s in masks)

    def ok(m: int, brk: int, maker_turn: bool) -> bool:
        if won(m):
            return True
        free = full & ~(m | brk)
        if not free or all(s & brk for s in masks):
            return False
        key = (m, brk, maker_turn)
        if key in memo:
            return memo[key]
        if maker_turn:
            x = maker(m, brk)
            if not (free >> x) & 1:
                res = False
            else:
                line.append(("M", (x,)))
                res = ok(m | (1 << x), brk, False)
                if res:
                    line.pop()
        else:
            res = True
            fl = bits(free)
            for size in range(1, min(q, len(fl)) + 1):
                for combo in itertools.combinations(fl, size):
                    line.append(("B", combo))
                    if not ok(m, brk | mask_of(combo), True):
                        res = False
                        break
                    line.pop()
                if not res:
                    break
        memo[key] = res
        return res

    res = ok(0, 0, maker_first)
    return res, ([] if res else list(line))


class AryTreeMaker:
    """Maker on the perfect tree: take the root, then keep stepping to a
    child whose whole subtree Breaker has not touched."""

    def __init__(self, branching: int, levels: int, offset: int = 0):
        self.br = branching
        self.levels = levels
        self.offset = offset
        self.size = sum(branching ** i for i in range(levels))

    def subtree_mask(self, v: int) -> int:
        m, layer = 0, [v]
        while layer:
            nxt = []
            for u in layer:
                m |= 1 << (u + self.offset)
                for j in range(1, self.br + 1):
                    c = self.br * u + j
                    if c < self.size:
                        nxt.append(c)
            layer = nxt
        return m

    def choose(self, maker: int, breaker: int) -> int:
        off = self.offset
        if not (maker >> off) & 1:
            if not (breaker >> off) & 1:
                return off
        else:
            cur = 0
            while True:
                kids = [self.br * cur + j for j in range(1, self.br + 1) if self.br * cur + j < self.size]
                nxt = [c for c in kids if (maker >> (c + off)) & 1]
                if not nxt:
                    break
                cur = nxt[0]
            kids = [self.br * cur + j for j in range(1, self.br + 1) if self.br * cur + j < self.size]
            for c in kids:
                if self.subtree_mask(c) & breaker == 0:
                    return c + off
        taken = maker | breaker
        for v in range(self.size):
            if not (taken >> (v + off)) & 1:
                return v + off
        return off
