import itertools
import math
from functools import lru_cache

import pytest

from mbdom.graph import Graph


def naive_value(g: Graph, b: int, dominator_first: bool) -> float:
    """Plain minimax over all claims of 1..b vertices; tiny boards only."""
    n = g.n
    closed = [frozenset(g.closed_neighborhood(v)) for v in range(n)]

    def covered(d):
        return frozenset().union(*(closed[v] for v in d)) if d else frozenset()

    @lru_cache(maxsize=None)
    def value(d, s, dom_turn):
        cov = covered(d)
        if len(cov) == n:
            return 0
        if any(closed[v] <= s for v in range(n) if v not in cov):
            return math.inf
        free = [v for v in range(n) if v not in d and v not in s]
        if not free:
            return math.inf
        if dom_turn:
            best = math.inf
            for size in range(1, min(b, len(free)) + 1):
                for claim in itertools.combinations(free, size):
                    best = min(best, 1 + value(d | frozenset(claim), s, False))
            return best
        return max(value(d, s | {v}, True) for v in free)

    return value(frozenset(), frozenset(), dominator_first)


def naive_max_dominated(g: Graph, b: int, dominator_first: bool) -> int:
    n = g.n
    closed = [frozenset(g.closed_neighborhood(v)) for v in range(n)]

    @lru_cache(maxsize=None)
    def value(d, s, dom_turn):
        free = [v for v in range(n) if v not in d and v not in s]
        if not free:
            return len(frozenset().union(*(closed[v] for v in d))) if d else 0
        if dom_turn:
            return max(value(d | frozenset(c), s, False)
                       for c in itertools.combinations(free, min(b, len(free))))
        return min(value(d, s | {v}, True) for v in free)

    return value(frozenset(), frozenset(), dominator_first)


@pytest.fixture
def oracle():
    return naive_value
