"""Closed-form game values, bounds and threshold predicates.

All ceilings and floors use integer arithmetic; logarithmic thresholds also
come with an exact integer predicate.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .game import Player
from .graph import Graph, residual, tree_has_perfect_matching
from .guarantees import INFINITY


class FormulaError(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def gamma_power(n: int, k: int, b: int, kind: str = "path") -> int:
    """⌈(n-1)/(b(2k+1)-1)⌉ for P_n^k and C_n^k."""
    if kind not in ("path", "cycle"):
        raise FormulaError(f"unknown kind {kind!r}")
    if n < 1 or k < 1 or b < 1:
        raise FormulaError("n, k, b must be positive")
    if b > n or k > n:
        raise FormulaError("requires b, k <= n")
    if kind == "cycle" and n < 3:
        raise FormulaError("cycles need n >= 3")
    return _ceil_div(n - 1, b * (2 * k + 1) - 1)


def gamma_cycle_b1(n: int) -> int:
    if n < 3:
        raise FormulaError("cycles need n >= 3")
    return n // 2


def _star_edges(g: Graph) -> int | None:
    """Number of edges if ``g`` is a star K_{1,k} with k >= 1, else None."""
    if g.n < 2 or g.m != g.n - 1:
        return None
    if max(g.degree(v) for v in range(g.n)) == g.n - 1:
        return g.n - 1
    return None


def tree_b1_case(t: Graph, first: Player = Player.DOMINATOR) -> str:
    """Which case of the b=1 tree formula applies."""
    if tree_has_perfect_matching(t):
        return "perfect-matching"
    if first is Player.STALLER:
        return "infinite"
    r = residual(t)
    if r.n == 1:
        return "single-vertex"
    k = _star_edges(r)
    if k is not None and k >= 3:
        return "star"
    return "infinite"


def gamma_tree_b1(t: Graph, first: Player = Player.DOMINATOR) -> float:
    if not t.is_tree():
        raise FormulaError("input must be a tree")
    case = tree_b1_case(t, first)
    n = t.n
    if case == "perfect-matching":
        return n // 2
    if case == "single-vertex":
        return (n - 1) // 2
    if case == "star":
        k = residual(t).n - 1
        return (n - k + 1) // 2
    return INFINITY


def f_of_b(b: int) -> int:
    if b < 1:
        raise FormulaError("b must be positive")
    return (b // 2 + 1) * (_ceil_div(b, 2) + 1)


def gamma_tkb(k: int, b: int) -> int:
    if k < 1 or b < 2:
        raise FormulaError("requires k >= 1 and b >= 2")
    return _ceil_div(k, f_of_b(b))


def gamma_ts(n: int, b: int, s: int) -> int:
    """F(s) = s + ⌈(n - s(b+1)) / f(b)⌉."""
    if b < 2:
        raise FormulaError("requires b >= 2")
    if not 0 <= s <= n // (b + 1):
        raise FormulaError("requires 0 <= s <= floor(n/(b+1))")
    return s + _ceil_div(n - s * (b + 1), f_of_b(b))


@dataclass(frozen=True)
class BoundReport:
    lower: float
    upper: float
    source: str

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def tree_gamma_bounds(n: int, b: int) -> BoundReport:
    """⌈n/(b(b+3))⌉ <= γ'(T,b) <= ⌈n/(b+1)⌉ for trees that Dominator wins."""
    if b < 2:
        raise FormulaError("requires b >= 2")
    return BoundReport(_ceil_div(n, b * (b + 3)), _ceil_div(n, b + 1), "tree bounds")


def fraction_bound(n: int, b: int) -> int:
    """⌈(1 - 1/(b+1)^2) n⌉."""
    sq = (b + 1) ** 2
    return _ceil_div(n * (sq - 1), sq)


def mindeg_win_threshold(n: int, b: int) -> float:
    """log_{b+1}(n) - 1; Dominator wins when the minimum degree exceeds it."""
    if n < 2:
        raise FormulaError("requires n >= 2")
    return math.log(n, b + 1) - 1


def mindeg_condition(n: int, delta: int, b: int) -> bool:
    """Exact form of δ > log_{b+1}(n) - 1, namely (b+1)^(δ+1) > n."""
    return (b + 1) ** (delta + 1) > n


def dense_round_bound(n: int, delta: int, b: int) -> int:
    """⌈10 n ln(n) / (b δ)⌉, valid when δ >= 10 ln n."""
    if n < 2 or delta < 1:
        raise FormulaError("requires n >= 2 and delta >= 1")
    return math.ceil(10 * n * math.log(n) / (b * delta))


def dense_condition(n: int, delta: int) -> bool:
    return delta >= 10 * math.log(n)


def gamma_clique_union(n: int, delta: int, b: int) -> int:
    """Value on a disjoint union of copies of K_{δ+1}."""
    if n % (delta + 1):
        raise FormulaError("n must be a multiple of delta + 1")
    return _ceil_div(n, b * (delta + 1))


def beck_sum(sizes: Iterable[int], q: int) -> Fraction:
    """Σ_F (1+q)^(-|F|) as an exact fraction."""
    return sum((Fraction(1, (1 + q) ** s) for s in sizes), Fraction(0))


def beck_bound(sizes: Iterable[int], q: int) -> int:
    return math.floor(beck_sum(sizes, q))
