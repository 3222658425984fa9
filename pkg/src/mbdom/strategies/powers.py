"""Strategies on powers of paths and cycles.

Vertices are labelled 0..n-1 in path order, which is also a Hamiltonian path
of the cycle power, so the path strategy dominates C_n^k as well.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..families import path_power
from ..game import GameConfig, GameState, Move, Player
from ..graph import Graph, mask_of
from ..guarantees import LastsAtLeast, WinWithin
from .base import Strategy, pad_claim, winning_block


def _interval_plan(n: int, k: int, b: int) -> tuple[int, list[int], list[range]]:
    """(s, first-round claims, intervals) for the interval strategy."""
    N = b * (2 * k + 1) - 1
    s = n % N
    while s < 2:
        s += N
    if s > n:
        s = n
    first = []
    for i in range(b):
        p = min(k + (2 * k + 1) * i, s - 1)
        if p not in first:
            first.append(p)
        if p + k >= s - 1:
            break
    intervals = [range(a, a + N) for a in range(s, n, N)]
    return s, first, intervals


def _cover_interval(iv: range, k: int, b: int, staller: set[int]) -> list[int]:
    """b claims dominating the interval (length b(2k+1)-1) despite at most
    one Staller vertex, via b-1 blocks of length 2k+1 and one of length 2k."""
    hit = [v for v in iv if v in staller]
    for short in range(b - 1, -1, -1):
        picks = []
        start = iv.start
        ok = True
        for j in range(b):
            length = 2 * k if j == short else 2 * k + 1
            if j == short:
                cand = [start + k - 1, start + k]
            else:
                cand = [start + k]
            free = [c for c in cand if c not in staller]
            if not free:
                ok = False
                break
            picks.append(free[0])
            start += length
        if ok:
            return picks
    # more than one Staller vertex: best effort
    return [v for v in iv if v not in staller][:b] if hit else [iv.start + k]


class IntervalDominator(Strategy):
    """Dominator on P_n^k / C_n^k, Dominator first.

    Round one dominates the first s vertices (s ≡ n mod N, 2 <= s <= N+1,
    N = b(2k+1)-1); afterwards each round dominates one untouched interval
    of length N, taking the interval Staller just entered when there is one.
    """

    side = Player.DOMINATOR

    def __init__(self, n: int, k: int, b: int, kind: str = "path"):
        self.n, self.k, self.b, self.kind = n, k, b, kind
        self.name = "interval"
        self.s, self.first, self.intervals = _interval_plan(n, k, b)

    def applies(self, cfg: GameConfig) -> bool:
        if cfg.n != self.n or cfg.bias != self.b or cfg.first is not Player.DOMINATOR:
            return False
        if cfg.preclaimed or cfg.forbidden or cfg.target is not None or self.n < 2:
            return False
        from ..families import cycle_power

        expect = path_power(self.n, self.k) if self.kind == "path" else cycle_power(self.n, self.k)
        return cfg.board.adj == expect.adj

    def guarantee(self, cfg: GameConfig):
        N = self.b * (2 * self.k + 1) - 1
        return WinWithin(-(-(self.n - 1) // N))

    def choose(self, cfg, st, history):
        if not st.dominator and st.dominator_moves == 0:
            return pad_claim(cfg, st, self.first)
        staller = set(st.staller)
        dom = st.dominator
        untouched = [iv for iv in self.intervals if not any(v in dom for v in iv)]
        target = None
        if history and history[-1].player is Player.STALLER:
            w = history[-1].vertices[0]
            for iv in untouched:
                if w in iv:
                    target = iv
                    break
        if target is None and untouched:
            target = untouched[0]
        if target is None:
            return pad_claim(cfg, st, [])
        return pad_claim(cfg, st, _cover_interval(target, self.k, self.b, staller))


# -- lower-bound adversary on families of paths --------------------------------

@dataclass(frozen=True)
class PathFamily:
    """Vertex-disjoint paths R_i (vertex lists in order) with Q_i ⊆ R_i given
    as index ranges [lo, hi) into R_i."""

    paths: tuple[tuple[int, ...], ...]
    q: tuple[tuple[int, int], ...]

    @classmethod
    def single(cls, n: int) -> PathFamily:
        return cls((tuple(range(n)),), ((0, n),))

    @classmethod
    def from_lengths(cls, lengths: Sequence[int], q: Sequence[tuple[int, int]] | None = None) -> PathFamily:
        paths, nxt = [], 0
        for ln in lengths:
            paths.append(tuple(range(nxt, nxt + ln)))
            nxt += ln
        if q is None:
            q = [(0, ln) for ln in lengths]
        return cls(tuple(paths), tuple(tuple(x) for x in q))

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.paths)

    @property
    def targets(self) -> frozenset[int]:
        return frozenset(v for p, (lo, hi) in zip(self.paths, self.q) for v in p[lo:hi])

    def board(self, k: int) -> Graph:
        edges = []
        for p in self.paths:
            for i in range(len(p)):
                for j in range(i + 1, min(len(p), i + k + 1)):
                    edges.append((min(p[i], p[j]), max(p[i], p[j])))
        return Graph.from_edges(self.n, edges)

    def config(self, k: int, b: int, first: Player) -> GameConfig:
        return GameConfig(self.board(k), b, first, target=self.targets)


def _segments(fam: PathFamily, k: int, red: set[int]) -> list[tuple[list[int], list[int]]]:
    """Current (Q', R') pairs: maximal runs of uncoloured target vertices and
    the red-free run of R containing each."""
    out = []
    for p, (lo, hi) in zip(fam.paths, fam.q):
        reds = [i for i, v in enumerate(p) if v in red]
        coloured = set()
        for i in reds:
            coloured.update(range(max(0, i - k), min(len(p), i + k + 1)))
        i = lo
        while i < hi:
            if i in coloured:
                i += 1
                continue
            j = i
            while j < hi and j not in coloured:
                j += 1
            a = i
            while a > 0 and p[a - 1] not in red:
                a -= 1
            z = j
            while z < len(p) and p[z] not in red:
                z += 1
            out.append((list(p[i:j]), list(p[a:z])))
            i = j
    return out


class PathAdversaryStaller(Strategy):
    """Staller (Breaker) in the path-family game.

    Attacks the first uncoloured target run with at least 2k+1 vertices:
    with v_1 its lower end he claims v_{k+1}, v_k, v_{k-1}, ... down to
    v_{-k+1}, skipping vertices he already owns, until Dominator claims a
    vertex among v_{-k+1}..v_k; then the families are recoloured and a new
    attack starts.  Without a long run he plays inside the runs.
    """

    side = Player.STALLER

    def __init__(self, family: PathFamily, k: int, b: int):
        self.family, self.k, self.b = family, k, b
        self.name = "path-adversary"

    def applies(self, cfg: GameConfig) -> bool:
        return (cfg.bias == self.b and cfg.n == self.family.n
                and cfg.board.adj == self.family.board(self.k).adj
                and cfg.target_mask == mask_of(self.family.targets))

    def guarantee(self, cfg: GameConfig):
        N = self.b * (2 * self.k + 1) - 1
        q = len(self.family.targets)
        if cfg.first is Player.STALLER:
            return LastsAtLeast(-(-q // N))
        return LastsAtLeast(-(-(q - 1) // N))

    def _new_attack(self, red: set[int]) -> tuple[list[int], list[int]] | None:
        """(walk order, guarded zone) for a fresh attack, or None."""
        k = self.k
        for qrun, rrun in _segments(self.family, k, red):
            if len(qrun) >= 2 * k + 1:
                base = rrun.index(qrun[0])
                walk = [rrun[base + d] for d in range(k, -k - 1, -1) if 0 <= base + d < len(rrun)]
                zone = [rrun[base + d] for d in range(-k, k) if 0 <= base + d < len(rrun)]
                return walk, zone
        return None

    def choose(self, cfg, st, history):
        win = winning_block(cfg, st)
        if win is not None:
            return Move.staller(win)
        # replay to recover the current attack
        attack = None
        dom: set[int] = set(cfg.preclaimed)
        for mv in history:
            if mv.player is Player.DOMINATOR:
                dom.update(mv.vertices)
                if attack is not None and any(v in attack[1] for v in mv.vertices):
                    attack = None
            elif attack is None:
                attack = self._new_attack(dom)
        if attack is None:
            attack = self._new_attack(set(st.dominator))
        free = set(st.free(cfg.n))
        if attack is not None:
            for v in attack[0]:
                if v in free:
                    return Move.staller(v)
        for qrun, rrun in _segments(self.family, self.k, set(st.dominator)):
            for v in rrun:
                if v in free:
                    return Move.staller(v)
        return Move.staller(min(free))
