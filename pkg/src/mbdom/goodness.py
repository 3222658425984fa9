"""Leaf-deletion forests, admissible and problematic sequences, b-goodness.

For a tree T, an exclusion set A and a sequence v_1..v_t, the forests are
F_0 = T and F_i = F_{i-1} - ({v_i} ∪ (N(v_i) ∩ L(F_{i-1}) ∖ A)), where L(F)
is the set of degree-1 vertices of F.  A sequence is admissible when each
v_i removes exactly b leaves, and (v|u) is problematic when u then sees at
least b+1 removable leaves.  T is (A,b)-good when no problematic sequence
exists.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .graph import Graph, GraphError, InstanceTooLarge, canonical_forest

GOODNESS_CAP = 16


class SequenceError(GraphError):
    pass


def _leaves(t: Graph, alive: frozenset[int] | set[int]) -> set[int]:
    return {v for v in alive if sum(1 for u in t.adj[v] if u in alive) == 1}


def _leaf_neighbors(t: Graph, v: int, leaves: set[int], excl: frozenset[int]) -> list[int]:
    return sorted(u for u in t.adj[v] if u in leaves and u not in excl)


@dataclass(frozen=True)
class ReductionStep:
    vertex: int
    removed_leaves: tuple[int, ...]


@dataclass
class ReductionTrace:
    """Forests F_0..F_t as vertex sets of the original tree."""

    tree: Graph
    exclusion: frozenset[int]
    forests: list[frozenset[int]] = field(default_factory=list)
    steps: list[ReductionStep] = field(default_factory=list)

    @property
    def final(self) -> frozenset[int]:
        return self.forests[-1]

    def final_forest(self) -> tuple[Graph, list[int]]:
        return self.tree.induced(sorted(self.final))


def forest_after(t: Graph, seq: Sequence[int], A: Iterable[int] = ()) -> ReductionTrace:
    excl = frozenset(A)
    alive = frozenset(range(t.n))
    trace = ReductionTrace(t, excl, [alive])
    seen = set()
    for i, v in enumerate(seq, start=1):
        if v in seen:
            raise SequenceError(f"step {i}: vertex {v} repeats in the sequence")
        if v in excl:
            raise SequenceError(f"step {i}: vertex {v} belongs to the exclusion set")
        if v not in alive:
            raise SequenceError(f"step {i}: vertex {v} is not in the current forest")
        seen.add(v)
        gone = _leaf_neighbors(t, v, _leaves(t, alive), excl)
        alive = alive - {v} - set(gone)
        trace.steps.append(ReductionStep(v, tuple(gone)))
        trace.forests.append(alive)
    return trace


def leaf_count(t: Graph, alive: Iterable[int], v: int, A: Iterable[int] = ()) -> int:
    """|N(v) ∩ L(F) ∖ A| for the forest F induced on ``alive``."""
    alive = frozenset(alive)
    return len(_leaf_neighbors(t, v, _leaves(t, alive), frozenset(A)))


def is_admissible(t: Graph, seq: Sequence[int], b: int, A: Iterable[int] = ()) -> bool:
    excl = frozenset(A)
    try:
        trace = forest_after(t, seq, excl)
    except SequenceError:
        return False
    return all(len(step.removed_leaves) == b for step in trace.steps)


@dataclass(frozen=True)
class Witness:
    """A problematic sequence (v_1, ..., v_t | u)."""

    sequence: tuple[int, ...]
    u: int

    def __str__(self) -> str:
        head = " ".join(str(v) for v in self.sequence)
        return f"{head or '∅'} | {self.u}"

    @property
    def moves(self) -> tuple[int, ...]:
        return self.sequence + (self.u,)


def find_problematic(t: Graph, A: Iterable[int], b: int, cap: int = GOODNESS_CAP,
                     alive: Iterable[int] | None = None) -> Witness | None:
    """A witness that T is not (A,b)-good, or None when it is good.

    Depth-first search over admissible extensions.  Forests already explored
    are pruned by their canonical form with the A vertices marked, since the
    question is invariant under isomorphism.  ``alive`` restricts the search
    to a sub-forest (used for components during play).
    """
    if b < 1:
        raise ValueError("b must be at least 1")
    excl = frozenset(A)
    start = frozenset(range(t.n)) if alive is None else frozenset(alive)
    if len(start) > cap:
        raise InstanceTooLarge(f"instance too large: n={len(start)} exceeds goodness cap {cap}")
    mark = lambda v: "a" if v in excl else ""  # noqa: E731
    explored: set[str] = set()

    def search(cur: frozenset[int], seq: list[int]) -> Witness | None:
        leaves = _leaves(t, cur)
        counts = {}
        for v in sorted(cur - excl):
            c = _leaf_neighbors(t, v, leaves, excl)
            if len(c) >= b + 1:
                return Witness(tuple(seq), v)
            counts[v] = c
        key = canonical_forest(t, cur, mark) if cur else "[]"
        if key in explored:
            return None
        explored.add(key)
        for v, gone in counts.items():
            if len(gone) != b:
                continue
            seq.append(v)
            hit = search(cur - {v} - set(gone), seq)
            seq.pop()
            if hit is not None:
                return hit
        return None

    return search(start, [])


def is_good(t: Graph, A: Iterable[int], b: int, cap: int = GOODNESS_CAP) -> bool:
    return find_problematic(t, A, b, cap) is None


def is_b_good(t: Graph, b: int, cap: int = GOODNESS_CAP) -> bool:
    return find_problematic(t, (), b, cap) is None


def greedy_reduction(t: Graph, b: int, A: Iterable[int] = ()) -> frozenset[int]:
    """Delete, lowest identifier first, a vertex with exactly b leaf neighbours
    together with those leaves; stop when no such vertex is left.  Returns
    the surviving vertex set."""
    excl = frozenset(A)
    alive = frozenset(range(t.n))
    while True:
        leaves = _leaves(t, alive)
        for v in sorted(alive - excl):
            gone = _leaf_neighbors(t, v, leaves, excl)
            if len(gone) == b:
                alive = alive - {v} - set(gone)
                break
        else:
            return alive


def greedy_good(t: Graph, b: int, A: Iterable[int] = ()) -> bool:
    """True when the greedy reduction ends with every vertex having at most
    b-1 removable leaf neighbours."""
    excl = frozenset(A)
    alive = greedy_reduction(t, b, excl)
    leaves = _leaves(t, alive)
    return all(len(_leaf_neighbors(t, v, leaves, excl)) <= b - 1 for v in alive - excl)


def dominator_first_set(t: Graph, b: int, cap: int = GOODNESS_CAP) -> frozenset[int] | None:
    """Smallest (then lexicographically first) A with |A| <= b and T (A,b)-good."""
    if t.n > cap:
        raise InstanceTooLarge(f"instance too large: n={t.n} exceeds goodness cap {cap}")
    for size in range(0, min(b, t.n) + 1):
        for A in itertools.combinations(range(t.n), size):
            if find_problematic(t, A, b, cap) is None:
                return frozenset(A)
    return None
