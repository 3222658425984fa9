"""Undirected simple graphs on vertices ``0..n-1`` and the structural helpers
the games need: powers, closed neighbourhoods, domination, and tree
reductions."""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field


class GraphError(ValueError):
    pass


class InstanceTooLarge(GraphError):
    """Raised when an exhaustive routine is asked to exceed its size cap."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    _nbmask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise GraphError(f"asymmetric or out-of-range edge {v}-{u}")
        masks = []
        for v, nbrs in enumerate(self.adj):
            m = 1 << v
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "_nbmask", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def closed_mask(self, v: int) -> int:
        """Bitmask of N[v]."""
        return self._nbmask[v]

    @property
    def closed_masks(self) -> tuple[int, ...]:
        return self._nbmask

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def min_degree(self) -> int:
        return min(len(a) for a in self.adj)

    def distances_from(self, s: int) -> list[int | None]:
        dist: list[int | None] = [None] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if dist[u] is None:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and len(self.components()) == 1

    def leaves(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if len(self.adj[v]) == 1)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled to ``0..k-1`` (ascending order).

        Returns the subgraph and the list mapping new labels to old ones.
        """
        old = sorted(set(vertices))
        if not old:
            raise GraphError("induced subgraph on empty vertex set")
        index = {v: i for i, v in enumerate(old)}
        adj = tuple(frozenset(index[u] for u in self.adj[v] if u in index) for v in old)
        return Graph(len(old), adj), old

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- graph operations --------------------------------------------------------

def power(g: Graph, k: int) -> Graph:
    """k-th power: join every pair at distance 1..k."""
    if k < 1:
        raise GraphError("power needs k >= 1")
    edges = []
    for s in range(g.n):
        dist = g.distances_from(s)
        for t in range(s + 1, g.n):
            d = dist[t]
            if d is not None and 1 <= d <= k:
                edges.append((s, t))
    return Graph.from_edges(g.n, edges)


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    covered = 0
    for v in s:
        covered |= g.closed_mask(v)
    return covered == (1 << g.n) - 1


def dominated_mask(g: Graph, s: Iterable[int]) -> int:
    covered = 0
    for v in s:
        covered |= g.closed_mask(v)
    return covered


DOMINATION_CAP = 20


def minimum_dominating_set(g: Graph, cap: int = DOMINATION_CAP) -> tuple[int, ...]:
    """Lexicographically first dominating set of minimum size (brute force)."""
    if g.n > cap:
        raise InstanceTooLarge(f"instance too large: n={g.n} exceeds domination cap {cap}")
    full = (1 << g.n) - 1
    masks = g.closed_masks
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = 0
            for v in combo:
                covered |= masks[v]
            if covered == full:
                return combo
    raise AssertionError("unreachable: V(G) dominates itself")


def domination_number(g: Graph, cap: int = DOMINATION_CAP) -> int:
    return len(minimum_dominating_set(g, cap))


# -- tree reductions ---------------------------------------------------------

def _require_tree(t: Graph) -> None:
    if not t.is_tree():
        raise GraphError("input is not a tree")


def residual_vertices(t: Graph, order: Iterable[int] | None = None) -> list[int]:
    """Vertices surviving repeated removal of pendant paths of length 2.

    A pendant path is a leaf ``u`` whose unique neighbour ``v`` has degree 2;
    both are deleted.  Candidate leaves are scanned in ``order`` (ascending
    identifiers by default) and the scan restarts after every removal.
    """
    _require_tree(t)
    alive = set(range(t.n))
    deg = [t.degree(v) for v in range(t.n)]
    scan = list(range(t.n)) if order is None else list(order)
    removed = True
    while removed:
        removed = False
        for u in scan:
            if u not in alive or deg[u] != 1:
                continue
            (v,) = [w for w in t.adj[u] if w in alive]
            if deg[v] != 2:
                continue
            for x in (u, v):
                alive.discard(x)
                for w in t.adj[x]:
                    if w in alive:
                        deg[w] -= 1
            removed = True
            break
    return sorted(alive)


def residual(t: Graph, order: Iterable[int] | None = None) -> Graph:
    keep = residual_vertices(t, order)
    if not keep:
        raise GraphError("residual is empty")
    return t.induced(keep)[0]


def tree_perfect_matching(t: Graph) -> list[tuple[int, int]] | None:
    """The (unique) perfect matching of a forest, or None.

    Greedy: match a leaf with its neighbour and delete both.
    """
    alive = set(range(t.n))
    deg = [t.degree(v) for v in range(t.n)]
    matching = []
    stack = [v for v in range(t.n) if deg[v] <= 1]
    while alive:
        while stack and (stack[-1] not in alive or deg[stack[-1]] > 1):
            stack.pop()
        if not stack:
            return None
        u = stack.pop()
        if deg[u] == 0:
            return None
        (v,) = [w for w in t.adj[u] if w in alive]
        matching.append((min(u, v), max(u, v)))
        for x in (u, v):
            alive.discard(x)
            for w in t.adj[x]:
                if w in alive:
                    deg[w] -= 1
                    if deg[w] <= 1:
                        stack.append(w)
    return matching


def tree_has_perfect_matching(t: Graph) -> bool:
    return tree_perfect_matching(t) is not None


# -- canonical forms and tree enumeration ------------------------------------

def tree_centers(t: Graph, vertices: Iterable[int] | None = None) -> list[int]:
    """Center(s) of the tree induced on ``vertices`` (default: all)."""
    alive = set(range(t.n)) if vertices is None else set(vertices)
    deg = {v: sum(1 for u in t.adj[v] if u in alive) for v in alive}
    layer = [v for v in alive if deg[v] <= 1]
    remaining = len(alive)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in t.adj[v]:
                if u in alive and deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
            deg[v] = 0
        layer = nxt
    return sorted(layer)


def _rooted_code(t: Graph, root: int, alive: set[int], labels) -> str:
    # iterative post-order so deep paths do not hit the recursion limit
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in t.adj[v]:
            if u in alive and u not in parent:
                parent[u] = v
                order.append(u)
    code: dict[int, str] = {}
    for v in reversed(order):
        kids = sorted(code[u] for u in t.adj[v] if u in alive and parent.get(u) == v)
        tag = labels(v) if labels else ""
        code[v] = "(" + tag + "".join(kids) + ")"
    return code[root]


def canonical_tree(t: Graph, vertices: Iterable[int] | None = None, labels=None) -> str:
    """AHU encoding of a (vertex-labelled) tree rooted at its center.

    ``labels`` optionally maps a vertex to a short string that becomes part of
    the code, so marked trees are only equal when the marks correspond.
    """
    alive = set(range(t.n)) if vertices is None else set(vertices)
    centers = tree_centers(t, alive)
    return min(_rooted_code(t, c, alive, labels) for c in centers)


def canonical_forest(t: Graph, vertices: Iterable[int] | None = None, labels=None) -> str:
    alive = set(range(t.n)) if vertices is None else set(vertices)
    codes = []
    seen: set[int] = set()
    for s in sorted(alive):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for u in t.adj[v]:
                if u in alive and u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        codes.append(canonical_tree(t, comp, labels))
    return "[" + "".join(sorted(codes)) + "]"


def _decode(code: str) -> Graph:
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            v = count
            count += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        elif ch == ")":
            stack.pop()
    return Graph.from_edges(count, edges)


TREE_ENUM_CAP = 12


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Grows every class on n-1 vertices by one leaf in every position and keeps
    the first tree seen for each canonical code.  Representatives are
    relabelled in BFS order from a center, so output is deterministic.
    """
    if n < 1:
        raise GraphError("n must be positive")
    if n > TREE_ENUM_CAP:
        raise InstanceTooLarge(f"instance too large: tree enumeration capped at n={TREE_ENUM_CAP}")
    for code in _tree_codes(n):
        yield _decode(code)


_CODE_CACHE: dict[int, list[str]] = {}


def _tree_codes(n: int) -> list[str]:
    if n in _CODE_CACHE:
        return _CODE_CACHE[n]
    if n == 1:
        codes = ["()"]
    else:
        found: dict[str, None] = {}
        for code in _tree_codes(n - 1):
            base = _decode(code)
            for v in range(base.n):
                grown = Graph.from_edges(n, base.edges() + [(v, n - 1)])
                found.setdefault(canonical_tree(grown), None)
        codes = sorted(found)
    _CODE_CACHE[n] = codes
    return codes


def trees_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_trees(n)
