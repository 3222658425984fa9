"""Graph families used as game boards.

Every constructor documents its vertex labelling because strategies address
vertices by position (path order, star centers, tree levels).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph import Graph, GraphError, power


class FamilyError(GraphError):
    pass


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def path(n: int) -> Graph:
    """P_n with vertices 0..n-1 in path order."""
    _need(n >= 1, "Path: n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "Cycle: n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k}: center 0, leaves 1..k."""
    _need(k >= 0, "Star: k >= 0")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def path_power(n: int, k: int) -> Graph:
    _need(k >= 1, "PathPower: k >= 1")
    return power(path(n), k)


def cycle_power(n: int, k: int) -> Graph:
    _need(k >= 1, "CyclePower: k >= 1")
    return power(cycle(n), k)


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


def star_chain(sizes: list[int]) -> tuple[Graph, list[int]]:
    """Stars with ``sizes[i]`` leaves, centers joined into a path.

    Star i occupies a contiguous block: its center first, then its leaves.
    Returns the graph and the list of centers.
    """
    edges = []
    centers = []
    nxt = 0
    for size in sizes:
        c = nxt
        centers.append(c)
        edges += [(c, c + j) for j in range(1, size + 1)]
        nxt = c + size + 1
    edges += [(centers[i], centers[i + 1]) for i in range(len(centers) - 1)]
    return Graph.from_edges(nxt, edges), centers


# -- the star-chain tree with value ceil(k / f(b)) ---------------------------

@dataclass(frozen=True)
class TkbLayout:
    """Parameters of the star-chain tree on k vertices for bias b."""

    k: int
    b: int
    x: int = field(init=False)
    q: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self):
        _need(self.k >= 1, "Tkb: k >= 1")
        _need(self.b >= 2, "Tkb: b >= 2")
        x = math.ceil(self.b / 2)
        q = -(-self.k // (x + 1))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", self.k - (q - 1) * (x + 1))

    @property
    def sizes(self) -> list[int]:
        """Leaf counts of S_1..S_q as built (last star has r-1 leaves)."""
        return [self.x] * (self.q - 1) + [self.r - 1]

    @property
    def centers(self) -> list[int]:
        out, c = [], 0
        for s in self.sizes:
            out.append(c)
            c += s + 1
        return out

    def stars(self) -> list[list[int]]:
        """Vertex blocks of the stars as the strategies see them.

        When r = 1 the last star is a lone vertex hanging off z_{q-1}; it is
        treated as an extra leaf of S_{q-1}.
        """
        blocks = []
        c = 0
        for s in self.sizes:
            blocks.append(list(range(c, c + s + 1)))
            c += s + 1
        if self.r == 1 and self.q >= 2:
            last = blocks.pop()
            blocks[-1] += last
        return blocks


def tkb(k: int, b: int) -> Graph:
    lay = TkbLayout(k, b)
    g, _ = star_chain(lay.sizes)
    return g


def ts(n: int, b: int, s: int) -> tuple[Graph, list[int]]:
    """Tree T(s): s pendant stars chained in front of T_{n-s(b+1), b}.

    Vertices 0..m-1 (m = n - s(b+1)) form T_{m,b} with its own labelling.
    Chain vertex c_i sits at m + (i-1)(b+1) followed by its b leaves; c_i is
    joined to c_{i+1} and c_s to the first center of T_{m,b}.  Returns the
    tree and the admissible sequence (c_1, ..., c_s).
    """
    _need(b >= 2, "Ts: b >= 2")
    _need(0 <= s <= n // (b + 1), "Ts: 0 <= s <= floor(n/(b+1))")
    m = n - s * (b + 1)
    _need(m >= 1, "Ts: n - s(b+1) >= 1")
    _need(m != 1, "Ts: n - s(b+1) != 1 (a single leftover vertex cannot be a residual)")
    edges = tkb(m, b).edges()
    chain = [m + i * (b + 1) for i in range(s)]
    for c in chain:
        edges += [(c, c + j) for j in range(1, b + 1)]
    edges += [(chain[i], chain[i + 1]) for i in range(s - 1)]
    if s:
        edges.append((chain[-1], 0))
    return Graph.from_edges(n, edges), chain


def star_path(n: int, b: int, t: int) -> Graph:
    """t stars, the first t-1 with b leaves, the last absorbing the rest."""
    _need(b >= 1, "StarPath: b >= 1")
    _need(1 <= t and t * (b + 1) <= n, "StarPath: 1 <= t <= n/(b+1)")
    sizes = [b] * (t - 1) + [n - (b + 1) * (t - 1) - 1]
    return star_chain(sizes)[0]


def fraction_sharp(n: int, b: int) -> Graph:
    """b+1 stars sharing n vertices as evenly as possible, centers pathed."""
    _need(b >= 1, "FractionSharp: b >= 1")
    _need(n >= 2 * (b + 1), "FractionSharp: n >= 2(b+1)")
    base, extra = divmod(n, b + 1)
    orders = [base + 1 if i < extra else base for i in range(b + 1)]
    return star_chain([o - 1 for o in orders])[0]


def perfect_ary_tree(branching: int, levels: int) -> Graph:
    """Perfect tree in BFS order: root 0, children of v are
    ``branching*v + 1 .. branching*v + branching``."""
    _need(branching >= 1, "PerfectAryTree: branching >= 1")
    _need(levels >= 1, "PerfectAryTree: levels >= 1")
    n = sum(branching ** i for i in range(levels))
    edges = [(v, branching * v + j) for v in range(n) for j in range(1, branching + 1)
             if branching * v + j < n]
    return Graph.from_edges(n, edges)


def ary_parent(v: int, branching: int) -> int | None:
    return None if v == 0 else (v - 1) // branching


def ary_stack(b: int, k: int) -> Graph:
    """b+1 copies of the perfect (b+1)-ary tree with k+1 levels, each vertex
    joined to all of its descendants.  Copy c occupies a contiguous block in
    the BFS labelling of :func:`perfect_ary_tree`."""
    _need(b >= 1, "AryStack: b >= 1")
    _need(k >= 1, "AryStack: k >= 1")
    br = b + 1
    size = sum(br ** i for i in range(k + 1))
    edges = []
    for c in range(br):
        off = c * size
        for v in range(1, size):
            a = ary_parent(v, br)
            while a is not None:
                edges.append((off + a, off + v))
                a = ary_parent(a, br)
    return Graph.from_edges(br * size, edges)


# -- family specs ------------------------------------------------------------

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "path": ("n",),
    "cycle": ("n",),
    "star": ("k",),
    "complete": ("n",),
    "path-power": ("n", "k"),
    "cycle-power": ("n", "k"),
    "tkb": ("k", "b"),
    "ts": ("n", "b", "s"),
    "star-path": ("n", "b", "t"),
    "fraction-sharp": ("n", "b"),
    "ary-stack": ("b", "k"),
    "perfect-ary-tree": ("branching", "levels"),
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, name: str, **params: int) -> FamilySpec:
        if name not in FAMILY_PARAMS:
            raise FamilyError(f"unknown family {name!r}")
        missing = [p for p in FAMILY_PARAMS[name] if p not in params]
        if missing:
            raise FamilyError(f"family {name} needs parameters {', '.join(missing)}")
        return cls(name, tuple((p, int(params[p])) for p in FAMILY_PARAMS[name]))

    def __getitem__(self, key: str) -> int:
        return dict(self.params)[key]

    def __str__(self) -> str:
        return self.name + "(" + ", ".join(f"{k}={v}" for k, v in self.params) + ")"


def construct(spec: FamilySpec) -> Graph:
    p = dict(spec.params)
    name = spec.name
    if name == "path":
        return path(p["n"])
    if name == "cycle":
        return cycle(p["n"])
    if name == "star":
        return star(p["k"])
    if name == "complete":
        return complete(p["n"])
    if name == "path-power":
        return path_power(p["n"], p["k"])
    if name == "cycle-power":
        return cycle_power(p["n"], p["k"])
    if name == "tkb":
        return tkb(p["k"], p["b"])
    if name == "ts":
        return ts(p["n"], p["b"], p["s"])[0]
    if name == "star-path":
        return star_path(p["n"], p["b"], p["t"])
    if name == "fraction-sharp":
        return fraction_sharp(p["n"], p["b"])
    if name == "ary-stack":
        return ary_stack(p["b"], p["k"])
    if name == "perfect-ary-tree":
        return perfect_ary_tree(p["branching"], p["levels"])
    raise FamilyError(f"unknown family {name!r}")
