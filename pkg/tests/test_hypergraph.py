import random

from mbdom.families import complete, disjoint_union
from mbdom.formulas import beck_bound
from mbdom.hypergraph import (
    BeckBreaker,
    Hypergraph,
    max_maker_sets,
    neighborhood_hypergraph,
    random_hypergraph,
)


def test_single_set():
    h = Hypergraph(1, (frozenset({0}),))
    br = BeckBreaker(h, 1)
    assert br.choose(0, 0) == [0]
    assert max_maker_sets(h, 1, br.choose)[0] == 0 == br.bound


def test_neighbourhoods_with_small_potential():
    g = disjoint_union(complete(4), complete(4))
    h = neighborhood_hypergraph(g)
    assert h.potential(1) < 1
    assert max_maker_sets(h, 1, BeckBreaker(h, 1).choose)[0] == 0


def test_random_hypergraphs_respect_bound():
    rng = random.Random(0)
    for _ in range(60):
        h = random_hypergraph(rng)
        q = rng.choice((1, 2, 3))
        got, line = max_maker_sets(h, q, BeckBreaker(h, q).choose)
        assert got <= beck_bound([len(s) for s in h.sets], q)
