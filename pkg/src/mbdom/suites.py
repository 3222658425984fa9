"""Verification suites: each compares the exact solver with a closed form,
a characterization or a strategy guarantee over a bounded family of cases.

A suite fails iff some case fails; a failing case carries a witness that
can be replayed through the game engine (a move transcript, a sequence or
a set).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .families import (
    ary_stack,
    cycle_power,
    fraction_sharp,
    path_power,
    tkb,
    ts,
)
from .formulas import (
    beck_bound,
    f_of_b,
    fraction_bound,
    gamma_power,
    gamma_tkb,
    gamma_tree_b1,
    mindeg_condition,
    tree_b1_case,
    tree_gamma_bounds,
)
from .game import GameConfig, Player
from .goodness import dominator_first_set, find_problematic, forest_after
from .graph import Graph, canonical_forest, residual_vertices, trees_up_to
from .guarantees import format_value
from .hypergraph import AryTreeMaker, BeckBreaker, max_maker_sets, maker_wins_against_all, random_hypergraph, root_leaf_paths
from .solver import solve_max_dominated, solve_rounds, verify_strategy


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str = ""
    witness: str = ""


@dataclass
class SuiteResult:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.ok]

    def add(self, name: str, ok: bool, detail: str = "", witness: str = "") -> CaseResult:
        c = CaseResult(name, bool(ok), detail, witness if not ok else "")
        self.cases.append(c)
        return c

    def table(self, verbose: bool = False) -> str:
        lines = []
        for c in self.cases:
            if verbose or not c.ok:
                line = f"{'PASS' if c.ok else 'FAIL'}  {c.name}  {c.detail}".rstrip()
                if c.witness:
                    line += f"  witness: {c.witness}"
                lines.append(line)
        for s in self.skipped:
            lines.append(f"SKIP  {s}")
        passed = len(self.cases) - len(self.failures)
        lines.append(f"{self.suite}: {passed}/{len(self.cases)} cases pass -> {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "status": "PASS" if self.ok else "FAIL",
            "cases": [{"name": c.name, "ok": c.ok, "detail": c.detail, "witness": c.witness}
                      for c in self.cases],
            "skipped": list(self.skipped),
        }


def _edges(t: Graph) -> str:
    return "[" + " ".join(f"{u}-{v}" for u, v in t.edges()) + "]"


def _pv(cfg: GameConfig) -> str:
    rep = solve_rounds(cfg, want_pv=True)
    return " ; ".join(str(m) for m in rep.pv or [])


def _fmt(v) -> str:
    return format_value(v)


# -- suites --------------------------------------------------------------------

def powers(max_n: int = 12, min_n: int = 1, ks=(1, 2), biases=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("powers")
    for kind, build in (("path", path_power), ("cycle", cycle_power)):
        for n in range(max(min_n, 1 if kind == "path" else 3), max_n + 1):
            for k in ks:
                for b in biases:
                    if k > n or b > n:
                        continue
                    cfg = GameConfig(build(n, k), b, Player.DOMINATOR)
                    got = solve_rounds(cfg, want_pv=False).value
                    want = gamma_power(n, k, b, kind)
                    ok = got == want
                    res.add(f"{kind} n={n} k={k} b={b}", ok, f"solver={_fmt(got)} formula={want}",
                            "" if ok else _pv(cfg))
    return res


def trees_b1(max_n: int = 10, min_n: int = 1) -> SuiteResult:
    res = SuiteResult("trees-b1")
    for t in trees_up_to(max_n, min_n):
        for first in Player:
            cfg = GameConfig(t, 1, first)
            got = solve_rounds(cfg, want_pv=False).value
            want = gamma_tree_b1(t, first)
            ok = got == want
            res.add(f"tree {_edges(t)} {first.value}-first", ok,
                    f"case={tree_b1_case(t, first)} solver={_fmt(got)} formula={_fmt(want)}",
                    "" if ok else _pv(cfg))
    return res


def characterization(max_n: int = 10, min_n: int = 2, biases=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("characterization")
    for t in trees_up_to(max_n, min_n):
        for b in biases:
            cfg = GameConfig(t, b, Player.STALLER)
            finite = solve_rounds(cfg, want_pv=False).finite
            w = find_problematic(t, (), b)
            good = w is None
            ok = good == finite
            res.add(f"tree {_edges(t)} b={b}", ok, f"good={good} finite={finite}",
                    "" if ok else f"problematic {w}; solver line {_pv(cfg)}")
    return res


def dominator_first(max_n: int = 9, min_n: int = 1, biases=(1, 2)) -> SuiteResult:
    res = SuiteResult("dominator-first")
    for t in trees_up_to(max_n, min_n):
        for b in biases:
            cfg = GameConfig(t, b, Player.DOMINATOR)
            finite = solve_rounds(cfg, want_pv=False).finite
            A = dominator_first_set(t, b)
            ok = (A is not None) == finite
            shown = "none" if A is None else "{" + ",".join(map(str, sorted(A))) + "}"
            res.add(f"tree {_edges(t)} b={b}", ok, f"A={shown} finite={finite}",
                    "" if ok else _pv(cfg))
    return res


def residue(max_n: int = 12, b: int = 2, svals=(0, 1, 2)) -> SuiteResult:
    res = SuiteResult("residue")
    for n in range(1, max_n + 1):
        for s in svals:
            if s > n // (b + 1):
                continue
            m = n - s * (b + 1)
            if m < 2:
                res.skipped.append(f"Ts(n={n},b={b},s={s}): n - s(b+1) = {m} is outside the construction (needs >= 2)")
                continue
            t, chain = ts(n, b, s)
            rest, _ = forest_after(t, chain).final_forest()
            whole = solve_rounds(GameConfig(t, b, Player.STALLER), want_pv=False).value
            part = solve_rounds(GameConfig(rest, b, Player.STALLER), want_pv=False).value
            removed = (n - rest.n) // (b + 1)
            ok = whole == s + part and (n - rest.n) % (b + 1) == 0 and removed == s
            res.add(f"Ts(n={n},b={b},s={s})", ok,
                    f"value={_fmt(whole)} s+residual={s}+{_fmt(part)} removed/(b+1)={removed}",
                    "" if ok else _pv(GameConfig(t, b, Player.STALLER)))
    return res


def tkb_suite(max_k: int = 10, biases=(2, 3), strategies: bool = True) -> SuiteResult:
    from .strategies import TkbDominator, TkbStaller

    res = SuiteResult("tkb")
    for b in biases:
        for k in range(1, max_k + 1):
            g = tkb(k, b)
            cfg = GameConfig(g, b, Player.STALLER)
            got = solve_rounds(cfg, want_pv=False).value
            want = gamma_tkb(k, b)
            ok = got == want
            res.add(f"T_{{{k},{b}}} value", ok, f"solver={_fmt(got)} formula={want} f(b)={f_of_b(b)}",
                    "" if ok else _pv(cfg))
            if not strategies:
                continue
            for strat in (TkbDominator(k, b), TkbStaller(k, b)):
                if not strat.applies(cfg):
                    res.add(f"T_{{{k},{b}}} {strat.side.value} strategy", False, "not applicable",
                            f"solver line {_pv(cfg)}")
                    continue
                r = verify_strategy(cfg, strat)
                res.add(f"T_{{{k},{b}}} {strat.side.value} strategy", r.ok, str(strat.guarantee(cfg)),
                        "" if r.ok else " ; ".join(str(m) for m in r.counterexample))
    return res


def bounds(max_n: int = 10, min_n: int = 1, b: int = 2) -> SuiteResult:
    res = SuiteResult("bounds")
    for t in trees_up_to(max_n, min_n):
        cfg = GameConfig(t, b, Player.STALLER)
        got = solve_rounds(cfg, want_pv=False).value
        if got == float("inf"):
            continue
        br = tree_gamma_bounds(t.n, b)
        ok = br.contains(got)
        res.add(f"tree {_edges(t)}", ok, f"{br.lower} <= {_fmt(got)} <= {br.upper}",
                "" if ok else _pv(cfg))
    return res


def fraction(max_n: int = 10, min_n: int = 1, biases=(1, 2), first: Player = Player.DOMINATOR,
             sharp: bool = True) -> SuiteResult:
    res = SuiteResult("fraction")
    for t in trees_up_to(max_n, min_n):
        for b in biases:
            got = solve_max_dominated(GameConfig(t, b, first))
            want = fraction_bound(t.n, b)
            res.add(f"tree {_edges(t)} b={b}", got >= want, f"dominated={got} bound={want}",
                    f"{first.value} first" if got < want else "")
    if sharp:
        g = fraction_sharp(8, 1)
        dfirst = solve_max_dominated(GameConfig(g, 1, Player.DOMINATOR))
        sfirst = solve_max_dominated(GameConfig(g, 1, Player.STALLER))
        res.add("FractionSharp(8,1) exactly 6", dfirst == 6,
                f"dominator-first={dfirst} staller-first={sfirst} bound={fraction_bound(8, 1)}",
                f"board {_edges(g)}")
    return res


def _random_dense(rng: random.Random, max_n: int) -> tuple[Graph, int]:
    while True:
        n = rng.randint(3, max_n)
        b = rng.choice((1, 2))
        p = rng.uniform(0.5, 0.95)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if g.min_degree() > 0 and mindeg_condition(n, g.min_degree(), b):
            return g, b


def mindeg(trials: int = 20, seed: int = 0, max_n: int = 12) -> SuiteResult:
    from .strategies import AryStackStaller, NeighborhoodBreakerDominator

    res = SuiteResult("mindeg")
    rng = random.Random(seed)
    for i in range(trials):
        g, b = _random_dense(rng, max_n)
        cfg = GameConfig(g, b, Player.DOMINATOR)
        strat = NeighborhoodBreakerDominator(g, b)
        r = verify_strategy(cfg, strat, cap=max(max_n, 12))
        val = solve_rounds(cfg, want_pv=False).value
        ok = r.ok and val != float("inf")
        res.add(f"random #{i} n={g.n} delta={g.min_degree()} b={b}", ok,
                f"strategy={'wins' if r.ok else 'fails'} solver={_fmt(val)}",
                "" if ok else (" ; ".join(str(m) for m in r.counterexample) if not r.ok else _edges(g)))
    g = ary_stack(1, 2)
    cfg = GameConfig(g, 1, Player.DOMINATOR)
    val = solve_rounds(cfg, want_pv=False).value
    res.add(f"AryStack(1,2) n={g.n} delta={g.min_degree()}", val == float("inf"), f"solver={_fmt(val)}",
            _pv(cfg))
    r = verify_strategy(cfg, AryStackStaller(1, 2))
    res.add("AryStack(1,2) staller strategy", r.ok, "Staller wins",
            "" if r.ok else " ; ".join(str(m) for m in r.counterexample))
    h = root_leaf_paths(2, 3)
    ok, line = maker_wins_against_all(h, 1, AryTreeMaker(2, 3).choose)
    res.add("ary-tree maker on 7-vertex binary tree", ok, "maker claims a root-leaf path",
            "" if ok else str(line))
    return res


def beck(trials: int = 200, seed: int = 7, qs=(1, 2, 3)) -> SuiteResult:
    res = SuiteResult("beck")
    rng = random.Random(seed)
    for i in range(trials):
        h = random_hypergraph(rng)
        q = rng.choice(qs)
        br = BeckBreaker(h, q)
        got, line = max_maker_sets(h, q, br.choose)
        bound = beck_bound([len(s) for s in h.sets], q)
        res.add(f"hypergraph #{i} n={h.n} sets={len(h.sets)} q={q}", got <= bound,
                f"maker sets={got} bound={bound}", str(line))
    return res


def matching_order(max_n: int = 10, min_n: int = 1, orders: int = 50, seed: int = 0) -> SuiteResult:
    res = SuiteResult("matching-order")
    rng = random.Random(seed)
    for t in trees_up_to(max_n, min_n):
        base = residual_vertices(t)
        code = canonical_forest(t, base)
        bad = None
        for _ in range(orders):
            order = list(range(t.n))
            rng.shuffle(order)
            got = residual_vertices(t, order)
            if canonical_forest(t, got) != code:
                bad = order
                break
        res.add(f"tree {_edges(t)}", bad is None, f"residual size {len(base)}",
                "" if bad is None else "order " + ",".join(map(str, bad)))
    return res


def strategy_optimality(max_n_tree: int = 9, biases=(1, 2), max_n_power: int = 12) -> SuiteResult:
    from .goodness import is_b_good
    from .strategies import IntervalDominator, RecursiveGoodDominator

    res = SuiteResult("strategies")
    for kind, build in (("path", path_power), ("cycle", cycle_power)):
        for n in range(2 if kind == "path" else 3, max_n_power + 1):
            for k in (1, 2):
                for b in (1, 2, 3):
                    if k > n or b > n:
                        continue
                    cfg = GameConfig(build(n, k), b, Player.DOMINATOR)
                    strat = IntervalDominator(n, k, b, kind)
                    g = strat.guarantee(cfg)
                    val = solve_rounds(cfg, want_pv=False).value
                    r = verify_strategy(cfg, strat)
                    ok = r.ok and g.rounds == val
                    res.add(f"interval {kind} n={n} k={k} b={b}", ok, f"guarantee={g.rounds} solver={_fmt(val)}",
                            "" if r.ok else " ; ".join(str(m) for m in r.counterexample))
    for t in trees_up_to(max_n_tree, 2):
        for b in biases:
            if not is_b_good(t, b):
                continue
            cfg = GameConfig(t, b, Player.STALLER)
            strat = RecursiveGoodDominator(t, b)
            r = verify_strategy(cfg, strat)
            res.add(f"recursive-good {_edges(t)} b={b}", r.ok, str(strat.guarantee(cfg)),
                    "" if r.ok else " ; ".join(str(m) for m in r.counterexample))
    return res


SUITES = {
    "powers": powers,
    "trees-b1": trees_b1,
    "characterization": characterization,
    "dominator-first": dominator_first,
    "residue": residue,
    "tkb": tkb_suite,
    "bounds": bounds,
    "fraction": fraction,
    "mindeg": mindeg,
    "beck": beck,
    "matching-order": matching_order,
}
