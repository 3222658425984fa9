"""Command-line entry point: ``mbdom solve|check-good|construct|verify|play``.

Exit codes: 0 success or PASS, 1 FAIL, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import suites
from .families import FAMILY_PARAMS, FamilySpec, construct
from .formulas import FormulaError
from .game import (
    GameConfig,
    IllegalMove,
    Move,
    Player,
    apply_move,
    dominated,
    game_status,
    initial_state,
)
from .goodness import dominator_first_set, find_problematic
from .graph import GraphError, InstanceTooLarge
from .io import format_graph, read_graph
from .solver import solve_max_dominated, solve_rounds, solver_cap

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument plumbing ---------------------------------------------------------

def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _player(text: str) -> Player:
    try:
        return Player.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("board")
    src.add_argument("--graph", metavar="FILE", help="edge-list file")
    src.add_argument("--family", choices=sorted(FAMILY_PARAMS), help="named construction")
    for name in ("n", "k", "s", "t", "b", "branching", "levels"):
        src.add_argument(f"--{name}", type=int, help=f"family parameter {name}")


def _add_game_args(p: argparse.ArgumentParser, first_default: str = "dominator") -> None:
    p.add_argument("--bias", type=int, default=1, help="Dominator's bias b (default 1)")
    p.add_argument("--first", type=_player, default=Player.parse(first_default),
                   help=f"dominator or staller (default {first_default})")
    p.add_argument("--cap", type=int, help="override the solver's vertex cap")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _family_spec(args) -> FamilySpec:
    params = {}
    for name in FAMILY_PARAMS[args.family]:
        val = getattr(args, name, None)
        if val is None and name == "b":
            val = args.bias
        if val is None:
            raise UsageError(f"family {args.family} needs --{name}")
        params[name] = val
    return FamilySpec.of(args.family, **params)


def _board(args):
    if bool(args.graph) == bool(args.family):
        raise UsageError("give exactly one of --graph FILE or --family NAME")
    if args.graph:
        return read_graph(args.graph), args.graph
    spec = _family_spec(args)
    return construct(spec), str(spec)


def _emit(args, data: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(data, sort_keys=False))
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------

def cmd_solve(args) -> int:
    g, label = _board(args)
    cfg = GameConfig(g, args.bias, args.first)
    if args.objective == "dominated":
        value = solve_max_dominated(cfg, cap=args.cap)
        out = {"value": value, "objective": "dominated"}
    else:
        rep = solve_rounds(cfg, cap=args.cap)
        out = rep.to_dict()
        out["objective"] = "rounds"
    out.update({"board": label, "n": g.n, "bias": args.bias, "first": args.first.value})
    print(json.dumps(out))
    return EXIT_OK


def cmd_check_good(args) -> int:
    t, label = _board(args)
    if not t.is_tree():
        raise UsageError(f"{label} is not a tree")
    b = args.bias
    if args.first is Player.STALLER:
        w = find_problematic(t, (), b)
        data = {"board": label, "bias": b, "first": "staller", "good": w is None,
                "witness": None if w is None else {"sequence": list(w.sequence), "u": w.u}}
        text = f"{b}-good: yes" if w is None else f"{b}-good: no; witness: {w}"
    else:
        A = dominator_first_set(t, b)
        data = {"board": label, "bias": b, "first": "dominator", "winnable": A is not None,
                "A": None if A is None else sorted(A)}
        text = "winnable: no" if A is None else "winnable: yes; A={" + ",".join(map(str, sorted(A))) + "}"
    _emit(args, data, text)
    return EXIT_OK


def cmd_construct(args) -> int:
    if not args.family:
        raise UsageError("construct needs --family NAME")
    spec = _family_spec(args)
    g = construct(spec)
    if args.json:
        print(json.dumps({"family": str(spec), "n": g.n, "edges": [list(e) for e in g.edges()]}))
    else:
        text = format_graph(g, str(spec))
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return EXIT_OK


def _suite_kwargs(args) -> dict:
    """Forward only the flags the chosen suite understands."""
    name = args.suite
    kw: dict = {}

    def put(key, val):
        if val is not None:
            kw[key] = val

    if name in ("powers", "trees-b1", "characterization", "dominator-first", "bounds", "fraction",
                "matching-order"):
        put("max_n", args.max_n)
        put("min_n", args.min_n)
    if name in ("powers", "characterization", "dominator-first", "fraction", "tkb"):
        put("biases", args.bias)
    if name == "residue":
        put("max_n", args.max_n)
        if args.bias:
            kw["b"] = args.bias[0]
    if name == "bounds" and args.bias:
        kw["b"] = args.bias[0]
    if name == "tkb":
        put("max_k", args.max_k)
    if name in ("mindeg", "beck"):
        put("trials", args.trials)
        put("seed", args.seed)
    if name == "mindeg":
        put("max_n", args.max_n)
    if name == "matching-order":
        put("orders", args.orders)
        put("seed", args.seed)
    return kw


def cmd_verify(args) -> int:
    fn = suites.SUITES[args.suite]
    result = fn(**_suite_kwargs(args))
    if args.json:
        print(json.dumps(result.to_dict()))
    else:
        print(result.table(verbose=args.verbose))
    return EXIT_OK if result.ok else EXIT_FAIL


# -- interactive play ------------------------------------------------------------

def _engine(name: str, side: Player, cfg: GameConfig, params: dict):
    from .strategies import by_name

    if name == "auto":
        name = "optimal" if cfg.n <= solver_cap(cfg.bias) else "greedy"
    return by_name(name, side, cfg, params)


def _show(cfg: GameConfig, st, out) -> None:
    dom = ",".join(map(str, sorted(st.dominator))) or "-"
    sta = ",".join(map(str, sorted(st.staller))) or "-"
    und = sorted(set(range(cfg.n)) - dominated(cfg, st))
    print(f"  Dominator: {dom}  Staller: {sta}  undominated: {','.join(map(str, und)) or '-'}", file=out)


def _read_move(side: Player, cfg: GameConfig, st, inp, out) -> Move | None:
    while True:
        want = f"up to {cfg.bias} vertices" if side is Player.DOMINATOR else "one vertex"
        print(f"your move ({side.value}, {want}; 'quit' to stop): ", end="", file=out, flush=True)
        line = inp.readline()
        if not inp.isatty():
            print(file=out)
        if not line or line.strip().lower() in ("quit", "exit", "q"):
            return None
        try:
            vs = [int(x) for x in line.replace(",", " ").split()]
            if not vs:
                raise ValueError("no vertex given")
            if side is Player.STALLER:
                if len(vs) != 1:
                    raise ValueError("Staller claims exactly one vertex")
                mv = Move.staller(vs[0])
            else:
                mv = Move.dominator(vs)
            apply_move(cfg, st, mv)
            return mv
        except (ValueError, IllegalMove) as exc:
            print(f"illegal input: {exc}", file=out)


def cmd_play(args, inp=None, out=None) -> int:
    inp = inp or sys.stdin
    out = out or sys.stdout
    g, label = _board(args)
    cfg = GameConfig(g, args.bias, args.first)
    human = args.human
    params = {k: getattr(args, k) for k in ("k", "kind") if getattr(args, k, None) is not None}
    engine = _engine(args.engine, human.other, cfg, params)
    print(f"{label}: n={g.n}, b={cfg.bias}, {cfg.first.value} moves first; you are {human.value}, "
          f"engine plays {engine.name}", file=out)
    st = initial_state(cfg)
    history: list[Move] = []
    status = game_status(cfg, st)
    while not status.decided:
        _show(cfg, st, out)
        if st.to_move is human:
            mv = _read_move(human, cfg, st, inp, out)
            if mv is None:
                print("quit", file=out)
                return EXIT_OK
        else:
            mv = engine.choose(cfg, st, tuple(history))
            print(f"engine: {mv}", file=out)
        st = apply_move(cfg, st, mv)
        history.append(mv)
        status = game_status(cfg, st)
    _show(cfg, st, out)
    print(f"result: {status}", file=out)
    return EXIT_OK


# -- main ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mbdom", description="Maker-Breaker domination game toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact game value")
    _add_graph_args(p)
    _add_game_args(p)
    p.add_argument("--objective", choices=("rounds", "dominated"), default="rounds")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-good", help="goodness of a tree, with witness")
    _add_graph_args(p)
    _add_game_args(p, first_default="staller")
    p.set_defaults(func=cmd_check_good)

    p = sub.add_parser("construct", help="print a named construction as an edge list")
    _add_graph_args(p)
    p.add_argument("--bias", type=int, default=1, help="default for the family parameter b")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", "-o", metavar="FILE")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=list(suites.SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--bias", type=_int_list, help="comma-separated biases, e.g. 1,2")
    p.add_argument("--trials", type=int)
    p.add_argument("--orders", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", "-v", action="store_true", help="list passing cases too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="interactive text match against the engine")
    _add_graph_args(p)
    _add_game_args(p)
    p.add_argument("--human", type=_player, default=Player.STALLER, help="side you play (default staller)")
    p.add_argument("--engine", default="auto", help="engine strategy name (default: solver when in cap)")
    p.add_argument("--kind", choices=("path", "cycle"), help="board kind for the interval strategy")
    p.set_defaults(func=cmd_play)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, FormulaError, ValueError) as exc:
        # GraphParseError, FamilyError and InstanceTooLarge are GraphErrors
        kind = "too large" if isinstance(exc, InstanceTooLarge) else "error"
        print(f"mbdom: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"mbdom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
