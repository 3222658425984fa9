"""The (b:1) Maker-Breaker domination game: exact solver, goodness of trees,
closed-form values and strategies with checkable guarantees."""

from .families import FamilySpec, construct
from .formulas import gamma_power, gamma_tkb, gamma_tree_b1, gamma_ts
from .game import GameConfig, GameState, GameStatus, Move, Outcome, Player, play_match, replay
from .goodness import dominator_first_set, find_problematic, is_b_good, is_good
from .graph import Graph, GraphError, InstanceTooLarge
from .guarantees import INFINITY
from .io import GraphParseError, parse_graph, read_graph
from .solver import optimal_move, solve_max_dominated, solve_rounds, verify_strategy

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "FamilySpec", "GameConfig", "GameState", "GameStatus", "Graph", "GraphError",
    "GraphParseError", "InstanceTooLarge", "Move", "Outcome", "Player", "construct",
    "dominator_first_set", "find_problematic", "gamma_power", "gamma_tkb", "gamma_tree_b1",
    "gamma_ts", "is_b_good", "is_good", "optimal_move", "parse_graph", "play_match", "read_graph",
    "replay", "solve_max_dominated", "solve_rounds", "verify_strategy", "__version__",
]
