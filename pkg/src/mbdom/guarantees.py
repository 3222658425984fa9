"""What a strategy promises, checked against an exhaustive opponent."""

from __future__ import annotations

import math
from dataclasses import dataclass

INFINITY = math.inf


def format_value(value: float) -> str:
    return "infinity" if value == INFINITY else str(int(value))


def value_json(value: float):
    return "infinity" if value == INFINITY else int(value)


@dataclass(frozen=True)
class WinWithin:
    """Dominator wins after at most ``rounds`` of her moves."""

    rounds: int

    def __str__(self):
        return f"Dominator wins within {self.rounds} rounds"


@dataclass(frozen=True)
class StallerWins:
    def __str__(self):
        return "Staller wins"


@dataclass(frozen=True)
class LastsAtLeast:
    """Dominator never wins in fewer than ``rounds`` rounds."""

    rounds: int

    def __str__(self):
        return f"game lasts at least {self.rounds} rounds"


@dataclass(frozen=True)
class DominatesAtLeast:
    """Played to exhaustion, Dominator dominates at least ``count`` targets."""

    count: int

    def __str__(self):
        return f"Dominator dominates at least {self.count} vertices"


Guarantee = WinWithin | StallerWins | LastsAtLeast | DominatesAtLeast
