"""Shared value conventions: infinite rank and the escape sentinel."""

from __future__ import annotations

import math
from typing import Union

#: Rank of a vertex the ranking procedure never removes.  ``math.inf``
#: compares above every integer, which is exactly the required order.
INFINITE: float = math.inf

#: A rank is a positive integer or INFINITE.
Rank = Union[int, float]


class EscapeType:
    """Singleton marker for games the robber wins.

    Kept distinct from any integer so that "forever" can never be confused
    with a large move count; arithmetic with it is always explicit.
    """

    _instance = None

    def __new__(cls) -> "EscapeType":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ESCAPE"


ESCAPE = EscapeType()

#: A game value is a non-negative number of cop moves, or ESCAPE.
GameValue = Union[int, EscapeType]


def is_finite(rank: Rank) -> bool:
    return rank != INFINITE


def rank_to_json(rank: Rank):
    return "inf" if rank == INFINITE else int(rank)


def value_to_json(value: GameValue):
    return "escape" if value is ESCAPE else value
