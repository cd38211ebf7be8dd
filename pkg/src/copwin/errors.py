"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Raised when a graph text file is malformed."""


class UnknownVertexError(KeyError):
    """Raised when a vertex label is not present in a graph."""

    def __str__(self) -> str:  # KeyError quotes its payload; keep messages readable
        return self.args[0] if self.args else ""


class NotCopWinError(ValueError):
    """Raised when an operation requires finite corner rank but the graph has none."""


class StrategyViolationError(RuntimeError):
    """Raised when a schedule-based cop strategy has no admissible move.

    Under correct play this never happens; it signals that the caller
    deviated from the strategy's precondition earlier in the game.
    """


class IllegalMoveError(ValueError):
    """Raised by the game engine when a strategy produces an illegal vertex."""


class EscapePositionError(ValueError):
    """Raised when cop-optimal moves are requested from a position the cop cannot win."""


class TranscriptError(ValueError):
    """Raised when a game transcript fails validation."""
