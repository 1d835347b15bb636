"""Domain enums for the semantic communication toolkit."""

from enum import Enum


class PriorChoice(str, Enum):
    """Which party's prior over meanings to use.

    Inherits from str to ensure JSON serialization works correctly.
    """

    TX = "tx"
    RX = "rx"


class Envelope(str, Enum):
    """Boundary chain of a distortion-cost region."""

    LOWER = "lower"
    UPPER = "upper"


class TieBreakKind(str, Enum):
    """How ties in the frontier slope search are resolved."""

    LEXICOGRAPHIC = "lexicographic"
    SEEDED_RANDOM = "seeded-random"


class Refinement(str, Enum):
    """Interpretation refinement applied to one received message."""

    NONE = "none"
    REMOVE_WORST = "remove-worst"
    COLLAPSE_BEST = "collapse-best"
