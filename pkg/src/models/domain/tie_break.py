"""Tie-break policy for the frontier slope search."""

import random
from typing import Callable, Optional, Sequence, TypeVar

from pydantic import Field, model_validator

from .enums import TieBreakKind
from .rational import DomainModel

T = TypeVar("T")


class TieBreakPolicy(DomainModel):
    """Rule used to pick one candidate among equally good ones.

    Attributes:
        kind: Lexicographic (smallest meaning, then smallest message) or seeded random
        seed: Seed for the random policy
    """

    kind: TieBreakKind = Field(
        default=TieBreakKind.LEXICOGRAPHIC, description="Tie-break rule"
    )
    seed: Optional[int] = Field(default=None, description="Seed for random choice")

    @model_validator(mode="after")
    def _check_seed(self) -> "TieBreakPolicy":
        if self.kind == TieBreakKind.SEEDED_RANDOM and self.seed is None:
            raise ValueError("seeded-random tie-break requires a seed")
        return self

    @classmethod
    def parse(cls, text: str) -> "TieBreakPolicy":
        """Parse "lexicographic" or "seeded:<n>"."""
        if text == TieBreakKind.LEXICOGRAPHIC.value:
            return cls()
        prefix, _, seed = text.partition(":")
        if prefix == "seeded" and seed.lstrip("-").isdigit():
            return cls(kind=TieBreakKind.SEEDED_RANDOM, seed=int(seed))
        raise ValueError(f"Unknown tie-break policy: {text!r}")

    def __str__(self) -> str:
        if self.kind == TieBreakKind.SEEDED_RANDOM:
            return f"seeded:{self.seed}"
        return self.kind.value

    def selector(self) -> Callable[[Sequence[T]], T]:
        """Return a chooser over candidate lists sorted in lexicographic order.

        The random chooser owns its generator, so one selector gives a
        reproducible sequence of choices.
        """
        if self.kind == TieBreakKind.LEXICOGRAPHIC:
            return lambda candidates: candidates[0]
        rng = random.Random(self.seed)
        return lambda candidates: candidates[rng.randrange(len(candidates))]
