"""Semantic channel domain model."""

from fractions import Fraction

from pydantic import Field, model_validator

from .language import require_shape
from .rational import DomainModel, Matrix


class SemanticChannel(DomainModel):
    """Message transition kernel C, entry c(s_hat|s) at row s, column s_hat.

    Attributes:
        kernel: M x M matrix of transition probabilities
    """

    kernel: Matrix = Field(..., min_length=1, description="Kernel c(s_hat|s)")

    @model_validator(mode="after")
    def _check_square(self) -> "SemanticChannel":
        require_shape(self.kernel, len(self.kernel), len(self.kernel), "channel")
        return self

    @classmethod
    def error_free(cls, size: int) -> "SemanticChannel":
        """Identity channel over size messages."""
        return cls(
            kernel=tuple(
                tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)
            )
        )

    @property
    def size(self) -> int:
        return len(self.kernel)

    @property
    def is_error_free(self) -> bool:
        return all(
            value == (1 if i == j else 0)
            for i, row in enumerate(self.kernel)
            for j, value in enumerate(row)
        )
