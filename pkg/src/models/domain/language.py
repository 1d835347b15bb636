"""Semantic language domain model."""

from fractions import Fraction
from typing import Optional

from pydantic import Field, model_validator

from ...middleware.exceptions import DimensionMismatchError
from .enums import PriorChoice
from .rational import DomainModel, Matrix, Vector


def require_shape(matrix: Matrix, rows: int, columns: int, name: str) -> None:
    """Raise DimensionMismatchError unless matrix is rows x columns."""
    if len(matrix) != rows or any(len(row) != columns for row in matrix):
        raise DimensionMismatchError(
            f"{name} must be {rows}x{columns}",
            details={
                "name": name,
                "expected": [rows, columns],
                "rows": len(matrix),
                "columns": sorted({len(row) for row in matrix}),
            },
        )


def require_length(vector: Vector, length: int, name: str) -> None:
    """Raise DimensionMismatchError unless vector has the given length."""
    if len(vector) != length:
        raise DimensionMismatchError(
            f"{name} must have {length} entries",
            details={"name": name, "expected": length, "actual": len(vector)},
        )


class SemanticLanguage(DomainModel):
    """A semantic language (W, S, P, Q) with the priors of both parties.

    Only shapes are enforced here. Stochasticity, nonnegativity and cost order
    are checked by validate_language so broken inputs can be diagnosed.

    Attributes:
        meanings: Meaning labels w_1..w_N
        messages: Message labels s_1..s_M in nondecreasing cost order
        expression: N x M matrix, entry p(s_m|w_n)
        interpretation: M x N matrix, row m is the distribution q(.|s_m)
        tx_prior: Transmitter prior p(w)
        rx_prior: Receiver prior q(w)
    """

    meanings: tuple[str, ...] = Field(..., min_length=1, description="Meaning labels")
    messages: tuple[str, ...] = Field(..., min_length=1, description="Message labels")
    expression: Matrix = Field(..., description="Expression matrix P, p(s|w)")
    interpretation: Matrix = Field(
        ..., description="Interpretation matrix Q, one row q(.|s) per message"
    )
    tx_prior: Vector = Field(..., description="Transmitter prior p(w)")
    rx_prior: Vector = Field(..., description="Receiver prior q(w)")

    @model_validator(mode="after")
    def _check_shapes(self) -> "SemanticLanguage":
        n, m = len(self.meanings), len(self.messages)
        if len(set(self.meanings)) != n or len(set(self.messages)) != m:
            raise ValueError("Meaning and message labels must be unique")
        require_shape(self.expression, n, m, "expression")
        require_shape(self.interpretation, m, n, "interpretation")
        require_length(self.tx_prior, n, "tx_prior")
        require_length(self.rx_prior, n, "rx_prior")
        return self

    @property
    def n_meanings(self) -> int:
        return len(self.meanings)

    @property
    def n_messages(self) -> int:
        return len(self.messages)

    def prior(self, choice: PriorChoice = PriorChoice.TX) -> Vector:
        """Return the transmitter or the receiver prior."""
        return self.tx_prior if choice == PriorChoice.TX else self.rx_prior

    def meaning_index(self, label: str) -> int:
        return self.meanings.index(label)

    def message_index(self, label: str) -> int:
        return self.messages.index(label)

    def message_probability(
        self, prior: Optional[Vector] = None
    ) -> tuple[Fraction, ...]:
        """Marginal p(s) = sum_w prior(w) p(s|w), transmitter prior by default."""
        weights = self.tx_prior if prior is None else prior
        return tuple(
            sum(
                (weights[n] * self.expression[n][m] for n in range(self.n_meanings)),
                Fraction(0),
            )
            for m in range(self.n_messages)
        )
