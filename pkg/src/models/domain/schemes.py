"""Encoding and decoding scheme domain models."""

from fractions import Fraction
from typing import Optional

from pydantic import Field, model_validator

from .rational import DomainModel, IndexVector, Matrix


def _check_stochastic(matrix: Matrix, name: str) -> None:
    for index, row in enumerate(matrix):
        if any(value < 0 for value in row):
            raise ValueError(f"{name} row {index} has a negative entry")
        if sum(row, Fraction(0)) != 1:
            raise ValueError(f"{name} row {index} does not sum to 1")


def _one_hot_rows(indices: IndexVector, width: int) -> Matrix:
    return tuple(
        tuple(Fraction(int(column == index)) for column in range(width))
        for index in indices
    )


def _deterministic_form(matrix: Matrix) -> Optional[IndexVector]:
    indices = []
    for row in matrix:
        ones = [column for column, value in enumerate(row) if value == 1]
        if len(ones) != 1:
            return None
        indices.append(ones[0])
    return tuple(indices)


class EncodingScheme(DomainModel):
    """Row-stochastic map from meanings to messages, entry u(s|w).

    Attributes:
        matrix: N x M matrix, row n is u(.|w_n)
        indices: Deterministic form (i_1..i_N) when every row is one-hot
    """

    matrix: Matrix = Field(..., min_length=1, description="Encoder u(s|w)")
    indices: Optional[IndexVector] = Field(
        default=None, description="Chosen message index per meaning"
    )

    @model_validator(mode="after")
    def _check_scheme(self) -> "EncodingScheme":
        _check_stochastic(self.matrix, "encoder")
        derived = _deterministic_form(self.matrix)
        if self.indices is None and derived is not None:
            object.__setattr__(self, "indices", derived)
        elif self.indices is not None and self.indices != derived:
            raise ValueError("encoder index vector disagrees with its matrix")
        return self

    @classmethod
    def deterministic(cls, indices: IndexVector, n_messages: int) -> "EncodingScheme":
        """Build the one-hot encoder sending meaning n to message indices[n]."""
        return cls(matrix=_one_hot_rows(tuple(indices), n_messages))

    @property
    def is_deterministic(self) -> bool:
        return self.indices is not None

    @property
    def n_meanings(self) -> int:
        return len(self.matrix)

    @property
    def n_messages(self) -> int:
        return len(self.matrix[0])


class DecodingScheme(DomainModel):
    """Per-message distribution over decoded meanings, entry v(w|s).

    Attributes:
        matrix: M x N matrix, row m is v(.|s_m)
        indices: Deterministic form (n_1..n_M) when every row is one-hot
    """

    matrix: Matrix = Field(..., min_length=1, description="Decoder v(w|s)")
    indices: Optional[IndexVector] = Field(
        default=None, description="Decoded meaning index per message"
    )

    @model_validator(mode="after")
    def _check_scheme(self) -> "DecodingScheme":
        _check_stochastic(self.matrix, "decoder")
        derived = _deterministic_form(self.matrix)
        if self.indices is None and derived is not None:
            object.__setattr__(self, "indices", derived)
        elif self.indices is not None and self.indices != derived:
            raise ValueError("decoder index vector disagrees with its matrix")
        return self

    @classmethod
    def deterministic(cls, indices: IndexVector, n_meanings: int) -> "DecodingScheme":
        """Build the one-hot decoder mapping message m to meaning indices[m]."""
        return cls(matrix=_one_hot_rows(tuple(indices), n_meanings))

    @property
    def is_deterministic(self) -> bool:
        return self.indices is not None

    @property
    def n_messages(self) -> int:
        return len(self.matrix)

    @property
    def n_meanings(self) -> int:
        return len(self.matrix[0])
