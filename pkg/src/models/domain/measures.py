"""Cost and distortion measures."""

from fractions import Fraction

from pydantic import Field, model_validator

from .language import require_shape
from .rational import DomainModel, Matrix, Vector


class CostFunction(DomainModel):
    """Per-message cost l(s), aligned with the language's message order.

    Attributes:
        costs: Cost of each message
    """

    costs: Vector = Field(..., min_length=1, description="Message costs l(s)")

    @property
    def size(self) -> int:
        return len(self.costs)

    @property
    def l_min(self) -> Fraction:
        return min(self.costs)

    @property
    def l_max(self) -> Fraction:
        return max(self.costs)

    @property
    def is_sorted(self) -> bool:
        return all(a <= b for a, b in zip(self.costs, self.costs[1:]))


class DistortionMeasure(DomainModel):
    """Semantic distortion d(w, w_hat) between sent and decoded meanings.

    Attributes:
        matrix: N x N matrix, row w, column w_hat
    """

    matrix: Matrix = Field(..., min_length=1, description="Distortion d(w, w_hat)")

    @model_validator(mode="after")
    def _check_square(self) -> "DistortionMeasure":
        require_shape(self.matrix, len(self.matrix), len(self.matrix), "distortion")
        return self

    @classmethod
    def hamming(cls, size: int) -> "DistortionMeasure":
        """0 on the diagonal, 1 elsewhere."""
        return cls(
            matrix=tuple(
                tuple(Fraction(int(i != j)) for j in range(size)) for i in range(size)
            )
        )

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def is_hamming(self) -> bool:
        return all(
            value == (0 if i == j else 1)
            for i, row in enumerate(self.matrix)
            for j, value in enumerate(row)
        )

    @property
    def is_symmetric(self) -> bool:
        return all(
            self.matrix[i][j] == self.matrix[j][i]
            for i in range(self.size)
            for j in range(i + 1, self.size)
        )
