"""Grid world example parameters."""

from fractions import Fraction

from pydantic import Field, model_validator

from .rational import DomainModel, Rational, Vector


class GridWorldParams(DomainModel):
    """A square grid where meanings are destination cells reached from (0, 0).

    Cells are (i, j) = (moves right, moves up). Messages are words over the
    moves U and R, each move costing its code length in bits.

    Attributes:
        side: Number of cells per side
        destinations: Destination cell of each meaning
        labels: Meaning labels
        up_cost: Cost of one U move
        right_cost: Cost of one R move
        tx_prior: Transmitter prior over destinations
        rx_prior: Receiver prior over destinations
    """

    side: int = Field(default=3, ge=1, description="Grid side length")
    destinations: tuple[tuple[int, int], ...] = Field(
        default=((1, 2), (2, 2)), min_length=1, description="Destination cells"
    )
    labels: tuple[str, ...] = Field(default=("A", "B"), description="Meaning labels")
    up_cost: Rational = Field(default=Fraction(1), description="Cost of U ('0')")
    right_cost: Rational = Field(default=Fraction(2), description="Cost of R ('10')")
    tx_prior: Vector = Field(
        default=(Fraction(1, 3), Fraction(2, 3)), description="Transmitter prior"
    )
    rx_prior: Vector = Field(
        default=(Fraction(1, 2), Fraction(1, 2)), description="Receiver prior"
    )

    @model_validator(mode="after")
    def _check_lengths(self) -> "GridWorldParams":
        n = len(self.destinations)
        if len(self.labels) != n or len(self.tx_prior) != n or len(self.rx_prior) != n:
            raise ValueError("labels and priors need one entry per destination")
        return self
