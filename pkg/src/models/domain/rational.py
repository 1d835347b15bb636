"""Exact rational values for pydantic models."""

import re
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(value: Any) -> Fraction:
    """Convert an integer, Fraction or "a/b" string into an exact Fraction.

    Decimal strings and floats are refused so no precision is lost silently.

    Args:
        value: Value to convert.

    Returns:
        Fraction: The exact value in lowest terms.

    Raises:
        ValueError: If the value is not an exact rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_PATTERN.match(text):
            raise ValueError(f"Not an exact rational: {value!r}")
        numerator, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise ValueError(f"Zero denominator in {value!r}")
        return Fraction(int(numerator), int(denominator) if denominator else 1)
    raise ValueError(f"Not an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "a/b", or "a" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
Vector = tuple[Rational, ...]
Matrix = tuple[Vector, ...]
IndexVector = tuple[int, ...]


class DomainModel(BaseModel):
    """Immutable base for domain models holding exact rationals."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def matrix_shape(matrix: Matrix) -> tuple[int, int]:
    """Return (rows, columns) of a rectangular matrix.

    Raises:
        ValueError: If the rows have different lengths.
    """
    widths = {len(row) for row in matrix}
    if len(widths) > 1:
        raise ValueError("Matrix rows have different lengths")
    return len(matrix), widths.pop() if widths else 0
