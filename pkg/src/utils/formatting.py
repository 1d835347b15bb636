"""Plain-text rendering of exact values and result tables."""

from fractions import Fraction
from typing import Optional, Sequence

from ..models.domain import DistortionCostPoint, SemanticLanguage, format_rational


def exact(value: Fraction, places: int = 4) -> str:
    """Exact fraction followed by its decimal rendering, e.g. `7/18 (0.3889)`."""
    text = format_rational(value)
    if Fraction(value).denominator == 1:
        return text
    return f"{text} ({float(value):.{places}f})"


def message_set(lang: SemanticLanguage, indices: Optional[Sequence[int]]) -> str:
    """Labels of the given messages, as `{UU,∅}` for an encoder."""
    if indices is None:
        return "-"
    return "{" + ",".join(lang.messages[m] for m in indices) + "}"


def decoder_map(lang: SemanticLanguage, indices: Optional[Sequence[int]]) -> str:
    """Decoded meaning of each message, as `∅→A U→A ...`."""
    if indices is None:
        return "-"
    return " ".join(
        f"{message}→{lang.meanings[n]}" for message, n in zip(lang.messages, indices)
    )


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Left-aligned columns separated by two spaces."""
    widths = [len(header) for header in headers]
    for row in rows:
        widths = [max(width, len(cell)) for width, cell in zip(widths, row)]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(width) for cell, width in zip(cells, widths))

    return "\n".join(
        [line(headers), line(["-" * width for width in widths])]
        + [line(row) for row in rows]
    ).rstrip()


def point_rows(
    points: Sequence[DistortionCostPoint], lang: SemanticLanguage, places: int = 4
) -> list[list[str]]:
    """Table rows `label, scheme, L, D` for region vertices."""
    return [
        [
            point.label or str(i),
            message_set(lang, point.encoder),
            exact(point.cost, places),
            exact(point.distortion, places),
        ]
        for i, point in enumerate(points)
    ]


def yes_no(flag: Optional[bool]) -> str:
    if flag is None:
        return "undecided"
    return "yes" if flag else "no"
