"""CSV export of region vertices for external plotting."""

import csv
from pathlib import Path
from typing import Optional, Sequence, Union

from ..middleware.exceptions import ExportError
from ..middleware.logging import logger
from ..models.domain import DistortionCostPoint, format_rational

HEADER = ("L_exact", "D_exact", "L_float", "D_float", "scheme")
SIGNIFICANT_DIGITS = 12


def render_float(value) -> str:
    """Decimal rendering of an exact value at 12 significant digits."""
    return format(float(value), f".{SIGNIFICANT_DIGITS}g")


def region_rows(
    points: Sequence[DistortionCostPoint], schemes: Optional[Sequence[str]] = None
) -> list[tuple[str, str, str, str, str]]:
    """CSV rows for the points in the given order."""
    names = schemes if schemes is not None else [p.label or "" for p in points]
    return [
        (
            format_rational(point.cost),
            format_rational(point.distortion),
            render_float(point.cost),
            render_float(point.distortion),
            name,
        )
        for point, name in zip(points, names)
    ]


def export_region_csv(
    points: Sequence[DistortionCostPoint],
    path: Union[str, Path],
    schemes: Optional[Sequence[str]] = None,
) -> None:
    """Write region vertices, in envelope order, as CSV.

    Args:
        points: Vertices to write.
        path: Destination file.
        schemes: Scheme description per point, the point labels by default.

    Raises:
        ExportError: If the path is empty or the file cannot be written.
    """
    if not str(path).strip():
        raise ExportError("Export path is empty", details={"path": str(path)})
    try:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(HEADER)
            writer.writerows(region_rows(points, schemes))
    except OSError as e:
        raise ExportError(
            f"Cannot write CSV file: {e.strerror or e}", details={"path": str(path)}
        ) from e
    logger.debug("Region exported", extra={"path": str(path), "rows": len(points)})
