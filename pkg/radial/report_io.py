"""CSV and JSON rendering of reports with atomic file writes."""

import csv
import io
import logging
import os
from enum import Enum
from pathlib import Path

from pydantic import BaseModel

from radial.models import QDeltaReport, WavefunctionReport

logger = logging.getLogger(__name__)

ENERGY_FIELDS = ("energy", "E_ref", "E_approx", "e_dirichlet", "e_full_line", "gap")


def _scale_row(row: BaseModel, factor: float) -> BaseModel:
    """Multiply the energy fields of one row and recompute its deviation.

    Args:
        row: Report row or single-level report.
        factor: Energy scale.

    Returns:
        New instance of the same model.
    """
    data = row.model_dump()
    for key in ENERGY_FIELDS:
        if data.get(key) is not None:
            data[key] *= factor
    if "abs_dev" in data:
        other = data["E_approx"] if "E_approx" in data else data["energy"]
        data["abs_dev"] = abs(data["E_ref"] - other)
    return type(row).model_validate(data)


def scale_energies(report: BaseModel, factor: float) -> BaseModel:
    """Express every energy of a report in units of ``1/factor``.

    Args:
        report: Any report model.
        factor: Multiplier applied to energies.

    Returns:
        The report itself when ``factor == 1``, otherwise a scaled copy.
    """
    if factor == 1.0 or isinstance(report, QDeltaReport):
        return report
    if hasattr(report, "rows"):
        rows = [_scale_row(row, factor) for row in report.rows]
        return report.model_copy(update={"rows": rows})
    return _scale_row(report, factor)


def _cell(value) -> str:
    """Format one CSV cell.

    Args:
        value: Field value.

    Returns:
        Floats with 12 significant digits, enums by value, empty for None.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value + 0.0:.12g}"
    if isinstance(value, Enum):
        return str(value.value)
    return str(value)


def csv_rows(report: BaseModel) -> tuple[list[str], list[list[str]]]:
    """Flatten a report into a header and formatted rows.

    Args:
        report: Report model.

    Returns:
        ``(header, rows)``; a wavefunction gives the two columns ``r, u``.
    """
    if isinstance(report, WavefunctionReport):
        return ["r", "u"], [[_cell(r), _cell(u)] for r, u in zip(report.r, report.u)]
    items = report.expansion.terms if isinstance(report, QDeltaReport) else report.rows
    if not items:
        return [], []
    dumps = [item.model_dump(by_alias=True) for item in items]
    header = list(dumps[0])
    return header, [[_cell(dump[key]) for key in header] for dump in dumps]


def render(report: BaseModel, fmt: str) -> str:
    """Render a report completely before anything touches the disk.

    Args:
        report: Report model.
        fmt: ``csv`` or ``json``.

    Returns:
        File contents.
    """
    if fmt == "json":
        return report.model_dump_json(indent=2, by_alias=True) + "\n"
    header, rows = csv_rows(report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def write_atomic(path: Path, text: str) -> None:
    """Write ``text`` to a sibling temp file and rename it over ``path``.

    Args:
        path: Destination file.
        text: Complete contents.
    """
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        os.replace(tmp, path)
    except OSError:
        tmp.unlink(missing_ok=True)
        raise
    logger.debug("wrote %d bytes to %s", len(text), path)
