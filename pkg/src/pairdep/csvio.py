"""CSV ingestion and emission for paired samples.

Files are RFC-4180-style UTF-8 with '.' decimal points. Columns are selected
by header name or 1-based index; error messages carry the 1-based file line
(the header, when present, is line 1).
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .exceptions import CsvFormatError
from .sample import PairedSample


def _read_rows(path: str | Path) -> list[list[str]]:
    p = Path(path)
    if not p.is_file():
        raise CsvFormatError(f"file not found: {p}")
    with p.open(newline="", encoding="utf-8") as fh:
        return [row for row in csv.reader(fh)]


def _resolve_columns(selectors: list[str], header: list[str] | None, width: int) -> list[int]:
    indices = []
    for token in selectors:
        token = token.strip()
        if header is not None and token in header:
            indices.append(header.index(token))
            continue
        try:
            idx = int(token)
        except ValueError:
            raise CsvFormatError(
                f"unknown column {token!r}: not a header name"
                + ("" if header is None else f" among {header}")
                + " and not an integer index"
            ) from None
        if not 1 <= idx <= width:
            raise CsvFormatError(f"column index {idx} out of range 1..{width}")
        indices.append(idx - 1)
    return indices


def parse_selectors(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise CsvFormatError(f"empty column selector {text!r}")
    return parts


def ingest_csv(
    path: str | Path,
    x_cols: list[str],
    y_cols: list[str],
    header: bool = True,
) -> PairedSample:
    """Load the selected x and y columns of a CSV file as a paired sample."""
    rows = _read_rows(path)
    rows = [(i + 1, row) for i, row in enumerate(rows) if row]
    if header:
        if not rows:
            raise CsvFormatError(f"{path}: file is empty")
        header_row = [cell.strip() for cell in rows[0][1]]
        data_rows = rows[1:]
    else:
        header_row = None
        data_rows = rows
    if len(data_rows) < 2:
        raise CsvFormatError(f"{path}: need at least 2 data rows, found {len(data_rows)}")

    width = len(data_rows[0][1])
    values = np.empty((len(data_rows), width))
    for r, (line_no, row) in enumerate(data_rows):
        if len(row) != width:
            raise CsvFormatError(f"{path}: row {line_no} has {len(row)} cells, expected {width}")
        for c, cell in enumerate(row):
            try:
                values[r, c] = float(cell)
            except ValueError:
                raise CsvFormatError(
                    f"{path}: non-numeric value {cell.strip()!r} at row {line_no}, "
                    f"column {c + 1}"
                ) from None

    xi = _resolve_columns(x_cols, header_row, width)
    yi = _resolve_columns(y_cols, header_row, width)
    return PairedSample(values[:, xi], values[:, yi])


def write_csv(path: str | Path, s: PairedSample) -> None:
    """Write a paired sample with an x*/y* header row."""
    if s.p == 1:
        names = ["x"]
    else:
        names = [f"x{i + 1}" for i in range(s.p)]
    names += ["y"] if s.q == 1 else [f"y{i + 1}" for i in range(s.q)]
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(names)
        for i in range(s.n):
            writer.writerow([repr(float(v)) for v in (*s.x[i], *s.y[i])])
