"""Hourly series data model: circular indexing, chunking, CSV in/out.

Series are immutable after construction and safe to share across threads.
Indexing is 0-based internally; the time series is treated as circular,
so the predecessor of the first hour is the last hour.
"""

from __future__ import annotations

import csv
import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    EmptyFile,
    InvalidChunkLength,
    MissingColumn,
    UnparseableValue,
    ValidationError,
)


@dataclass(frozen=True)
class HourlySeries:
    """Ordered hourly observations (MW or MWh/h)."""

    values: np.ndarray
    label: str = ""
    start_timestamp: str | None = None
    timestamps: tuple[str, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size < 1:
            raise ValidationError("series must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(vals)):
            raise ValidationError("series contains NaN or infinite values")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return int(self.values.size)

    def require_non_negative(self) -> "HourlySeries":
        if np.any(self.values < 0):
            raise ValidationError(f"series {self.label!r} has negative values")
        return self

    def checksum(self) -> str:
        """sha256 over the raw float64 buffer; stable across runs."""
        return hashlib.sha256(self.values.tobytes()).hexdigest()

    @property
    def mean(self) -> float:
        return float(self.values.mean())


@dataclass(frozen=True)
class ChunkedSeries:
    """Fixed-length sequential blocks of a series, wrap-padded at the end."""

    chunks: np.ndarray  # (n_chunks, chunk_length)
    chunk_length: int
    source_length: int
    wrapped: bool

    def sums(self) -> np.ndarray:
        return self.chunks.sum(axis=1)

    def flatten(self) -> np.ndarray:
        """Concatenation truncated back to the source length."""
        return self.chunks.reshape(-1)[: self.source_length]


def circular_get(series: HourlySeries, index: int) -> float:
    """Value at ``index mod len(series)`` (mathematical modulus)."""
    return float(series.values[index % len(series)])


def chunk(series: HourlySeries, length: int, *, truncate: bool = False) -> ChunkedSeries:
    """Split into sequential blocks of ``length`` hours.

    A ragged final block is completed with wrapped-around leading values,
    unless ``truncate`` is set (for non-annual data where circularity is
    unwarranted), in which case the ragged tail is dropped.
    """
    n = len(series)
    if not 1 <= length <= n:
        raise InvalidChunkLength(f"chunk length {length} not in [1, {n}]")
    vals = series.values
    if truncate:
        m = n // length
        return ChunkedSeries(vals[: m * length].reshape(m, length).copy(), length, m * length, False)
    m = math.ceil(n / length)
    pad = m * length - n
    if pad:
        flat = np.concatenate([vals, vals[:pad]])
    else:
        flat = vals.copy()
    return ChunkedSeries(flat.reshape(m, length), length, n, pad > 0)


def load_csv(
    path: str | Path,
    value_column: str = "value",
    timestamp_column: str | None = None,
    label: str = "",
) -> HourlySeries:
    """Read one series from a UTF-8 CSV with a header row.

    Rows are assumed chronological. Blank or non-numeric value cells raise
    :class:`UnparseableValue` with the offending 1-based data row number.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise EmptyFile(str(path))
        header = [h.strip() for h in header]
        if value_column not in header:
            raise MissingColumn(f"{path}: no column {value_column!r} in {header}")
        if timestamp_column is not None and timestamp_column not in header:
            raise MissingColumn(f"{path}: no column {timestamp_column!r}")
        vcol = header.index(value_column)
        tcol = header.index(timestamp_column) if timestamp_column is not None else None
        values: list[float] = []
        stamps: list[str] = []
        # csv.reader keeps blank lines as empty rows, so row numbering stays
        # aligned with the file and a blank cell is reported where it occurs.
        for rownum, row in enumerate(reader, start=1):
            raw = row[vcol].strip() if vcol < len(row) else ""
            if not raw:
                raise UnparseableValue(rownum, "blank cell")
            try:
                v = float(raw)
            except ValueError:
                raise UnparseableValue(rownum, raw) from None
            if not math.isfinite(v):
                raise UnparseableValue(rownum, raw)
            values.append(v)
            if tcol is not None:
                stamps.append(row[tcol])
    if not values:
        raise EmptyFile(str(path))
    return HourlySeries(
        np.array(values),
        label=label or path.stem,
        start_timestamp=stamps[0] if stamps else None,
        timestamps=tuple(stamps) if stamps else None,
    )


def write_csv(series: HourlySeries, path: str | Path) -> None:
    """Write ``timestamp,value`` (or bare ``value``) at full float precision."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if series.timestamps is not None:
            writer.writerow(["timestamp", "value"])
            for ts, v in zip(series.timestamps, series.values):
                writer.writerow([ts, repr(float(v))])
        else:
            writer.writerow(["value"])
            for v in series.values:
                writer.writerow([repr(float(v))])
