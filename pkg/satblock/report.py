"""Report rows and their JSON-lines / CSV writers."""

from __future__ import annotations

import csv
import json
import sys
from collections.abc import Mapping, Sequence
from dataclasses import asdict, dataclass
from typing import Any, TextIO

from .exceptions import BlockerError

FORMAT_JSON = "json"
FORMAT_CSV = "csv"

TIMING_FIELDS = frozenset({"elapsed_ms"})

REPORT_FIELDS = (
    "n",
    "t",
    "is_blocker",
    "is_saturated",
    "source",
    "classification",
    "min_shape",
    "stability_distance",
    "edges",
    "elapsed_ms",
)


@dataclass
class ReportRow:
    """Verdicts for one blocker."""

    n: int
    t: int
    is_blocker: bool
    is_saturated: bool
    source: str | None = None
    classification: str | None = None
    min_shape: str | None = None
    stability_distance: int | None = None
    edges: str | None = None
    elapsed_ms: float | None = None

    def __post_init__(self) -> None:
        """Reject a saturated verdict on a non-blocker."""
        if self.is_saturated and not self.is_blocker:
            raise BlockerError(f"row n={self.n} t={self.t} is saturated but not blocking")

    def as_dict(self) -> dict[str, Any]:
        """Field mapping in report column order."""
        return asdict(self)


def _drop_timing(row: Mapping[str, Any], stable: bool) -> dict[str, Any]:
    return {key: value for key, value in row.items() if not (stable and key in TIMING_FIELDS)}


class ReportWriter:
    """Write rows as JSON lines or CSV, then a pass/fail summary."""

    def __init__(
        self,
        stream: TextIO,
        fmt: str = FORMAT_JSON,
        *,
        stable: bool = False,
        fields: Sequence[str] = REPORT_FIELDS,
        summary_stream: TextIO | None = None,
    ) -> None:
        """Initialize the writer."""
        self._stream = stream
        self._fmt = fmt
        self._stable = stable
        self._summary_stream = summary_stream or sys.stderr
        self._csv: csv.DictWriter | None = None
        if fmt == FORMAT_CSV:
            columns = [name for name in fields if not (stable and name in TIMING_FIELDS)]
            self._csv = csv.DictWriter(
                stream, fieldnames=columns, extrasaction="ignore", lineterminator="\n"
            )
            self._csv.writeheader()
        elif fmt != FORMAT_JSON:
            raise ValueError(f"unknown report format {fmt!r}")

    def write(self, row: ReportRow | Mapping[str, Any]) -> None:
        """Write one row."""
        data = _drop_timing(row.as_dict() if isinstance(row, ReportRow) else row, self._stable)
        if self._csv is not None:
            self._csv.writerow(data)
        else:
            self._stream.write(json.dumps(data) + "\n")

    def summary(self, passed: int, failed: int, **extra: Any) -> None:
        """Write the summary line: last JSON line, or stderr for CSV."""
        line = json.dumps({"summary": {"passed": passed, "failed": failed, **extra}}) + "\n"
        if self._csv is not None:
            self._summary_stream.write(line)
        else:
            self._stream.write(line)
