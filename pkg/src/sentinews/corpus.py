"""Dataset ingestion: headline corpora and OHLCV price bars.

CSV inputs (RFC-4180, UTF-8, header row). Loaders keep only the named
columns, drop rows with unparseable dates, empty text, or invariant
violations, and account for every input row in a load report.
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass, field, asdict
from datetime import date, datetime

from .errors import EmptyDatasetError, SchemaError

# Accepted date formats: ISO-8601 and D-MMM-YY(YY). Anything ambiguous
# (e.g. 01/02/2020) is rejected rather than guessed.
_DATE_FORMATS = ("%Y-%m-%d", "%d-%b-%y", "%d-%b-%Y")


def parse_date(raw: str) -> date | None:
    raw = raw.strip()
    for fmt in _DATE_FORMATS:
        try:
            return datetime.strptime(raw, fmt).date()
        except ValueError:
            continue
    return None


@dataclass(frozen=True)
class HeadlineRecord:
    date: date
    text: str
    source: str


@dataclass(frozen=True)
class OhlcvBar:
    date: date
    open: float
    high: float
    low: float
    close: float
    adj_close: float
    volume: int
    name: str

    def is_valid(self) -> bool:
        return (
            self.low <= min(self.open, self.close)
            and self.high >= max(self.open, self.close)
            and self.volume >= 0
        )


@dataclass(frozen=True)
class SplitSpec:
    fraction: float
    seed: int

    def __post_init__(self):
        if not 0.0 < self.fraction < 1.0:
            raise ValueError(f"split fraction must be in (0,1), got {self.fraction}")


@dataclass
class LoadReport:
    rows_in: int = 0
    rows_kept: int = 0
    dropped_missing: int = 0
    dropped_duplicate: int = 0
    dropped_invariant: int = 0

    @property
    def rows_dropped(self) -> int:
        return self.dropped_missing + self.dropped_duplicate + self.dropped_invariant

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _normalize_ws(text: str) -> str:
    return " ".join(text.split())


def _open_csv(path):
    try:
        return open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise IOError(f"cannot read {path}: {exc}") from exc


def load_headlines(path, date_column, text_column, source):
    """Load dated headlines from a delimited file.

    Keeps only the two named columns; rows with an unparseable date or
    empty text are dropped, as are duplicate (date, text) pairs.
    Returns (records, LoadReport).
    """
    report = LoadReport()
    records: list[HeadlineRecord] = []
    seen: set[tuple[date, str]] = set()
    with _open_csv(path) as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in (date_column, text_column):
            if col not in header:
                raise SchemaError(f"column {col!r} not in header {header}")
        for row in reader:
            report.rows_in += 1
            parsed = parse_date(row[date_column] or "")
            text = _normalize_ws(row[text_column] or "")
            if parsed is None or not text:
                report.dropped_missing += 1
                continue
            key = (parsed, text)
            if key in seen:
                report.dropped_duplicate += 1
                continue
            seen.add(key)
            records.append(HeadlineRecord(date=parsed, text=text, source=source))
            report.rows_kept += 1
    return records, report


_OHLCV_COLUMNS = {
    "date": "date",
    "open": "open",
    "high": "high",
    "low": "low",
    "close": "close",
    "volume": "volume",
    "adjclose": "adj_close",
    "name": "name",
}


def _canon(name: str) -> str:
    return "".join(name.lower().split())


def load_ohlcv(path):
    """Load OHLCV price bars, grouped by ticker and date-sorted within each.

    Rows violating low <= min(open, close) <= max(open, close) <= high or
    volume >= 0 are dropped and counted. Returns (bars, LoadReport).
    """
    report = LoadReport()
    bars: list[OhlcvBar] = []
    with _open_csv(path) as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        mapping = {}
        for col in header:
            key = _canon(col)
            if key in _OHLCV_COLUMNS:
                mapping[_OHLCV_COLUMNS[key]] = col
        missing = set(_OHLCV_COLUMNS.values()) - set(mapping)
        if missing:
            raise SchemaError(f"missing OHLCV columns: {sorted(missing)}")
        for row in reader:
            report.rows_in += 1
            parsed = parse_date(row[mapping["date"]] or "")
            if parsed is None:
                report.dropped_missing += 1
                continue
            try:
                bar = OhlcvBar(
                    date=parsed,
                    open=float(row[mapping["open"]]),
                    high=float(row[mapping["high"]]),
                    low=float(row[mapping["low"]]),
                    close=float(row[mapping["close"]]),
                    adj_close=float(row[mapping["adj_close"]]),
                    volume=int(float(row[mapping["volume"]])),
                    name=row[mapping["name"]].strip(),
                )
            except (TypeError, ValueError):
                report.dropped_missing += 1
                continue
            if not bar.is_valid():
                report.dropped_invariant += 1
                continue
            bars.append(bar)
            report.rows_kept += 1
    if not bars:
        raise EmptyDatasetError(f"no parseable OHLCV rows in {path}")
    bars.sort(key=lambda b: (b.name, b.date))
    return bars, report


def split(records, spec: SplitSpec):
    """Deterministic shuffle split into (train, validation).

    len(validation) = round(fraction * N); the two parts are disjoint and
    their union is the input.
    """
    n = len(records)
    if n < 2:
        raise ValueError(f"cannot split {n} record(s)")
    n_val = round(spec.fraction * n)
    indices = list(range(n))
    random.Random(spec.seed).shuffle(indices)
    val_idx = set(indices[:n_val])
    train = [records[i] for i in range(n) if i not in val_idx]
    validation = [records[i] for i in range(n) if i in val_idx]
    return train, validation
