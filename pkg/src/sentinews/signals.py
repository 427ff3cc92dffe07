"""Compound-score trading signals and chart-data export.

decide() maps a compound score to Buy/Sell/Hold around a symmetric
threshold band (default 0: positive buys, negative sells, zero holds).
join_signals() attaches daily closing prices by exact (date, ticker) match;
unmatched scores are kept with an empty price, never dropped.
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass
from pathlib import Path

BUY = "Buy"
SELL = "Sell"
HOLD = "Hold"


def decide(compound: float, threshold: float = 0.0) -> str:
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    if compound > threshold:
        return BUY
    if compound < -threshold:
        return SELL
    return HOLD


@dataclass(frozen=True)
class SignalRecord:
    date: dt.date
    ticker: str
    compound: float
    action: str
    close: float | None = None  # None when no bar matched the (date, ticker)


def join_signals(scores, bars, threshold: float = 0.0):
    """scores: iterable of (date, ticker, compound); bars: OhlcvBar sequence.

    Returns (records, unmatched_count). |records| == |scores| always.
    """
    closes = {(bar.date, bar.name): bar.close for bar in bars}
    records = []
    unmatched = 0
    for date, ticker, compound in scores:
        close = closes.get((date, ticker))
        if close is None:
            unmatched += 1
        records.append(SignalRecord(date=date, ticker=ticker, compound=compound,
                                    action=decide(compound, threshold), close=close))
    return records, unmatched


def write_signals_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", "ticker", "close", "compound", "action"])
        for r in records:
            close = "" if r.close is None else repr(r.close)
            writer.writerow([r.date.isoformat(), r.ticker, close, repr(r.compound), r.action])


def read_signals_csv(path):
    """Parse back what write_signals_csv produced."""
    records = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            close = float(row["close"]) if row["close"] else None
            records.append(SignalRecord(
                date=dt.date.fromisoformat(row["date"]),
                ticker=row["ticker"],
                compound=float(row["compound"]),
                action=row["action"],
                close=close,
            ))
    return records


def _svg_scatter(records, width=800, height=360, pad=50):
    """Price line with green Buy / red Sell markers, hand-rolled SVG."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    priced = sorted((r for r in records if r.close is not None), key=lambda r: r.date)
    if priced:
        dates = [r.date.toordinal() for r in priced]
        closes = [r.close for r in priced]
        x0, x1 = min(dates), max(dates)
        y0, y1 = min(closes), max(closes)
        xspan = (x1 - x0) or 1
        yspan = (y1 - y0) or 1.0

        def sx(d):
            return pad + (d - x0) / xspan * (width - 2 * pad)

        def sy(c):
            return height - pad - (c - y0) / yspan * (height - 2 * pad)

        points = " ".join(f"{sx(d):.2f},{sy(c):.2f}" for d, c in zip(dates, closes))
        parts.append(f'<polyline points="{points}" fill="none" stroke="steelblue" stroke-width="1.5"/>')
        for r in priced:
            if r.action == BUY:
                color = "green"
            elif r.action == SELL:
                color = "red"
            else:
                continue
            parts.append(
                f'<circle cx="{sx(r.date.toordinal()):.2f}" cy="{sy(r.close):.2f}"'
                f' r="4" fill="{color}"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts)


def emit_chart_data(records, out_dir) -> list:
    """Write signals.csv plus one <ticker>_signals.svg per ticker.

    Returns the list of paths written.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = [out_dir / "signals.csv"]
    write_signals_csv(records, written[0])
    tickers = sorted({r.ticker for r in records})
    for ticker in tickers:
        svg_path = out_dir / f"{ticker}_signals.svg"
        svg = _svg_scatter([r for r in records if r.ticker == ticker])
        svg_path.write_text(svg)
        written.append(svg_path)
    return written
