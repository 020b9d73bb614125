# src/rif_kit/market_data/csv_parser.py

import io
import logging
import math
from datetime import datetime
from pathlib import Path
from time import monotonic
from typing import BinaryIO

import pandas as pd

from rif_kit.errors import DataError
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .base import BarParser
from .models import MinuteBar

logger = logging.getLogger(__name__)

COLUMNS = ("timestamp", "open", "high", "low", "close", "volume")
TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M"


class CsvBarParser(BarParser):
    """
    Strict OHLCV CSV parser.
    - Header must be exactly ``timestamp,open,high,low,close,volume``
    - ISO-8601 minute timestamps, zone-naive
    - Every malformed row raises ``DataError`` carrying its 1-based row number
    """

    def __init__(self, metrics_hook: MetricsHook = NoOpMetricsHook()) -> None:
        self.metrics_hook = metrics_hook

    def parse(self, source: BinaryIO) -> list[MinuteBar]:
        start = monotonic()
        try:
            frame = pd.read_csv(
                source,
                dtype=str,
                keep_default_na=False,
                encoding="utf-8",
            )
        except pd.errors.EmptyDataError:
            raise DataError("input is empty")
        except pd.errors.ParserError as exc:
            raise DataError(f"malformed CSV: {exc}")

        if tuple(frame.columns) != COLUMNS:
            raise DataError(
                f"expected header {','.join(COLUMNS)}, got {','.join(frame.columns)}"
            )

        bars: list[MinuteBar] = []
        previous: datetime | None = None
        for row, record in enumerate(frame.itertuples(index=False), start=1):
            bar = _parse_row(row, record)
            if previous is not None and bar.timestamp <= previous:
                raise DataError("timestamps must be strictly increasing", row=row)
            previous = bar.timestamp
            bars.append(bar)

        elapsed_ms = 1000 * (monotonic() - start)
        self.metrics_hook.record_latency(names.MARKET_DATA_PARSE_DURATION, elapsed_ms)
        self.metrics_hook.increment(names.MARKET_DATA_BARS_PARSED, len(bars))
        logger.info("Parsed %d bars in %.0fms", len(bars), elapsed_ms)
        return bars


def _parse_row(row: int, record: tuple) -> MinuteBar:
    raw_ts, raw_open, raw_high, raw_low, raw_close, raw_volume = record
    try:
        timestamp = datetime.strptime(raw_ts, TIMESTAMP_FORMAT)
    except ValueError:
        raise DataError(f"malformed timestamp {raw_ts!r}", row=row)

    prices = []
    for field, raw in zip(COLUMNS[1:5], (raw_open, raw_high, raw_low, raw_close)):
        try:
            value = float(raw)
        except ValueError:
            raise DataError(f"malformed {field} {raw!r}", row=row)
        if not math.isfinite(value):
            raise DataError(f"non-finite {field} {raw!r}", row=row)
        prices.append(value)

    try:
        volume = int(raw_volume)
    except ValueError:
        raise DataError(f"malformed volume {raw_volume!r}", row=row)

    try:
        return MinuteBar(timestamp, *prices, volume=volume)
    except ValueError as exc:
        raise DataError(str(exc), row=row)


def parse_ohlcv(
    source: BinaryIO | bytes,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> list[MinuteBar]:
    if isinstance(source, bytes):
        source = io.BytesIO(source)
    return CsvBarParser(metrics_hook=metrics_hook).parse(source)


def read_ohlcv(
    path: str | Path, metrics_hook: MetricsHook = NoOpMetricsHook()
) -> list[MinuteBar]:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"data file not found: {path}")
    with open(path, "rb") as f:
        return parse_ohlcv(f, metrics_hook=metrics_hook)


def serialize_ohlcv(bars: list[MinuteBar]) -> bytes:
    """Normalised CSV: shortest round-trip floats, LF line endings."""
    lines = [",".join(COLUMNS)]
    for b in bars:
        lines.append(
            f"{b.timestamp.strftime(TIMESTAMP_FORMAT)},"
            f"{b.open!r},{b.high!r},{b.low!r},{b.close!r},{b.volume}"
        )
    return ("\n".join(lines) + "\n").encode("utf-8")
