from pathlib import Path

import pytest

from rif_kit.errors import DataError
from rif_kit.market_data import parse_ohlcv, read_ohlcv, serialize_ohlcv
from rif_kit.observability import LoggingMetricsHook, names

HEADER = "timestamp,open,high,low,close,volume\n"


def _csv(*rows: str) -> bytes:
    return (HEADER + "".join(r + "\n" for r in rows)).encode("utf-8")


class TestParseOhlcv:
    def test_parses_valid_rows(self) -> None:
        bars = parse_ohlcv(
            _csv(
                "2024-01-02T09:30,100.0,100.5,99.5,100.2,1200",
                "2024-01-02T09:31,100.2,100.4,100.0,100.1,800",
            )
        )
        assert len(bars) == 2
        assert bars[0].close == 100.2
        assert bars[1].volume == 800
        assert bars[1].timestamp.minute == 31

    def test_header_only_gives_no_bars(self) -> None:
        assert parse_ohlcv(HEADER.encode("utf-8")) == []

    def test_empty_input_raises(self) -> None:
        with pytest.raises(DataError, match="input is empty"):
            parse_ohlcv(b"")

    def test_wrong_header_raises(self) -> None:
        with pytest.raises(DataError, match="expected header"):
            parse_ohlcv(b"time,o,h,l,c,v\n2024-01-02T09:30,1,1,1,1,1\n")

    def test_malformed_price_reports_row(self) -> None:
        with pytest.raises(DataError, match="row 2") as exc_info:
            parse_ohlcv(
                _csv(
                    "2024-01-02T09:30,100.0,100.5,99.5,100.2,1200",
                    "2024-01-02T09:31,abc,100.4,100.0,100.1,800",
                )
            )
        assert exc_info.value.row == 2

    def test_non_finite_price_raises(self) -> None:
        with pytest.raises(DataError, match="non-finite"):
            parse_ohlcv(_csv("2024-01-02T09:30,nan,100.5,99.5,100.2,1200"))

    def test_inconsistent_high_raises(self) -> None:
        with pytest.raises(DataError, match="high must be"):
            parse_ohlcv(_csv("2024-01-02T09:30,100.0,100.1,99.5,100.2,1200"))

    def test_non_increasing_timestamps_raise(self) -> None:
        with pytest.raises(DataError, match="strictly increasing"):
            parse_ohlcv(
                _csv(
                    "2024-01-02T09:31,100.0,100.5,99.5,100.2,1200",
                    "2024-01-02T09:30,100.2,100.4,100.0,100.1,800",
                )
            )

    def test_malformed_timestamp_raises(self) -> None:
        with pytest.raises(DataError, match="malformed timestamp"):
            parse_ohlcv(_csv("02/01/2024 09:30,100.0,100.5,99.5,100.2,1200"))

    def test_records_metrics(self) -> None:
        hook = LoggingMetricsHook()
        parse_ohlcv(_csv("2024-01-02T09:30,100.0,100.5,99.5,100.2,1200"), metrics_hook=hook)
        assert hook.totals[names.MARKET_DATA_BARS_PARSED] == 1


class TestReadOhlcv:
    def test_missing_file_raises(self, tmp_path: Path) -> None:
        with pytest.raises(DataError, match="not found"):
            read_ohlcv(tmp_path / "missing.csv")

    def test_serialized_bars_parse_back(self, tmp_path: Path) -> None:
        original = parse_ohlcv(
            _csv(
                "2024-01-02T09:30,100.0,100.5,99.5,100.2,1200",
                "2024-01-02T09:31,100.2,100.4,100.0,100.1,800",
            )
        )
        path = tmp_path / "bars.csv"
        path.write_bytes(serialize_ohlcv(original))
        assert read_ohlcv(path) == original
