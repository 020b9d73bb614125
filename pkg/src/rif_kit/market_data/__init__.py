# src/rif_kit/market_data/__init__.py

"""Minute-bar ingestion, session segmentation and synthetic series.

Example:
    >>> from rif_kit.market_data import SyntheticSpec, generate_synthetic
    >>>
    >>> days = generate_synthetic(SyntheticSpec(kind="random-walk", days=5, seed=7))
    >>> len(days[0].bars)
    450
"""

from .base import BarParser
from .config import GeneratorKind, SessionWindow, SyntheticSpec
from .csv_parser import CsvBarParser, parse_ohlcv, read_ohlcv, serialize_ohlcv
from .models import MinuteBar, TradingDay
from .sessions import complete_days, load_days, segment_days
from .synthetic import generate_synthetic

__all__ = [
    # Types
    "MinuteBar",
    "TradingDay",
    "SessionWindow",
    "SyntheticSpec",
    "GeneratorKind",
    # Parsing
    "BarParser",
    "CsvBarParser",
    "parse_ohlcv",
    "read_ohlcv",
    "serialize_ohlcv",
    # Sessions
    "segment_days",
    "complete_days",
    "load_days",
    # Synthetic
    "generate_synthetic",
]
