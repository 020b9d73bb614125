# src/rif_kit/labeling/__init__.py

"""Oracle (expert) labels for long/flat intraday trading.

Example:
    >>> from rif_kit.labeling import cumulative_return, oracle_labels
    >>>
    >>> prices = [100.0, 101.0, 100.5, 102.0]
    >>> series = oracle_labels(prices, commission=0.0003)
    >>> cumulative_return(prices, series.labels, 0.0003) > 0
    True
"""

from .brute_force import MAX_BRUTE_FORCE_LENGTH, brute_force_labels
from .models import DpTables, LabelSeries, Position
from .oracle import build_dp_tables, label_day, label_days, oracle_labels
from .positions import cumulative_return, extract_positions, position_return

__all__ = [
    # Types
    "LabelSeries",
    "Position",
    "DpTables",
    # Return math
    "position_return",
    "extract_positions",
    "cumulative_return",
    # Labelers
    "build_dp_tables",
    "oracle_labels",
    "label_day",
    "label_days",
    "brute_force_labels",
    "MAX_BRUTE_FORCE_LENGTH",
]
