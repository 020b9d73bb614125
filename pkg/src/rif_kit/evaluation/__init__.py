# src/rif_kit/evaluation/__init__.py

"""Rolling-window experiments, grid search and backtest statistics.

Example:
    >>> from rif_kit.evaluation import return_statistics
    >>>
    >>> round(return_statistics([0.10, -0.10]).max_drawdown, 6)
    10.0
"""

from .diagnostics import (
    SCATTER_COLUMNS,
    ScatterCheck,
    ScatterPoint,
    check_scatter_structure,
    label_agreement,
    reward_scatter,
    scatter_points,
    write_scatter,
)
from .grid import (
    DEFAULT_GRID_BPS,
    CellResult,
    GridCell,
    GridSearchResult,
    derive_seed,
    grid_search,
    select_best,
)
from .report import (
    RETURN_COLUMNS,
    TRADE_COLUMNS,
    Agent,
    BacktestReport,
    StrategyRun,
    build_report,
    evaluate_strategies,
    provenance_header,
    run_strategy,
    write_report,
)
from .returns import TRADING_DAYS_PER_YEAR, ReturnStats, max_drawdown, return_statistics
from .trades import TradeRecord, TradeStats, extract_trades, trade_statistics
from .windows import RollingWindow, make_day_windows, make_windows

__all__ = [
    # Windows
    "RollingWindow",
    "make_windows",
    "make_day_windows",
    # Grid search
    "GridCell",
    "CellResult",
    "GridSearchResult",
    "DEFAULT_GRID_BPS",
    "derive_seed",
    "grid_search",
    "select_best",
    # Trades
    "TradeRecord",
    "TradeStats",
    "extract_trades",
    "trade_statistics",
    # Returns
    "ReturnStats",
    "TRADING_DAYS_PER_YEAR",
    "max_drawdown",
    "return_statistics",
    # Diagnostics
    "ScatterPoint",
    "ScatterCheck",
    "SCATTER_COLUMNS",
    "scatter_points",
    "reward_scatter",
    "check_scatter_structure",
    "write_scatter",
    "label_agreement",
    # Reports
    "Agent",
    "StrategyRun",
    "BacktestReport",
    "TRADE_COLUMNS",
    "RETURN_COLUMNS",
    "run_strategy",
    "evaluate_strategies",
    "build_report",
    "provenance_header",
    "write_report",
]
