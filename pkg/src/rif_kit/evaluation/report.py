# src/rif_kit/evaluation/report.py

import json
import logging
from collections.abc import Sequence
from dataclasses import asdict, dataclass, replace
from pathlib import Path

import pandas as pd

from rif_kit.env import (
    BuyAndHoldPolicy,
    EnvConfig,
    GreedyPolicy,
    Policy,
    ReturnBase,
    StepRecord,
    TradingEnv,
    daily_returns,
    run_episodes,
)
from rif_kit.market_data import TradingDay
from rif_kit.neural import NetParams
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .returns import ReturnStats, return_statistics
from .trades import TradeRecord, TradeStats, extract_trades, trade_statistics

logger = logging.getLogger(__name__)

TRADE_COLUMNS = (
    "asset",
    "strategy",
    "num_trades",
    "winrate",
    "mean_positive_return",
    "mean_negative_return",
    "avg_holding_minutes",
    "no_winners",
    "no_losers",
)
RETURN_COLUMNS = (
    "asset",
    "strategy",
    "mean_return",
    "volatility",
    "max_drawdown",
    "sharpe",
)


@dataclass(frozen=True)
class Agent:
    """A trained policy with the environment settings it was trained under."""

    name: str
    params: NetParams
    env_config: EnvConfig


@dataclass(frozen=True)
class StrategyRun:
    name: str
    records: list[StepRecord]
    daily: pd.Series
    trades: list[TradeRecord]


def run_strategy(
    name: str,
    policy: Policy,
    env_config: EnvConfig,
    days: Sequence[TradingDay],
    base: ReturnBase = "decision_open",
) -> StrategyRun:
    records = run_episodes(TradingEnv(env_config), days, policy)
    return StrategyRun(
        name=name,
        records=records,
        daily=daily_returns(records, days, env_config.session, base),
        trades=extract_trades(records),
    )


def evaluate_strategies(
    test_days: Sequence[TradingDay],
    agents: Sequence[Agent],
    commission: float,
    base: ReturnBase = "decision_open",
    include_buy_and_hold: bool = True,
) -> list[StrategyRun]:
    """Greedy agents, then buy-and-hold, all paying ``commission``."""
    if not test_days:
        raise ValueError("no test days")
    runs = []
    for agent in agents:
        config = _at_commission(agent.env_config, commission)
        policy = GreedyPolicy(agent.params)
        runs.append(run_strategy(agent.name, policy, config, test_days, base))
    if include_buy_and_hold:
        reference = agents[0].env_config if agents else EnvConfig()
        runs.append(
            run_strategy(
                "buy_and_hold",
                BuyAndHoldPolicy(),
                _at_commission(reference, commission),
                test_days,
                base,
            )
        )
    return runs


def _at_commission(config: EnvConfig, commission: float) -> EnvConfig:
    return replace(config, trading_commission=commission)


@dataclass(frozen=True)
class BacktestReport:
    asset: str
    config_hash: str
    seed: int
    trade_stats: dict[str, TradeStats]
    return_stats: dict[str, ReturnStats]

    def trade_table(self) -> pd.DataFrame:
        rows = [
            {"asset": self.asset, "strategy": name, **asdict(stats)}
            for name, stats in self.trade_stats.items()
        ]
        return pd.DataFrame(rows, columns=list(TRADE_COLUMNS))

    def return_table(self) -> pd.DataFrame:
        rows = [
            {"asset": self.asset, "strategy": name, **asdict(stats)}
            for name, stats in self.return_stats.items()
        ]
        return pd.DataFrame(rows, columns=list(RETURN_COLUMNS))

    def summary(self) -> dict:
        return {
            "asset": self.asset,
            "config_hash": self.config_hash,
            "seed": self.seed,
            "trades": {name: asdict(s) for name, s in self.trade_stats.items()},
            "returns": {name: asdict(s) for name, s in self.return_stats.items()},
        }


def build_report(
    runs: Sequence[StrategyRun], asset: str, config_hash: str, seed: int
) -> BacktestReport:
    return BacktestReport(
        asset=asset,
        config_hash=config_hash,
        seed=seed,
        trade_stats={run.name: trade_statistics(run.trades) for run in runs},
        return_stats={run.name: return_statistics(run.daily) for run in runs},
    )


def provenance_header(config_hash: str, seed: int) -> str:
    return f"config_hash={config_hash} seed={seed}"


def _write_table(frame: pd.DataFrame, path: Path, header: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(f"# {header}\n")
        frame.to_csv(f, index=False, lineterminator="\n")


def write_report(
    report: BacktestReport,
    out_dir: str | Path,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> list[Path]:
    """Writes ``trades.csv``, ``returns.csv`` and ``summary.json``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    header = provenance_header(report.config_hash, report.seed)

    trades_path = out_dir / "trades.csv"
    returns_path = out_dir / "returns.csv"
    summary_path = out_dir / "summary.json"
    _write_table(report.trade_table(), trades_path, header)
    _write_table(report.return_table(), returns_path, header)
    summary_path.write_text(
        json.dumps(report.summary(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )

    paths = [trades_path, returns_path, summary_path]
    metrics_hook.increment(names.REPORT_FILES_WRITTEN, len(paths))
    logger.info("Wrote report for %s to %s", report.asset, out_dir)
    return paths
