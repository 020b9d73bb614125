# src/rif_kit/cli/main.py

"""``rif-kit`` command line.

Subcommands: label, train, evaluate, scatter, report. Exit codes: 0 success,
2 usage, 3 configuration error, 4 data error, 5 runtime failure.
"""

import argparse
import dataclasses
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from rif_kit.env import (
    BPS,
    EnvConfig,
    RewardMode,
    StepRecord,
    TradingEnv,
    daily_returns,
    read_step_log,
    write_step_log,
)
from rif_kit.errors import ConfigError, DataError, RifKitError
from rif_kit.evaluation import (
    Agent,
    RollingWindow,
    StrategyRun,
    build_report,
    check_scatter_structure,
    derive_seed,
    evaluate_strategies,
    extract_trades,
    grid_search,
    make_day_windows,
    make_windows,
    provenance_header,
    reward_scatter,
    write_report,
    write_scatter,
)
from rif_kit.labeling import extract_positions, label_day
from rif_kit.market_data import TradingDay, generate_synthetic, load_days
from rif_kit.neural import Checkpoint, load_checkpoint, save_checkpoint
from rif_kit.observability import LoggingMetricsHook
from rif_kit.ppo import train, write_history

from .config import RunConfig, apply_overrides, config_hash, load_run_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 3
EXIT_DATA = 4
EXIT_RUNTIME = 5


class Run:
    """Resolved configuration plus the provenance stamped on every output."""

    def __init__(self, config: RunConfig, metrics: LoggingMetricsHook) -> None:
        self.config = config
        self.hash = config_hash(config)
        self.metrics = metrics
        self.out = Path(config.output_dir)
        self._days: list[TradingDay] | None = None

    @property
    def header(self) -> str:
        return provenance_header(self.hash, self.config.seed)

    @property
    def days(self) -> list[TradingDay]:
        if self._days is None:
            data = self.config.data
            session = self.config.session.to_session()
            if data.synthetic is not None:
                self._days = generate_synthetic(data.synthetic.to_spec(), session)
            else:
                assert data.path is not None
                self._days = load_days(
                    data.path, session, data.max_missing_bars, metrics_hook=self.metrics
                )
        return self._days

    def windows(self, only: int | None = None) -> list[RollingWindow]:
        w = self.config.windows
        if w.mode == "months":
            windows = make_windows(self.days, w.train, w.validation, w.test)
        else:
            windows = make_day_windows(self.days, w.train, w.validation, w.test)
        if only is None:
            return windows
        if not 0 <= only < len(windows):
            raise ConfigError(f"--window {only} out of range: {len(windows)} windows")
        return [windows[only]]

    def window_dir(self, window: RollingWindow) -> Path:
        return self.out / f"window_{window.index:02d}"


def _bps_label(bps: float) -> str:
    return f"theta_{bps:g}bps"


def cmd_label(run: Run, args: argparse.Namespace) -> int:
    session = run.config.session.to_session()
    thetas = args.theta_bps or [run.config.env.theta_bps]
    span = slice(session.first_decision_index, session.forced_exit_index + 1)
    summary = []
    for theta in thetas:
        directory = run.out / "labels" / _bps_label(theta)
        directory.mkdir(parents=True, exist_ok=True)
        positions = 0
        for day in run.days:
            series = label_day(day, theta * BPS, session, args.terminal_label)
            closes = day.closes[span]
            positions += len(extract_positions(closes, series.labels, theta * BPS))
            frame = pd.DataFrame(
                {
                    "timestamp": [
                        b.timestamp.strftime("%Y-%m-%dT%H:%M") for b in day.bars[span]
                    ],
                    "close": closes,
                    "label": series.labels.astype(int),
                }
            )
            _write_csv(frame, directory / f"{day.date.isoformat()}.csv", run.header)
        n_days = len(run.days)
        summary.append({"theta_bps": theta, "days": n_days, "positions": positions})
        logger.info("theta=%g bps: %d positions over %d days", theta, positions, n_days)
    _write_csv(pd.DataFrame(summary), run.out / "labels" / "summary.csv", run.header)
    return EXIT_OK


def _train_window(run: Run, window: RollingWindow, mode: RewardMode) -> Path:
    config = run.config
    env_config = config.env_config(mode)
    ppo_config = config.ppo.to_config()
    seed = derive_seed(config.seed, "window", window.index, mode)
    theta, phi = config.env.theta_bps, config.env.phi_bps

    if config.grid.enabled:
        search = grid_search(
            window.train,
            window.validation,
            env_config,
            ppo_config,
            config.grid.theta_bps,
            config.grid.phi_bps,
            seed=seed,
            jobs=config.jobs,
            metrics_hook=run.metrics,
        )
        assert search.best.result is not None
        result, seed = search.best.result, search.best.seed
        theta, phi = search.best.cell.theta_bps, search.best.cell.phi_bps
    else:
        result = train(
            window.train, window.validation, env_config, ppo_config, seed, run.metrics
        )

    directory = run.window_dir(window) / mode
    write_history(result.history, directory / "history.csv", run.header)
    bounds = result.env_config.indicators.bounds
    checkpoint = Checkpoint(
        params=result.params,
        seed=seed,
        config_hash=run.hash,
        metadata={
            "reward_mode": mode,
            "window": window.index,
            "theta_bps": theta,
            "phi_bps": phi,
            "best_validation_return": result.best_validation_return,
            "stopped_early": result.stopped_early,
            "iterations": len(result.history),
            "indicator_bounds": {k: list(v) for k, v in sorted(bounds.items())},
        },
    )
    return save_checkpoint(checkpoint, directory / "checkpoint.json")


def cmd_train(run: Run, args: argparse.Namespace) -> int:
    for window in run.windows(args.window):
        logger.info("Training %s", window.describe())
        for mode in run.config.reward_modes:
            _train_window(run, window, mode)
    return EXIT_OK


def _agent_from_checkpoint(run: Run, path: Path) -> Agent:
    checkpoint = load_checkpoint(path)
    if checkpoint.config_hash != run.hash:
        logger.warning(
            "Checkpoint %s was trained under config %s, evaluating under %s",
            path,
            checkpoint.config_hash,
            run.hash,
        )
    meta = checkpoint.metadata
    base: EnvConfig = run.config.env_config(meta["reward_mode"])
    bounds = {
        k: (float(lo), float(hi)) for k, (lo, hi) in meta["indicator_bounds"].items()
    }
    env_config = dataclasses.replace(
        base,
        expert_commission=float(meta["theta_bps"]) * BPS,
        indicators=dataclasses.replace(base.indicators, bounds=bounds),
    )
    return Agent(
        name=meta["reward_mode"], params=checkpoint.params, env_config=env_config
    )


def _evaluate_window(run: Run, window: RollingWindow, root: Path) -> list[StrategyRun]:
    agents = [
        _agent_from_checkpoint(
            run, root / f"window_{window.index:02d}" / mode / "checkpoint.json"
        )
        for mode in run.config.reward_modes
    ]
    runs = evaluate_strategies(
        window.test,
        agents,
        commission=run.config.env.phi_bps * BPS,
        base=run.config.env.return_base,
    )
    directory = run.window_dir(window) / "evaluation"
    for strategy in runs:
        write_step_log(
            strategy.records, directory / f"{strategy.name}_steps.csv", run.header
        )
    report = build_report(runs, run.config.data.asset_name, run.hash, run.config.seed)
    write_report(report, directory, metrics_hook=run.metrics)
    return runs


def cmd_evaluate(run: Run, args: argparse.Namespace) -> int:
    root = Path(args.checkpoint) if args.checkpoint else run.out
    for window in run.windows(args.window):
        _evaluate_window(run, window, root)
    return EXIT_OK


def cmd_report(run: Run, args: argparse.Namespace) -> int:
    """Aggregate per-window step logs into one report over every test day."""
    root = Path(args.checkpoint) if args.checkpoint else run.out
    by_date = {d.date: d for d in run.days}
    collected: dict[str, list[StepRecord]] = {}
    for window in run.windows(args.window):
        directory = root / f"window_{window.index:02d}" / "evaluation"
        logs = sorted(directory.glob("*_steps.csv"))
        if not logs:
            raise DataError(f"no step logs in {directory}; run 'evaluate' first")
        for path in logs:
            name = path.name.removesuffix("_steps.csv")
            collected.setdefault(name, []).extend(read_step_log(path))

    session = run.config.session.to_session()
    runs = []
    for name, records in collected.items():
        dates = sorted({r.date for r in records})
        missing = [d for d in dates if d not in by_date]
        if missing:
            raise DataError(f"step log dates not in dataset: {missing[:3]}")
        days = [by_date[d] for d in dates]
        runs.append(
            StrategyRun(
                name=name,
                records=records,
                daily=daily_returns(records, days, session, run.config.env.return_base),
                trades=extract_trades(records),
            )
        )
    report = build_report(runs, run.config.data.asset_name, run.hash, run.config.seed)
    write_report(report, run.out / "report", metrics_hook=run.metrics)
    return EXIT_OK


def cmd_scatter(run: Run, args: argparse.Namespace) -> int:  # noqa: ARG001
    env = TradingEnv(run.config.env_config("RIF"))
    points = reward_scatter(env, run.days, run.config.scatter_steps, run.config.seed)
    write_scatter(points, run.out / "scatter.csv", run.header)
    check = check_scatter_structure(points)
    logger.info(
        "Scatter: %d points, %d diagonal and %d horizontal violations, cells %s",
        check.points,
        check.diagonal_violations,
        check.horizontal_violations,
        check.cell_counts,
    )
    return EXIT_OK if check.ok else EXIT_RUNTIME


def _write_csv(frame: pd.DataFrame, path: Path, header: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(f"# {header}\n")
        frame.to_csv(f, index=False, lineterminator="\n")


COMMANDS = {
    "label": cmd_label,
    "train": cmd_train,
    "evaluate": cmd_evaluate,
    "scatter": cmd_scatter,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="run configuration (YAML)")
    common.add_argument("--seed", type=int, help="master seed override")
    common.add_argument("--out", help="output directory override")
    common.add_argument("--jobs", type=int, help="worker processes for grid search")
    common.add_argument(
        "--log-level",
        default="info",
        choices=["debug", "info", "warning", "error"],
    )
    common.add_argument("--phi-bps", type=float, help="trading commission in bps")

    parser = argparse.ArgumentParser(
        prog="rif-kit",
        description="Imitation-augmented rewards for intraday RL trading",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    label = sub.add_parser("label", parents=[common], help="write oracle labels")
    label.add_argument(
        "--theta-bps", type=float, nargs="+", help="expert commission(s) in bps"
    )
    label.add_argument("--terminal-label", type=int, choices=[0, 1], default=0)

    for name, help_text in (
        ("train", "train RIF/RF agents per window"),
        ("evaluate", "backtest trained agents on test days"),
        ("report", "aggregate evaluated windows"),
        ("scatter", "random-policy reward scatter"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--theta-bps", type=float, help="expert commission in bps")
        p.add_argument("--window", type=int, help="restrict to one window index")
        p.add_argument("--checkpoint", help="run directory holding checkpoints")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    metrics = LoggingMetricsHook()
    try:
        config = load_run_config(args.config)
        theta = args.theta_bps if not isinstance(args.theta_bps, list) else None
        config = apply_overrides(
            config,
            seed=args.seed,
            theta_bps=theta,
            phi_bps=args.phi_bps,
            output_dir=args.out,
            jobs=args.jobs,
        )
        run = Run(config, metrics)
        logger.info(
            "rif-kit %s, config %s, seed %d", args.command, run.hash, config.seed
        )
        code = COMMANDS[args.command](run, args)
    except ConfigError as exc:
        logger.error("Configuration error: %s", exc)
        return EXIT_CONFIG
    except DataError as exc:
        logger.error("Data error: %s", exc)
        return EXIT_DATA
    except (RifKitError, RuntimeError, ValueError) as exc:
        logger.error("Run failed: %s", exc)
        return EXIT_RUNTIME
    logger.info("Done: %s", metrics.totals)
    return code


if __name__ == "__main__":
    sys.exit(main())
