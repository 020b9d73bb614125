# src/rif_kit/evaluation/grid.py

import dataclasses
import hashlib
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from time import monotonic

from rif_kit.env import BPS, EnvConfig
from rif_kit.errors import RifKitError, TrainingError
from rif_kit.market_data import TradingDay
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook
from rif_kit.ppo import PpoConfig, TrainResult, train

logger = logging.getLogger(__name__)

DEFAULT_GRID_BPS: tuple[float, ...] = (0.5, 1, 2, 3, 4, 5, 10, 20)


def derive_seed(master: int, *parts: object) -> int:
    """Stable 63-bit seed from a master seed and any labels."""
    key = "/".join(str(p) for p in (master, *parts)).encode("utf-8")
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big") >> 1


@dataclass(frozen=True)
class GridCell:
    theta_bps: float
    phi_bps: float


@dataclass(frozen=True)
class CellResult:
    cell: GridCell
    seed: int
    validation_return: float
    result: TrainResult | None = None
    error: str | None = None

    @property
    def failed(self) -> bool:
        return self.error is not None


@dataclass(frozen=True)
class GridSearchResult:
    best: CellResult
    cells: list[CellResult]


@dataclass(frozen=True)
class _CellJob:
    cell: GridCell
    seed: int
    train_days: tuple[TradingDay, ...]
    validation_days: tuple[TradingDay, ...]
    env_config: EnvConfig
    ppo_config: PpoConfig


def _run_cell(job: _CellJob) -> CellResult:
    config = dataclasses.replace(
        job.env_config,
        expert_commission=job.cell.theta_bps * BPS,
        trading_commission=job.cell.phi_bps * BPS,
    )
    try:
        result = train(
            job.train_days, job.validation_days, config, job.ppo_config, job.seed
        )
    except (RifKitError, ValueError, FloatingPointError) as exc:
        logger.warning("Grid cell %s failed: %s", job.cell, exc)
        return CellResult(job.cell, job.seed, -math.inf, error=str(exc))
    return CellResult(job.cell, job.seed, result.best_validation_return, result=result)


def select_best(cells: Sequence[CellResult]) -> CellResult:
    """Highest validation return; ties go to smaller phi, then smaller theta."""
    usable = [c for c in cells if not c.failed]
    if not usable:
        raise TrainingError("all grid cells failed training")
    return min(
        usable,
        key=lambda c: (-c.validation_return, c.cell.phi_bps, c.cell.theta_bps),
    )


def grid_search(
    train_days: Sequence[TradingDay],
    validation_days: Sequence[TradingDay],
    env_config: EnvConfig = EnvConfig(),
    ppo_config: PpoConfig = PpoConfig(),
    theta_bps: Sequence[float] = DEFAULT_GRID_BPS,
    phi_bps: Sequence[float] = DEFAULT_GRID_BPS,
    seed: int = 0,
    jobs: int = 1,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> GridSearchResult:
    """Train one agent per (theta, phi) cell and pick the best on validation.

    Cells run on a process pool when ``jobs > 1``; results are reduced in
    cell order so the outcome does not depend on ``jobs``.
    """
    if not theta_bps or not phi_bps:
        raise ValueError("grids must not be empty")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    cells = [GridCell(t, p) for t in theta_bps for p in phi_bps]
    job_list = [
        _CellJob(
            cell=cell,
            seed=derive_seed(
                seed, env_config.reward_mode, cell.theta_bps, cell.phi_bps
            ),
            train_days=tuple(train_days),
            validation_days=tuple(validation_days),
            env_config=env_config,
            ppo_config=ppo_config,
        )
        for cell in cells
    ]
    logger.info("Grid search over %d cells with %d job(s)", len(cells), jobs)

    start = monotonic()
    if jobs == 1:
        results = [_run_cell(job) for job in job_list]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, job_list))
    elapsed_ms = 1000 * (monotonic() - start)

    failures = sum(r.failed for r in results)
    metrics_hook.record_latency(names.GRID_CELL_DURATION, elapsed_ms / len(results))
    metrics_hook.increment(names.GRID_CELLS_TOTAL, len(results))
    metrics_hook.increment(names.GRID_CELL_ERRORS_TOTAL, failures)

    best = select_best(results)
    logger.info(
        "Best cell theta=%s bps phi=%s bps: validation return %.6f (%d failed)",
        best.cell.theta_bps,
        best.cell.phi_bps,
        best.validation_return,
        failures,
    )
    return GridSearchResult(best=best, cells=results)
