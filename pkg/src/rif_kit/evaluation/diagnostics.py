# src/rif_kit/evaluation/diagnostics.py

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from rif_kit.env import RandomPolicy, StepRecord, TradingEnv, run_episode
from rif_kit.market_data import TradingDay

logger = logging.getLogger(__name__)

SCATTER_COLUMNS = ("r_rf", "r_rif", "y", "a")


@dataclass(frozen=True)
class ScatterPoint:
    r_rf: float
    r_rif: float
    label: int
    action: int
    previous_label: int = 0
    previous_action: int = 0
    commission: float = 0.0


@dataclass(frozen=True)
class ScatterCheck:
    """Violations of the two structural properties of the reward scatter.

    ``diagonal_violations``: points with y = 0 off the line r_rif = r_rf.
    ``horizontal_violations``: points with a = y and a_prev = y_prev whose
    r_rif is not exactly minus the commission paid.
    """

    points: int
    diagonal_violations: int
    horizontal_violations: int
    cell_counts: dict[tuple[int, int], int]

    @property
    def ok(self) -> bool:
        return self.diagonal_violations == 0 and self.horizontal_violations == 0


def scatter_points(records: Sequence[StepRecord]) -> list[ScatterPoint]:
    points: list[ScatterPoint] = []
    previous: StepRecord | None = None
    for r in records:
        same_day = previous is not None and previous.date == r.date
        points.append(
            ScatterPoint(
                r_rf=r.r_rf,
                r_rif=r.r_rif,
                label=r.label,
                action=r.action,
                previous_label=previous.label if same_day and previous else 0,
                previous_action=previous.action if same_day and previous else 0,
                commission=r.commission,
            )
        )
        previous = r
    return points


def reward_scatter(
    env: TradingEnv,
    days: Sequence[TradingDay],
    n_steps: int = 100_000,
    seed: int = 0,
) -> list[ScatterPoint]:
    """Both rewards under a uniform random policy, cycling ``days`` until
    ``n_steps`` decisions are logged."""
    if not days:
        raise ValueError("no days to sample")
    if n_steps <= 0:
        raise ValueError("n_steps must be > 0")
    policy = RandomPolicy(np.random.default_rng(seed))
    records: list[StepRecord] = []
    i = 0
    while len(records) < n_steps:
        records.extend(run_episode(env, days[i % len(days)], policy))
        i += 1
    logger.info("Sampled %d random-policy steps over %d episodes", n_steps, i)
    return scatter_points(records[:n_steps])


def check_scatter_structure(points: Sequence[ScatterPoint]) -> ScatterCheck:
    diagonal = horizontal = 0
    for p in points:
        if p.label == 0 and p.r_rif != p.r_rf:
            diagonal += 1
        matched = p.action == p.label and p.previous_action == p.previous_label
        if p.label == 1 and matched and p.r_rif != -p.commission:
            horizontal += 1
    cells = Counter((p.label, p.action) for p in points)
    return ScatterCheck(
        points=len(points),
        diagonal_violations=diagonal,
        horizontal_violations=horizontal,
        cell_counts=dict(sorted(cells.items())),
    )


def write_scatter(
    points: Sequence[ScatterPoint], path: str | Path, header: str | None = None
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(
        {
            "r_rf": [p.r_rf for p in points],
            "r_rif": [p.r_rif for p in points],
            "y": [p.label for p in points],
            "a": [p.action for p in points],
        },
        columns=list(SCATTER_COLUMNS),
    )
    with open(path, "w", encoding="utf-8", newline="") as f:
        if header is not None:
            f.write(f"# {header}\n")
        frame.to_csv(f, index=False, lineterminator="\n")
    return path


def label_agreement(records: Sequence[StepRecord]) -> float:
    """Share of decision minutes where the applied action equals the label."""
    if not records:
        raise ValueError("no records")
    return float(np.mean([r.action == r.label for r in records]))
