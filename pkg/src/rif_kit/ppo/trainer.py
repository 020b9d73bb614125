# src/rif_kit/ppo/trainer.py

import dataclasses
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path
from time import monotonic

import numpy as np
import pandas as pd

from rif_kit.env import EnvConfig, GreedyPolicy, TradingEnv, daily_returns, run_episodes
from rif_kit.errors import TrainingError
from rif_kit.indicators import fit_bounds
from rif_kit.market_data import TradingDay
from rif_kit.neural import AdamState, NetParams, init_params
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .advantages import compute_advantages
from .config import PpoConfig
from .rollout import EpisodeStream, collect_rollout
from .update import UpdateDiagnostics, ppo_update

logger = logging.getLogger(__name__)


class EarlyStopping:
    """Stops after ``patience`` consecutive evaluations without a strict
    improvement on the best metric so far."""

    def __init__(self, patience: int = 3) -> None:
        if patience <= 0:
            raise ValueError("patience must be > 0")
        self.patience = patience
        self.best = -math.inf
        self.non_improving = 0

    def update(self, metric: float) -> bool:
        """Record ``metric``; True when it is a new best."""
        if metric > self.best:
            self.best = metric
            self.non_improving = 0
            return True
        self.non_improving += 1
        return False

    @property
    def should_stop(self) -> bool:
        return self.non_improving >= self.patience


@dataclass(frozen=True)
class TrainRecord:
    iteration: int
    passes: int
    mean_reward: float
    mean_r_rf: float
    mean_r_rif: float
    validation_return: float | None
    non_improving: int
    stopped: bool
    diagnostics: UpdateDiagnostics


@dataclass(frozen=True)
class TrainResult:
    params: NetParams
    env_config: EnvConfig
    history: list[TrainRecord] = field(default_factory=list)
    best_validation_return: float = -math.inf
    stopped_early: bool = False


def validation_env(env_config: EnvConfig, commission: float) -> TradingEnv:
    """Environment scoring reinforcement feedback at ``commission``."""
    return TradingEnv(
        dataclasses.replace(env_config, trading_commission=commission, reward_mode="RF")
    )


def greedy_return(
    env: TradingEnv, params: NetParams, days: Sequence[TradingDay]
) -> float:
    """Compounded daily return of the greedy policy on ``days``."""
    records = run_episodes(env, days, GreedyPolicy(params))
    returns = daily_returns(records, days, env.config.session)
    return float(np.prod(1.0 + returns.to_numpy()) - 1.0)


def validation_return(
    params: NetParams,
    days: Sequence[TradingDay],
    env_config: EnvConfig,
    commission: float,
) -> float:
    return greedy_return(validation_env(env_config, commission), params, days)


def train(
    train_days: Sequence[TradingDay],
    validation_days: Sequence[TradingDay],
    env_config: EnvConfig = EnvConfig(),
    config: PpoConfig = PpoConfig(),
    seed: int = 0,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> TrainResult:
    """Collect/update until the validation return stops improving.

    Indicator bounds are fitted on ``train_days``. Returns the parameters
    with the best validation return.
    """
    if not train_days:
        raise ValueError("empty window: no training days")
    if not validation_days:
        raise ValueError("empty window: no validation days")

    session = env_config.session
    env_config = dataclasses.replace(
        env_config,
        indicators=fit_bounds(list(train_days), env_config.indicators, session),
    )
    env = TradingEnv(env_config, metrics_hook=metrics_hook)
    stream = EpisodeStream(env, train_days)
    scorer = validation_env(env_config, config.validation_commission)
    rng = np.random.default_rng(seed)
    params = init_params(seed)
    best_params = params
    adam_state = AdamState(config=config.adam_config)
    stopper = EarlyStopping(config.patience)
    history: list[TrainRecord] = []
    logger.info(
        "Training %s agent: %d train days, %d validation days, seed %d",
        env_config.reward_mode,
        len(train_days),
        len(validation_days),
        seed,
    )

    for iteration in range(1, config.max_iterations + 1):
        passes_before = stream.passes_completed
        buffer = collect_rollout(stream, params, rng, config.buffer_size, metrics_hook)
        advantages, returns = compute_advantages(
            buffer, config.gamma, config.gae_lambda, config.normalize_advantages
        )

        start = monotonic()
        try:
            params, diagnostics = ppo_update(
                params, adam_state, buffer, advantages, returns, config, rng
            )
        except TrainingError as exc:
            exc.diagnostics["iteration"] = iteration
            logger.error("Training aborted at iteration %d: %s", iteration, exc)
            raise
        metrics_hook.record_latency(
            names.PPO_UPDATE_DURATION, 1000 * (monotonic() - start)
        )
        metrics_hook.increment(names.PPO_ITERATIONS_TOTAL)
        metrics_hook.record_gauge(names.PPO_MEAN_REWARD, float(buffer.rewards.mean()))

        validation: float | None = None
        if stream.passes_completed > passes_before:
            validation = greedy_return(scorer, params, validation_days)
            metrics_hook.record_gauge(names.PPO_VALIDATION_RETURN, validation)
            if stopper.update(validation):
                best_params = params
            logger.info(
                "Iteration %d (pass %d): validation return %.6f, best %.6f",
                iteration,
                stream.passes_completed,
                validation,
                stopper.best,
            )

        history.append(
            TrainRecord(
                iteration=iteration,
                passes=stream.passes_completed,
                mean_reward=float(buffer.rewards.mean()),
                mean_r_rf=float(buffer.r_rf.mean()),
                mean_r_rif=float(buffer.r_rif.mean()),
                validation_return=validation,
                non_improving=stopper.non_improving,
                stopped=stopper.should_stop,
                diagnostics=diagnostics,
            )
        )
        if stopper.should_stop:
            metrics_hook.increment(names.PPO_EARLY_STOPS_TOTAL)
            logger.info("Early stop at iteration %d", iteration)
            break

    if stopper.best == -math.inf:
        # cap reached before a full pass; validate what we have
        stopper.update(greedy_return(scorer, params, validation_days))
        best_params = params

    return TrainResult(
        params=best_params,
        env_config=env_config,
        history=history,
        best_validation_return=stopper.best,
        stopped_early=stopper.should_stop,
    )


def history_frame(history: Sequence[TrainRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "iteration": r.iteration,
                "passes": r.passes,
                "mean_reward": r.mean_reward,
                "mean_r_rf": r.mean_r_rf,
                "mean_r_rif": r.mean_r_rif,
                "validation_return": r.validation_return,
                "non_improving": r.non_improving,
                "stopped": int(r.stopped),
                "policy_loss": r.diagnostics.policy_loss,
                "value_loss": r.diagnostics.value_loss,
                "entropy": r.diagnostics.entropy,
                "approx_kl": r.diagnostics.approx_kl,
                "clip_fraction": r.diagnostics.clip_fraction,
            }
            for r in history
        ]
    )


def write_history(
    history: Sequence[TrainRecord], path: str | Path, header: str | None = None
) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        if header is not None:
            f.write(f"# {header}\n")
        history_frame(history).to_csv(f, index=False, lineterminator="\n")
    return path
