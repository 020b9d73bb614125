# src/rif_kit/ppo/rollout.py

import logging
from collections.abc import Sequence
from time import monotonic

import numpy as np

from rif_kit.env import StepOutcome, TradingEnv
from rif_kit.market_data import TradingDay
from rif_kit.neural import NetParams, forward, sample_action
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .buffer import RolloutBuffer

logger = logging.getLogger(__name__)


class EpisodeStream:
    """
    Endless sequence of training episodes.
    - Days are played in the given order and cycled
    - An unfinished episode carries over into the next rollout
    - ``passes_completed`` counts full passes over the days
    """

    def __init__(self, env: TradingEnv, days: Sequence[TradingDay]) -> None:
        if not days:
            raise ValueError("no training days available")
        self.env = env
        self.days = list(days)
        self.passes_completed = 0
        self.episodes_completed = 0
        self._next_day = 0
        self._observation: np.ndarray | None = None

    def _ensure_episode(self) -> np.ndarray:
        if self._observation is None:
            _, self._observation = self.env.reset(self.days[self._next_day])
        return self._observation

    @property
    def observation(self) -> np.ndarray:
        return self._ensure_episode()

    def step(self, action: int) -> StepOutcome:
        self._ensure_episode()
        outcome = self.env.step(action)
        self._observation = outcome.observation
        if outcome.done:
            self.episodes_completed += 1
            self._next_day += 1
            if self._next_day == len(self.days):
                self._next_day = 0
                self.passes_completed += 1
        return outcome


def collect_rollout(
    stream: EpisodeStream,
    params: NetParams,
    rng: np.random.Generator,
    capacity: int = 1024,
    metrics_hook: MetricsHook = NoOpMetricsHook(),
) -> RolloutBuffer:
    """Fill a buffer with actions sampled from the current policy."""
    start = monotonic()
    buffer = RolloutBuffer(capacity)
    while not buffer.is_full:
        observation = stream.observation
        out = forward(params, observation)
        action = sample_action(out.probabilities[0], rng)
        outcome = stream.step(action)
        buffer.add(
            observation,
            action,
            float(out.log_probabilities[0, action]),
            outcome.reward,
            float(out.values[0]),
            outcome.done,
            r_rf=outcome.r_rf,
            r_rif=outcome.r_rif,
        )
    if buffer.truncated:
        buffer.bootstrap_value = float(forward(params, stream.observation).values[0])

    metrics_hook.record_latency(
        names.PPO_ROLLOUT_DURATION, 1000 * (monotonic() - start)
    )
    logger.debug(
        "Collected %d steps, %d completed episodes",
        len(buffer),
        buffer.completed_episodes,
    )
    return buffer
