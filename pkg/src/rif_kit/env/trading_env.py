# src/rif_kit/env/trading_env.py

import dataclasses
import logging
from datetime import date

import numpy as np

from rif_kit.indicators import price_features
from rif_kit.indicators.features import time_remaining_feature
from rif_kit.labeling import LabelSeries, label_day
from rif_kit.market_data import TradingDay
from rif_kit.observability import names
from rif_kit.observability.base import MetricsHook, NoOpMetricsHook

from .config import EnvConfig
from .models import EnvState, Fill, StepOutcome
from .rewards import compute_feedback

logger = logging.getLogger(__name__)


class TradingEnv:
    """
    Long/flat intraday episode over one trading day.
    - Decisions run from the first decision minute to the forced exit minute
    - A decision at ``t`` fills at the open of bar ``t + 1``
    - The action at the forced exit minute is overridden to flat
    - Price features and oracle labels are cached per day object
    """

    def __init__(
        self,
        config: EnvConfig = EnvConfig(),
        metrics_hook: MetricsHook = NoOpMetricsHook(),
    ) -> None:
        self.config = config
        self.metrics_hook = metrics_hook
        # entries remember their day; another day with the same date replaces them
        self._features: dict[date, tuple[TradingDay, np.ndarray]] = {}
        self._labels: dict[tuple[date, float], tuple[TradingDay, LabelSeries]] = {}
        self._state: EnvState | None = None

    @property
    def state(self) -> EnvState:
        if self._state is None:
            raise RuntimeError("reset() must be called before step()")
        return self._state

    def labels_for(self, day: TradingDay) -> LabelSeries:
        key = (day.date, self.config.expert_commission)
        cached = self._labels.get(key)
        if cached is None or cached[0] is not day:
            labels = label_day(day, self.config.expert_commission, self.config.session)
            cached = self._labels[key] = (day, labels)
        return cached[1]

    def features_for(self, day: TradingDay) -> np.ndarray:
        cached = self._features.get(day.date)
        if cached is None or cached[0] is not day:
            features = price_features(day, self.config.indicators, self.config.session)
            cached = self._features[day.date] = (day, features)
        return cached[1]

    def observation(self, day: TradingDay, t: int, position: int) -> np.ndarray:
        session = self.config.session
        row = self.features_for(day)[t - session.first_decision_index]
        return np.concatenate(
            (row, [2.0 * position - 1.0, time_remaining_feature(t, session)])
        )

    def reset(self, day: TradingDay) -> tuple[EnvState, np.ndarray]:
        session = self.config.session
        if day.incomplete:
            raise ValueError(f"day {day.date} is incomplete")
        if len(day) < session.bars_per_session:
            raise ValueError(
                f"day {day.date} has {len(day)} bars, need {session.bars_per_session}"
            )
        t = session.first_decision_index
        self._state = EnvState(day=day, t=t, position=0, labels=self.labels_for(day))
        logger.debug("Reset on %s", day.date)
        return self._state, self.observation(day, t, 0)

    def step(self, action: int) -> StepOutcome:
        state = self.state
        if state.done:
            raise RuntimeError("step() called after the episode is done")
        if action not in (0, 1):
            raise ValueError("action must be 0 or 1")

        session = self.config.session
        day, t = state.day, state.t
        forced = t == session.forced_exit_index
        if forced:
            action = 0

        k = t - session.first_decision_index
        label = int(state.labels.labels[k])
        previous_label = int(state.labels.labels[k - 1]) if k > 0 else 0
        commission = self.config.trading_commission
        if forced and not self.config.charge_forced_exit_commission:
            commission = 0.0

        feedback = compute_feedback(
            action,
            state.position,
            label,
            previous_label,
            day.bars[t],
            day.bars[t + 1],
            commission,
        )

        fill = None
        if action != state.position:
            fill = Fill(
                side="buy" if action == 1 else "sell",
                decision_time=day.bars[t].timestamp,
                price=day.bars[t + 1].open,
                commission=feedback.cost,
                forced=forced,
            )

        done = forced
        self._state = dataclasses.replace(
            state,
            t=t + 1,
            position=action,
            done=done,
            steps=state.steps + 1,
            trades=state.trades + (fill is not None),
        )
        if done:
            self._record_episode(self._state)

        reward = feedback.r_rif if self.config.reward_mode == "RIF" else feedback.r_rf
        return StepOutcome(
            observation=None if done else self.observation(day, t + 1, action),
            feedback=feedback,
            reward=reward,
            action=action,
            label=label,
            done=done,
            fill=fill,
        )

    def _record_episode(self, state: EnvState) -> None:
        self.metrics_hook.increment(names.ENV_EPISODES_TOTAL)
        self.metrics_hook.increment(names.ENV_STEPS_TOTAL, state.steps)
        self.metrics_hook.increment(names.ENV_TRADES_TOTAL, state.trades)
        logger.debug(
            "Episode %s done: %d steps, %d fills",
            state.day.date,
            state.steps,
            state.trades,
        )
