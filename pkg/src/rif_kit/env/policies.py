# src/rif_kit/env/policies.py

from typing import Protocol

import numpy as np

from rif_kit.neural import NetParams, forward, sample_action

from .models import EnvState


class Policy(Protocol):
    """Chooses a_t from the observation and the environment state.

    Only the label-following policy reads ``state.labels``; every other
    policy is causal.
    """

    name: str

    def act(self, observation: np.ndarray, state: EnvState) -> int: ...


class GreedyPolicy:
    name = "greedy"

    def __init__(self, params: NetParams) -> None:
        self.params = params

    def act(self, observation: np.ndarray, state: EnvState) -> int:  # noqa: ARG002
        probabilities = forward(self.params, observation).probabilities[0]
        # ties go to flat
        return int(probabilities[1] > probabilities[0])


class StochasticPolicy:
    name = "stochastic"

    def __init__(self, params: NetParams, rng: np.random.Generator) -> None:
        self.params = params
        self.rng = rng

    def act(self, observation: np.ndarray, state: EnvState) -> int:  # noqa: ARG002
        probabilities = forward(self.params, observation).probabilities[0]
        return sample_action(probabilities, self.rng)


class RandomPolicy:
    name = "random"

    def __init__(self, rng: np.random.Generator) -> None:
        self.rng = rng

    def act(self, observation: np.ndarray, state: EnvState) -> int:  # noqa: ARG002
        return int(self.rng.integers(2))


class BuyAndHoldPolicy:
    """Long from the first decision minute; the forced exit closes it."""

    name = "buy_and_hold"

    def act(self, observation: np.ndarray, state: EnvState) -> int:  # noqa: ARG002
        return 1


class FlatPolicy:
    name = "flat"

    def act(self, observation: np.ndarray, state: EnvState) -> int:  # noqa: ARG002
        return 0


class LabelFollowingPolicy:
    """Replays the oracle labels of the current day."""

    name = "labels"

    def __init__(self, first_decision_index: int) -> None:
        self.first_decision_index = first_decision_index

    def act(self, observation: np.ndarray, state: EnvState) -> int:  # noqa: ARG002
        return int(state.labels.labels[state.t - self.first_decision_index])
