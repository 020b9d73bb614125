# src/rif_kit/ppo/buffer.py

import numpy as np

from rif_kit.neural import OBSERVATION_DIM


class RolloutBuffer:
    """Fixed-capacity store of one rollout.

    ``dones[i]`` marks the last step of an episode. When the final stored
    step is mid-episode, ``bootstrap_value`` holds V of the next state.
    """

    def __init__(self, capacity: int = 1024) -> None:
        if capacity <= 0:
            raise ValueError("capacity must be > 0")
        self.capacity = capacity
        self.observations = np.zeros((capacity, OBSERVATION_DIM))
        self.actions = np.zeros(capacity, dtype=np.int64)
        self.log_probs = np.zeros(capacity)
        self.rewards = np.zeros(capacity)
        self.values = np.zeros(capacity)
        self.dones = np.zeros(capacity, dtype=bool)
        self.r_rf = np.zeros(capacity)
        self.r_rif = np.zeros(capacity)
        self.bootstrap_value = 0.0
        self._size = 0

    def __len__(self) -> int:
        return self._size

    @property
    def is_full(self) -> bool:
        return self._size == self.capacity

    @property
    def truncated(self) -> bool:
        return self._size > 0 and not self.dones[self._size - 1]

    @property
    def completed_episodes(self) -> int:
        return int(self.dones[: self._size].sum())

    def add(
        self,
        observation: np.ndarray,
        action: int,
        log_prob: float,
        reward: float,
        value: float,
        done: bool,
        r_rf: float = 0.0,
        r_rif: float = 0.0,
    ) -> None:
        if self.is_full:
            raise IndexError(f"buffer is full ({self.capacity} steps)")
        i = self._size
        self.observations[i] = observation
        self.actions[i] = action
        self.log_probs[i] = log_prob
        self.rewards[i] = reward
        self.values[i] = value
        self.dones[i] = done
        self.r_rf[i] = r_rf
        self.r_rif[i] = r_rif
        self._size += 1
