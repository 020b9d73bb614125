# src/rif_kit/ppo/config.py

from dataclasses import dataclass

from rif_kit.env import BPS
from rif_kit.neural import AdamConfig, LossSpec


@dataclass(frozen=True)
class PpoConfig:
    """PPO hyperparameters.

    One iteration is one rollout of ``buffer_size`` steps followed by
    ``epochs`` passes of shuffled minibatches. Validation runs after every
    full pass over the training days.
    """

    buffer_size: int = 1024
    epochs: int = 10
    minibatch_size: int = 64
    gamma: float = 1.0
    gae_lambda: float = 0.95
    clip_epsilon: float = 0.2
    value_coef: float = 0.5
    entropy_coef: float = 0.01
    learning_rate: float = 1e-4
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_epsilon: float = 1e-8
    normalize_advantages: bool = True
    max_iterations: int = 200
    patience: int = 3
    validation_commission: float = 1 * BPS

    def __post_init__(self) -> None:
        if self.buffer_size <= 0:
            raise ValueError("buffer_size must be > 0")
        if self.minibatch_size <= 0:
            raise ValueError("minibatch_size must be > 0")
        if self.buffer_size % self.minibatch_size != 0:
            raise ValueError("minibatch_size must divide buffer_size")
        if self.epochs <= 0:
            raise ValueError("epochs must be > 0")
        if not 0 < self.gamma <= 1:
            raise ValueError("gamma must be in (0, 1]")
        if not 0 <= self.gae_lambda <= 1:
            raise ValueError("gae_lambda must be in [0, 1]")
        if self.max_iterations <= 0:
            raise ValueError("max_iterations must be > 0")
        if self.patience <= 0:
            raise ValueError("patience must be > 0")
        if self.validation_commission < 0:
            raise ValueError("validation_commission must be >= 0")
        # LossSpec and AdamConfig validate the rest
        LossSpec(self.clip_epsilon, self.value_coef, self.entropy_coef)
        AdamConfig(
            self.learning_rate, self.adam_beta1, self.adam_beta2, self.adam_epsilon
        )

    @property
    def loss_spec(self) -> LossSpec:
        return LossSpec(
            clip_epsilon=self.clip_epsilon,
            value_coef=self.value_coef,
            entropy_coef=self.entropy_coef,
        )

    @property
    def adam_config(self) -> AdamConfig:
        return AdamConfig(
            learning_rate=self.learning_rate,
            beta1=self.adam_beta1,
            beta2=self.adam_beta2,
            epsilon=self.adam_epsilon,
        )
