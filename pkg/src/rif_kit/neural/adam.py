# src/rif_kit/neural/adam.py

from dataclasses import dataclass, field

import numpy as np

from .params import NetParams


@dataclass(frozen=True)
class AdamConfig:
    learning_rate: float = 1e-4
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8

    def __post_init__(self) -> None:
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be > 0")
        if not (0 <= self.beta1 < 1 and 0 <= self.beta2 < 1):
            raise ValueError("betas must be in [0, 1)")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be > 0")


@dataclass
class AdamState:
    """Moment accumulators shaped like ``NetParams``; mutated by ``adam_step``."""

    first_moment: NetParams = field(default_factory=NetParams.zeros)
    second_moment: NetParams = field(default_factory=NetParams.zeros)
    step: int = 0
    config: AdamConfig = field(default_factory=AdamConfig)


def adam_step(params: NetParams, grads: NetParams, state: AdamState) -> NetParams:
    """One bias-corrected Adam update. Returns new parameters."""
    cfg = state.config
    p, g = params.as_dict(), grads.as_dict()
    m, v = state.first_moment.as_dict(), state.second_moment.as_dict()
    for name in p:
        if g[name].shape != p[name].shape:
            raise ValueError(
                f"shape mismatch for {name}: "
                f"params {p[name].shape}, grads {g[name].shape}"
            )

    step = state.step + 1
    new_m = {k: cfg.beta1 * m[k] + (1.0 - cfg.beta1) * g[k] for k in p}
    new_v = {k: cfg.beta2 * v[k] + (1.0 - cfg.beta2) * g[k] ** 2 for k in p}
    m_correction = 1.0 - cfg.beta1**step
    v_correction = 1.0 - cfg.beta2**step
    updated = {
        k: p[k]
        - cfg.learning_rate
        * (new_m[k] / m_correction)
        / (np.sqrt(new_v[k] / v_correction) + cfg.epsilon)
        for k in p
    }

    state.first_moment = NetParams.from_dict(new_m)
    state.second_moment = NetParams.from_dict(new_v)
    state.step = step
    return NetParams.from_dict(updated)
