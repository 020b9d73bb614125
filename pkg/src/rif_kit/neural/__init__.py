# src/rif_kit/neural/__init__.py

"""Dense actor-critic with analytic PPO gradients and Adam.

Example:
    >>> import numpy as np
    >>> from rif_kit.neural import forward, init_params
    >>>
    >>> out = forward(init_params(seed=0), np.zeros(8))
    >>> out.probabilities.shape
    (1, 2)
"""

from .adam import AdamConfig, AdamState, adam_step
from .checkpoint import (
    FORMAT_VERSION,
    Checkpoint,
    checkpoint_from_json,
    checkpoint_to_json,
    load_checkpoint,
    save_checkpoint,
)
from .loss import (
    LossSpec,
    LossTerms,
    Minibatch,
    backward,
    composite_loss,
    gradient_check,
)
from .network import ForwardOutput, forward, log_softmax, sample_action
from .params import OBSERVATION_DIM, PARAM_SHAPES, NetParams, init_params

__all__ = [
    # Parameters
    "NetParams",
    "PARAM_SHAPES",
    "OBSERVATION_DIM",
    "init_params",
    # Forward
    "ForwardOutput",
    "forward",
    "log_softmax",
    "sample_action",
    # Loss and gradients
    "LossSpec",
    "LossTerms",
    "Minibatch",
    "composite_loss",
    "backward",
    "gradient_check",
    # Optimizer
    "AdamConfig",
    "AdamState",
    "adam_step",
    # Checkpoints
    "Checkpoint",
    "FORMAT_VERSION",
    "checkpoint_to_json",
    "checkpoint_from_json",
    "save_checkpoint",
    "load_checkpoint",
]
