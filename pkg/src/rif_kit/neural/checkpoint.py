# src/rif_kit/neural/checkpoint.py

"""JSON checkpoints.

Layout (``format_version`` 1)::

    {
      "format_version": 1,
      "seed": <int>,
      "config_hash": <str>,
      "shapes": {"w1": [8, 64], ...},
      "params": {"w1": [[...], ...], ...},
      "metadata": {...}
    }

Floats are written with Python's shortest round-trip repr, so a checkpoint
reloads bit-exactly.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from rif_kit.errors import RifKitError

from .params import PARAM_SHAPES, NetParams

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Checkpoint:
    params: NetParams
    seed: int
    config_hash: str
    metadata: dict[str, Any] = field(default_factory=dict)


def checkpoint_to_json(checkpoint: Checkpoint) -> str:
    arrays = checkpoint.params.as_dict()
    document = {
        "format_version": FORMAT_VERSION,
        "seed": checkpoint.seed,
        "config_hash": checkpoint.config_hash,
        "shapes": {name: list(PARAM_SHAPES[name]) for name in arrays},
        "params": {name: value.tolist() for name, value in arrays.items()},
        "metadata": checkpoint.metadata,
    }
    return json.dumps(document, indent=1, sort_keys=True) + "\n"


def checkpoint_from_json(text: str) -> Checkpoint:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RifKitError(f"checkpoint is not valid JSON: {exc}")
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise RifKitError(f"Unsupported checkpoint format_version: {version}")
    try:
        params = NetParams.from_dict(
            {
                name: np.array(value, dtype=np.float64)
                for name, value in document["params"].items()
            }
        )
    except (KeyError, ValueError) as exc:
        raise RifKitError(f"malformed checkpoint parameters: {exc}")
    return Checkpoint(
        params=params,
        seed=int(document["seed"]),
        config_hash=str(document["config_hash"]),
        metadata=dict(document.get("metadata", {})),
    )


def save_checkpoint(checkpoint: Checkpoint, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(checkpoint_to_json(checkpoint), encoding="utf-8")
    logger.info("Saved checkpoint to %s", path)
    return path


def load_checkpoint(path: str | Path) -> Checkpoint:
    path = Path(path)
    if not path.is_file():
        raise RifKitError(f"checkpoint not found: {path}")
    return checkpoint_from_json(path.read_text(encoding="utf-8"))
