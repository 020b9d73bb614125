from .config import RunConfig, apply_overrides, config_hash, load_run_config
from .main import build_parser, main

__all__ = [
    "RunConfig",
    "load_run_config",
    "apply_overrides",
    "config_hash",
    "build_parser",
    "main",
]
