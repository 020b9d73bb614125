# src/rif_kit/cli/config.py

import hashlib
import json
import logging
from datetime import date, time
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from rif_kit.env import BPS, EnvConfig, ReturnBase, RewardMode
from rif_kit.errors import ConfigError
from rif_kit.indicators import DEFAULT_FEATURES, IndicatorConfig
from rif_kit.market_data import GeneratorKind, SessionWindow, SyntheticSpec
from rif_kit.ppo import PpoConfig

logger = logging.getLogger(__name__)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class SyntheticSection(_Section):
    kind: GeneratorKind = "random-walk"
    days: int = 10
    volatility: float = 0.0005
    drift: float = 0.0
    seed: int = 0
    start: date = date(2023, 1, 2)
    base_price: float = 100.0
    period_minutes: int = 120

    def to_spec(self) -> SyntheticSpec:
        return SyntheticSpec(**self.model_dump())


class DataSection(_Section):
    path: str | None = None
    synthetic: SyntheticSection | None = None
    asset: str | None = None
    max_missing_bars: int = 5

    @model_validator(mode="after")
    def _one_source(self) -> "DataSection":
        if (self.path is None) == (self.synthetic is None):
            raise ValueError("data needs exactly one of 'path' or 'synthetic'")
        return self

    @property
    def asset_name(self) -> str:
        if self.asset:
            return self.asset
        return Path(self.path).stem if self.path else "synthetic"


class SessionSection(_Section):
    open_time: time = time(9, 30)
    close_time: time = time(17, 0)
    first_decision: time = time(10, 32)
    forced_exit: time = time(16, 58)
    lookback: int = 61

    def to_session(self) -> SessionWindow:
        return SessionWindow(**self.model_dump())


class IndicatorSection(_Section):
    features: list[str] = Field(default_factory=lambda: list(DEFAULT_FEATURES))
    williams_r_period: int = 14
    rsi_period: int = 14
    cci_period: int = 20
    ultimate_periods: tuple[int, int, int] = (7, 14, 28)
    adx_period: int = 14
    roc_period: int = 10
    stochastic_period: int = 14

    def to_config(self) -> IndicatorConfig:
        values = self.model_dump()
        values["features"] = tuple(values["features"])
        return IndicatorConfig(**values)


class EnvSection(_Section):
    theta_bps: float = 3.0
    phi_bps: float = 1.0
    charge_forced_exit_commission: bool = True
    return_base: ReturnBase = "decision_open"


class PpoSection(_Section):
    buffer_size: int = 1024
    epochs: int = 10
    minibatch_size: int = 64
    gae_lambda: float = 0.95
    clip_epsilon: float = 0.2
    value_coef: float = 0.5
    entropy_coef: float = 0.01
    learning_rate: float = 1e-4
    normalize_advantages: bool = True
    max_iterations: int = 200
    patience: int = 3
    validation_commission_bps: float = 1.0

    def to_config(self) -> PpoConfig:
        values = self.model_dump()
        values["validation_commission"] = values.pop("validation_commission_bps") * BPS
        return PpoConfig(**values)


class GridSection(_Section):
    enabled: bool = False
    theta_bps: list[float] = Field(default_factory=lambda: [0.5, 1, 2, 3, 4, 5, 10, 20])
    phi_bps: list[float] = Field(default_factory=lambda: [0.5, 1, 2, 3, 4, 5, 10, 20])


class WindowSection(_Section):
    mode: Literal["months", "days"] = "months"
    train: int = 12
    validation: int = 3
    test: int = 3


class RunConfig(_Section):
    """Run configuration file schema. Every section has defaults except
    ``data``."""

    data: DataSection
    session: SessionSection = Field(default_factory=SessionSection)
    indicators: IndicatorSection = Field(default_factory=IndicatorSection)
    env: EnvSection = Field(default_factory=EnvSection)
    ppo: PpoSection = Field(default_factory=PpoSection)
    grid: GridSection = Field(default_factory=GridSection)
    windows: WindowSection = Field(default_factory=WindowSection)
    reward_modes: list[RewardMode] = Field(default_factory=lambda: ["RIF", "RF"])
    seed: int = 0
    output_dir: str = "runs"
    jobs: int = Field(default=1, ge=1)
    scatter_steps: int = Field(default=100_000, gt=0)

    def env_config(self, reward_mode: RewardMode = "RIF") -> EnvConfig:
        return EnvConfig(
            trading_commission=self.env.phi_bps * BPS,
            expert_commission=self.env.theta_bps * BPS,
            reward_mode=reward_mode,
            charge_forced_exit_commission=self.env.charge_forced_exit_commission,
            session=self.session.to_session(),
            indicators=self.indicators.to_config(),
        )

    def validate_components(self) -> None:
        """Build every dataclass config once so bad values fail as ConfigError."""
        try:
            self.env_config()
            self.ppo.to_config()
            if self.data.synthetic is not None:
                self.data.synthetic.to_spec()
        except ValueError as exc:
            raise ConfigError(f"invalid configuration: {exc}")


def config_hash(config: RunConfig) -> str:
    canonical = json.dumps(
        config.model_dump(mode="json"), sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


def parse_run_config(data: Any) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a mapping")
    try:
        config = RunConfig(**data)
    except ValidationError as exc:
        raise ConfigError(f"invalid configuration: {exc}")
    config.validate_components()
    return config


def load_run_config(path: str | Path) -> RunConfig:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config file is not valid YAML: {exc}")
    logger.info("Loaded run config from %s", path)
    return parse_run_config(data)


def apply_overrides(
    config: RunConfig,
    seed: int | None = None,
    theta_bps: float | None = None,
    phi_bps: float | None = None,
    output_dir: str | None = None,
    jobs: int | None = None,
) -> RunConfig:
    """Command-line flags win over file values."""
    data = config.model_dump()
    if seed is not None:
        data["seed"] = seed
    if theta_bps is not None:
        data["env"]["theta_bps"] = theta_bps
    if phi_bps is not None:
        data["env"]["phi_bps"] = phi_bps
    if output_dir is not None:
        data["output_dir"] = output_dir
    if jobs is not None:
        data["jobs"] = jobs
    return parse_run_config(data)
