"""配置加载"""
import os
from pathlib import Path
from typing import List, Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from .exceptions import ConfigError
from .logger import get_logger

logger = get_logger("config")

PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config" / "config.yaml"
PRIMES_ENV_VAR = "SKEWPAIR_PRIMES"


class SuiteConfig(BaseModel):
    """验证套件参数"""
    primes: List[int] = Field(default_factory=lambda: [3, 5])
    seed: int = 42
    trials: int = Field(20, ge=1)
    psi_trials: int = Field(50, ge=1)
    lift_trials: int = Field(100, ge=1)
    workers: int = Field(4, ge=1)
    sequential: bool = False

    @field_validator("primes")
    @classmethod
    def _non_empty(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError("primes must not be empty")
        return v


class FiltrationConfig(BaseModel):
    """维数证书参数"""
    coefficient_bound: int = Field(9, ge=1)
    max_retries: int = Field(5, ge=0)
    max_prime: int = 7


class LiftingConfig(BaseModel):
    """提升问题参数"""
    perturbation_bound: int = Field(3, ge=1)


class LoggingConfig(BaseModel):
    """日志参数"""
    level: str = "WARNING"
    dir: Optional[str] = None
    console: bool = True


class ReportConfig(BaseModel):
    """报告输出参数"""
    format: str = "json"
    timings: bool = False

    @field_validator("format")
    @classmethod
    def _known_format(cls, v: str) -> str:
        if v not in ("json", "text"):
            raise ValueError(f"unknown report format: {v}")
        return v


class AppConfig(BaseModel):
    """完整配置"""
    suite: SuiteConfig = Field(default_factory=SuiteConfig)
    filtration: FiltrationConfig = Field(default_factory=FiltrationConfig)
    lifting: LiftingConfig = Field(default_factory=LiftingConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)


def parse_primes(text: str) -> List[int]:
    """解析 "3,5,7" 形式的素数列表"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise ConfigError(f"invalid prime list {text!r}: {e}") from e


def load_config(config_path: Optional[Union[str, Path]] = None) -> AppConfig:
    """
    加载配置文件

    Args:
        config_path: YAML 路径，为 None 时使用 config/config.yaml（文件不存在则用默认值）

    Returns:
        校验过的 AppConfig
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    raw: dict = {}
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    elif config_path:
        raise ConfigError(f"config file not found: {path}")

    try:
        config = AppConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e}") from e

    env_primes = os.environ.get(PRIMES_ENV_VAR)
    if env_primes:
        config.suite.primes = parse_primes(env_primes)
        logger.debug(f"primes overridden by {PRIMES_ENV_VAR}: {config.suite.primes}")

    return config
