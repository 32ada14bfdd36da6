"""
运行配置 - 缺省值 < JSON 配置文件 < 命令行参数
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ncphase.core.exceptions import ConfigError
from ncphase.domain.models import NCParams
from ncphase.domain.types import OutputFormat, UnitSystem
from ncphase.infra.constants import PhysicalConstants, default_constants
from ncphase.plugins.jacobi import DEFAULT_SEED

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "NCPHASE_CONFIG"

RAW_KEYS = ("l0", "p0", "l_planck")
MOMENT_KEYS = ("theta_tilde", "theta_sq_tilde", "eta_sq_tilde")


class RunConfig(BaseModel):
    """单次命令运行的配置"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    units: UnitSystem = Field(UnitSystem.HARTREE, description="输出单位制")
    output: OutputFormat | None = Field(None, description="输出格式，缺省由命令决定")
    seed: int = Field(DEFAULT_SEED, description="随机三元组的种子")

    l0: float | None = Field(None, ge=0)
    p0: float | None = Field(None, ge=0)
    l_planck: float | None = Field(None, gt=0)
    theta_tilde: float | None = Field(None, ge=0)
    theta_sq_tilde: float | None = Field(None, ge=0)
    eta_sq_tilde: float | None = Field(None, ge=0)

    constants: dict[str, float] | None = Field(None, description="CODATA 常数覆盖")

    @model_validator(mode="after")
    def _check_nc_form(self) -> RunConfig:
        raw = any(getattr(self, key) is not None for key in RAW_KEYS)
        moments = any(getattr(self, key) is not None for key in MOMENT_KEYS)
        if raw and moments:
            raise ValueError(
                "noncommutativity input must be either (l0, p0, l_planck) "
                "or (theta_tilde, theta_sq_tilde, eta_sq_tilde), not both"
            )
        return self

    def nc_params(self) -> NCParams:
        """按配置构造 NCParams；两种形式都未给出时返回全零矩"""
        if any(getattr(self, key) is not None for key in RAW_KEYS):
            return NCParams.from_raw(
                l0=self.l0 or 0.0,
                p0=self.p0 or 0.0,
                l_planck=self.l_planck or self.physical_constants().planck_length_bohr,
            )
        return NCParams.from_moments(
            theta_tilde=self.theta_tilde,
            theta_sq_tilde=self.theta_sq_tilde,
            eta_sq_tilde=self.eta_sq_tilde or 0.0,
        )

    def physical_constants(self) -> PhysicalConstants:
        return default_constants().with_overrides(self.constants)


def resolve_config_path(path: Path | None) -> Path | None:
    """--config 优先，其次环境变量 NCPHASE_CONFIG"""
    if path is not None:
        return path
    env_value = os.environ.get(CONFIG_ENV_VAR, "").strip()
    return Path(env_value) if env_value else None


def read_config_file(path: Path) -> dict[str, Any]:
    """
    读取扁平 JSON 配置文件

    Raises:
        ConfigError: 文件不可读、不是 JSON 对象或含有不允许的嵌套
    """
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must contain a JSON object")
    for key, value in raw.items():
        if isinstance(value, (dict, list)) and key != "constants":
            raise ConfigError(f"config key '{key}' must not be nested")
    return raw


def load_config(path: Path | None = None, overrides: dict[str, Any] | None = None) -> RunConfig:
    """
    合并配置来源

    Args:
        path: --config 指定的文件
        overrides: 命令行参数（值为 None 的键忽略）

    Raises:
        ConfigError: 任何配置错误
    """
    data: dict[str, Any] = {}
    source = resolve_config_path(path)
    if source is not None:
        logger.debug("Loading config from %s", source)
        data.update(read_config_file(source))

    flags = {key: value for key, value in (overrides or {}).items() if value is not None}
    if any(key in flags for key in RAW_KEYS + MOMENT_KEYS):
        # 命令行给出非对易参数时整体替换文件中的参数块
        for key in RAW_KEYS + MOMENT_KEYS:
            data.pop(key, None)
    data.update(flags)
    logger.debug("Resolved config keys: %s", sorted(data))

    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"invalid configuration: {e}") from e
