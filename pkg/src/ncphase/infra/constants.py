"""
物理常数表 - CODATA 数值取自 scipy.constants

库内部一律使用 Hartree 原子单位；SI 换算集中在这里。
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError
from scipy import constants as sc

from ncphase.core.exceptions import ConfigError
from ncphase.domain.models import TransitionReference


def _codata(key: str) -> float:
    return float(sc.physical_constants[key][0])


class PhysicalConstants(BaseModel):
    """SI 常数（可被配置文件覆盖）"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    hbar: float = Field(
        default_factory=lambda: float(sc.hbar), gt=0, description="约化 Planck 常数 (J·s)"
    )
    planck: float = Field(
        default_factory=lambda: float(sc.h), gt=0, description="Planck 常数 (J·s)"
    )
    electron_mass: float = Field(
        default_factory=lambda: _codata("electron mass"), gt=0, description="电子质量 (kg)"
    )
    bohr_radius: float = Field(
        default_factory=lambda: _codata("Bohr radius"), gt=0, description="Bohr 半径 (m)"
    )
    hartree_energy: float = Field(
        default_factory=lambda: _codata("Hartree energy"), gt=0, description="Hartree 能量 (J)"
    )
    gravitational_constant: float = Field(
        default_factory=lambda: float(sc.G), gt=0, description="引力常数 (m³/(kg·s²))"
    )
    speed_of_light: float = Field(
        default_factory=lambda: float(sc.c), gt=0, description="光速 (m/s)"
    )

    @property
    def planck_length(self) -> float:
        """√(ħG/c³)，单位 m"""
        return math.sqrt(self.hbar * self.gravitational_constant / self.speed_of_light**3)

    @property
    def planck_length_bohr(self) -> float:
        """以 a_B 为单位的 Planck 长度"""
        return self.planck_length / self.bohr_radius

    def hartree_to_joule(self, energy: float) -> float:
        return energy * self.hartree_energy

    def theta_to_si(self, theta_tilde: float) -> float:
        """θ̃ → ħ⟨θ⟩ (m²)"""
        return theta_tilde * self.bohr_radius**2

    def eta_to_si(self, eta_tilde: float) -> float:
        """η̃ → ħ√⟨η²⟩ (kg²·m²/s²)"""
        return eta_tilde * self.hbar**2 / self.bohr_radius**2

    def frequency_to_hartree(self, frequency_hz: float) -> float:
        """h·f，单位 Hartree"""
        return self.planck * frequency_hz / self.hartree_energy

    def with_overrides(self, overrides: dict[str, Any] | None) -> PhysicalConstants:
        """
        返回覆盖了部分字段的新常数表

        Raises:
            ConfigError: 字段未知或取值非法
        """
        if not overrides:
            return self
        try:
            return PhysicalConstants.model_validate({**self.model_dump(), **overrides})
        except ValidationError as e:
            raise ConfigError(f"invalid constants override: {e}") from e


@lru_cache(maxsize=1)
def default_constants() -> PhysicalConstants:
    """缺省 CODATA 常数表"""
    return PhysicalConstants()


# 1s-2s 跃迁频率 2466061413187018(11) Hz
TRANSITION_1S2S = TransitionReference(
    frequency_hz=2466061413187018,
    uncertainty_hz=11,
    rel_accuracy=4.5e-15,
)
