"""
基础设施层 - 物理常数与运行配置
"""

from ncphase.infra.config import RunConfig, load_config
from ncphase.infra.constants import TRANSITION_1S2S, PhysicalConstants, default_constants

__all__ = [
    "RunConfig",
    "load_config",
    "PhysicalConstants",
    "default_constants",
    "TRANSITION_1S2S",
]
