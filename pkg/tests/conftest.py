"""
测试配置和 fixtures
"""

from collections.abc import Generator

import pytest

from ncphase.core.context import AppContext
from ncphase.domain.models import NCParams
from ncphase.infra.config import CONFIG_ENV_VAR


@pytest.fixture(autouse=True)
def clean_context(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """每个测试使用全新的上下文，且不受外部配置文件影响"""
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    AppContext.reset()
    yield
    AppContext.reset()


@pytest.fixture
def raw_params() -> NCParams:
    """量级为 1 的原始参数，便于数值比较"""
    return NCParams.from_raw(l0=0.8, p0=0.6, l_planck=1.3)


@pytest.fixture
def theta_only() -> NCParams:
    """只有坐标非对易，θ̃² = 1"""
    return NCParams.from_moments(theta_sq_tilde=1.0, eta_sq_tilde=0.0)
