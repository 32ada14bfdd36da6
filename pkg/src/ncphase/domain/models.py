"""
Pydantic 数据模型 - 定义核心数据结构
"""

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from ncphase.core.exceptions import QuantumNumberError
from ncphase.domain.types import BoundRoute, CorrectionRoute, MomentMethod


class QuantumNumbers(BaseModel):
    """氢原子束缚态标签 (n, l, m)"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="主量子数")
    l: int = Field(0, description="轨道量子数")  # noqa: E741
    m: int = Field(0, description="磁量子数")

    @model_validator(mode="after")
    def _check_ranges(self) -> "QuantumNumbers":
        if self.n < 1:
            raise QuantumNumberError(f"n must be >= 1, got n={self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise QuantumNumberError(f"l must satisfy 0 <= l <= n-1, got n={self.n}, l={self.l}")
        if not -self.l <= self.m <= self.l:
            raise QuantumNumberError(f"m must satisfy -l <= m <= l, got l={self.l}, m={self.m}")
        return self

    @property
    def label(self) -> str:
        """光谱记号，例如 2p"""
        letters = "spdfghiklmnoqrtuv"
        letter = letters[self.l] if self.l < len(letters) else f"[l={self.l}]"
        return f"{self.n}{letter}"


class NCParams(BaseModel):
    """
    非对易参数输入

    两种互斥的形式:
    - 原始形式 (l0, p0, l_planck)，单位 ħ = a_B = 1
    - 无量纲矩形式 (theta_tilde, theta_sq_tilde, eta_sq_tilde)
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    l0: float | None = Field(None, ge=0, description="长度量纲常数 l₀ (a_B)")
    p0: float | None = Field(None, ge=0, description="动量量纲常数 p₀ (ħ/a_B)")
    l_planck: float | None = Field(None, gt=0, description="振子长度 √(ħ/m_osc ω) (a_B)")

    theta_tilde: float | None = Field(None, ge=0, description="θ̃ = ħ⟨θ⟩/a_B²")
    theta_sq_tilde: float | None = Field(None, ge=0, description="θ̃² = ħ²⟨θ²⟩/a_B⁴")
    eta_sq_tilde: float | None = Field(None, ge=0, description="η̃² = a_B⁴⟨η²⟩/ħ²")

    @model_validator(mode="before")
    @classmethod
    def _derive_theta_moment(cls, data: Any) -> Any:
        """只给出 θ̃、θ̃² 之一时，按基态高斯关系 θ̃² = (3π/8)(θ̃)² 补出另一个"""
        if not isinstance(data, dict):
            return data
        theta, theta_sq = data.get("theta_tilde"), data.get("theta_sq_tilde")
        if isinstance(theta, (int, float)) and theta_sq is None and theta >= 0:
            return {**data, "theta_sq_tilde": GAUSSIAN_THETA_RATIO * theta**2}
        if isinstance(theta_sq, (int, float)) and theta is None and theta_sq >= 0:
            return {**data, "theta_tilde": math.sqrt(theta_sq / GAUSSIAN_THETA_RATIO)}
        return data

    @model_validator(mode="after")
    def _check_single_form(self) -> "NCParams":
        raw = any(v is not None for v in (self.l0, self.p0, self.l_planck))
        moments = any(
            v is not None for v in (self.theta_tilde, self.theta_sq_tilde, self.eta_sq_tilde)
        )
        if raw and moments:
            raise ValueError(
                "give either (l0, p0, l_planck) or the dimensionless moments, not both"
            )
        if raw and self.l_planck is None:
            raise ValueError("raw parameters need l_planck")
        return self

    @property
    def is_raw(self) -> bool:
        """是否为原始形式"""
        return self.l_planck is not None

    @classmethod
    def from_raw(
        cls, l0: float = 0.0, p0: float = 0.0, l_planck: float | None = None
    ) -> "NCParams":
        """由 l₀、p₀、l_P 构造；l_P 缺省为以 a_B 表示的 Planck 长度"""
        if l_planck is None:
            from ncphase.infra.constants import default_constants

            l_planck = default_constants().planck_length_bohr
        return cls(l0=l0, p0=p0, l_planck=l_planck)

    @classmethod
    def from_moments(
        cls,
        theta_tilde: float | None = None,
        theta_sq_tilde: float | None = None,
        eta_sq_tilde: float = 0.0,
    ) -> "NCParams":
        """
        由无量纲矩构造

        只给出 θ̃、θ̃² 之一时，另一个按基态高斯关系 θ̃² = (3π/8)(θ̃)² 推出。
        """
        if theta_tilde is None and theta_sq_tilde is None:
            theta_tilde, theta_sq_tilde = 0.0, 0.0
        return cls(
            theta_tilde=theta_tilde,
            theta_sq_tilde=theta_sq_tilde,
            eta_sq_tilde=eta_sq_tilde,
        )

    def scaled(self, factor: float) -> "NCParams":
        """l₀、p₀ 同乘 factor（矩形式下按各自的幂次缩放）"""
        if self.is_raw:
            return self.model_copy(
                update={"l0": (self.l0 or 0.0) * factor, "p0": (self.p0 or 0.0) * factor}
            )
        return self.model_copy(
            update={
                "theta_tilde": (self.theta_tilde or 0.0) * factor,
                "theta_sq_tilde": (self.theta_sq_tilde or 0.0) * factor**2,
                "eta_sq_tilde": (self.eta_sq_tilde or 0.0) * factor**2,
            }
        )


# ⟨a²⟩ / ⟨|a|⟩² 在三维振子基态上的取值
GAUSSIAN_THETA_RATIO = 3.0 * math.pi / 8.0


class CorrectionResult(BaseModel):
    """一阶能级修正，按 θ 部分与 η 部分分解（Hartree）"""

    model_config = ConfigDict(frozen=True)

    n: int
    l: int  # noqa: E741
    delta_theta: float = Field(..., description="坐标非对易引起的修正")
    delta_eta: float = Field(..., description="动量非对易引起的修正")
    route: CorrectionRoute
    unit: str = "hartree"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total(self) -> float:
        """总修正"""
        return self.delta_theta + self.delta_eta

    @model_validator(mode="after")
    def _check_route(self) -> "CorrectionResult":
        expected = CorrectionRoute.NS if self.l == 0 else CorrectionRoute.GENERIC
        if self.route != expected:
            raise ValueError(f"route {self.route.value} does not match l={self.l}")
        return self


class TransitionShift(BaseModel):
    """1s-2s 跃迁能量的非对易修正，两条计算路径并列"""

    model_config = ConfigDict(frozen=True)

    theta_direct: float = Field(..., description="Δθ = −3π θ̃/16")
    eta_direct: float = Field(..., description="Δη = 13 η̃²/4")
    theta_levels: float = Field(..., description="ΔE_2s − ΔE_1s 的 θ 部分")
    eta_levels: float = Field(..., description="ΔE_2s − ΔE_1s 的 η 部分")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def theta_relative_gap(self) -> float:
        """两条路径 Δθ 的相对差"""
        if self.theta_levels == 0.0:
            return 0.0 if self.theta_direct == 0.0 else math.inf
        return abs(self.theta_direct - self.theta_levels) / abs(self.theta_levels)


class VanishingReport(BaseModel):
    """一阶项期望值为零的检查结果"""

    model_config = ConfigDict(frozen=True)

    state: QuantumNumbers
    eta_term: float = Field(..., description="⟨(η·L)⟩/2M")
    theta_term: float = Field(..., description="⟨(e²/2r³)(θ·L)⟩")
    tolerance: float = 1e-12

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """两项都低于容差"""
        return abs(self.eta_term) < self.tolerance and abs(self.theta_term) < self.tolerance


class TransitionReference(BaseModel):
    """1s-2s 跃迁频率的参考测量值"""

    model_config = ConfigDict(frozen=True)

    frequency_hz: int
    uncertainty_hz: int
    rel_accuracy: float

    @property
    def derived_rel_accuracy(self) -> float:
        """由不确定度与频率算出的相对精度"""
        return self.uncertainty_hz / self.frequency_hz


class ThetaBound(BaseModel):
    """ħ⟨θ⟩ 的上界"""

    model_config = ConfigDict(frozen=True)

    theta_tilde: float = Field(..., ge=0, description="θ̃ 上界（无量纲）")
    theta_si: float = Field(..., ge=0, description="ħ⟨θ⟩ 上界 (m²)")
    rel_accuracy: float
    budget_fraction: float
    route: BoundRoute


class EtaBound(BaseModel):
    """ħ√⟨η²⟩ 的上界"""

    model_config = ConfigDict(frozen=True)

    eta_tilde: float = Field(..., ge=0, description="η̃ 上界（无量纲）")
    eta_si: float = Field(..., ge=0, description="ħ√⟨η²⟩ 上界 (kg²·m²/s²)")
    rel_accuracy: float
    budget_fraction: float


class BoundResult(BaseModel):
    """参数上界估计及其与已发表数值的对照"""

    model_config = ConfigDict(frozen=True)

    theta: ThetaBound
    eta: EtaBound
    accuracy_used: float
    split: float = Field(..., description="分配给 θ 的误差预算比例，η 取其余部分")
    published_theta_si: float = 1e-36
    published_eta_si: float = 1e-61

    @computed_field  # type: ignore[prop-decorator]
    @property
    def paper_order_match(self) -> bool:
        """θ 上界与已发表值的数量级是否一致"""
        return _decade(self.theta.theta_si) == _decade(self.published_theta_si)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def paper_value_discrepancy(self) -> bool:
        """η 上界与已发表值相差超过一个数量级"""
        if self.eta.eta_si <= 0.0:
            return True
        return abs(math.log10(self.eta.eta_si) - math.log10(self.published_eta_si)) > 1.0


def _decade(value: float) -> int | None:
    if value <= 0.0:
        return None
    return math.floor(math.log10(value))


class SuiteEntry(BaseModel):
    """代数验证报告中的一条恒等式"""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    id: str = Field(..., description="恒等式标识，形如 group.name")
    lhs: str = Field(..., description="左端规范形（线性语法）")
    rhs: str = Field(..., description="右端规范形（线性语法）")
    passed: bool = Field(..., alias="pass", description="两端规范形是否一致")


class SuiteReport(BaseModel):
    """完整代数验证报告"""

    model_config = ConfigDict(frozen=True)

    seed: int
    entries: list[SuiteEntry] = Field(default_factory=list)

    @property
    def failures(self) -> list[SuiteEntry]:
        """所有未通过的条目"""
        return [entry for entry in self.entries if not entry.passed]

    @property
    def all_passed(self) -> bool:
        """是否全部通过"""
        return not self.failures

    def summary(self) -> dict[str, tuple[int, int]]:
        """按组统计 (通过数, 总数)"""
        counts: dict[str, tuple[int, int]] = {}
        for entry in self.entries:
            group = entry.id.split(".", 1)[0]
            ok, total = counts.get(group, (0, 0))
            counts[group] = (ok + int(entry.passed), total + 1)
        return counts


class MomentReport(BaseModel):
    """径向矩：精确值与求积值对照"""

    model_config = ConfigDict(frozen=True)

    n: int
    l: int  # noqa: E741
    s: int
    method: MomentMethod
    exact: str = Field(..., description="精确有理值，形如 p/q")
    value: float
    quadrature: float
    relative_gap: float


class ScanRow(BaseModel):
    """能级扫描表中的一行"""

    model_config = ConfigDict(frozen=True)

    n: int
    l: int  # noqa: E741
    delta_theta: float | None
    delta_eta: float
    total: float | None
    route: CorrectionRoute
