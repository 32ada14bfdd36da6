"""
氢原子束缚态 - 能级、径向波函数与径向矩

Hartree 原子单位: ħ = M = e = 1，长度以 a_B 计。
闭式与递推在有理数上精确计算，只有求积路径使用浮点数。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import roots_genlaguerre

from ncphase.core.exceptions import (
    DivergentMomentError,
    InvalidParameterError,
    QuantumNumberError,
)
from ncphase.domain.models import MomentReport, QuantumNumbers
from ncphase.domain.types import MomentMethod
from ncphase.utils.numbers import fraction_str, relative_gap
from ncphase.utils.quadrature import adaptive_integral

logger = logging.getLogger(__name__)

# 径向积分的上限 r_max = 2n(n + TAIL_MARGIN)
TAIL_MARGIN = 40


def energy0(n: int) -> Fraction:
    """
    未微扰能级 −1/(2n²) Hartree

    Raises:
        QuantumNumberError: n < 1
    """
    if n < 1:
        raise QuantumNumberError(f"n must be >= 1, got n={n}")
    return Fraction(-1, 2 * n * n)


def is_moment_defined(l: int, s: int) -> bool:  # noqa: E741
    """∫ R² r^{s+2} dr 在原点收敛当且仅当 s ≥ −2l − 2"""
    return s >= -2 * l - 2


def _require_defined(q: QuantumNumbers, s: int) -> None:
    if not is_moment_defined(q.l, s):
        raise DivergentMomentError(
            f"<r^{s}> diverges for l={q.l}; requires s >= {-2 * q.l - 2}"
        )


def closed_form_moment(n: int, l: int, s: int) -> Fraction:  # noqa: E741
    """
    s ∈ {−3, …, 2} 的标准闭式

    Raises:
        InvalidParameterError: s 不在闭式范围内
        DivergentMomentError: 矩发散
    """
    if not is_moment_defined(l, s):
        raise DivergentMomentError(f"<r^{s}> diverges for l={l}")
    big_l = l * (l + 1)
    n2 = n * n
    if s == 0:
        return Fraction(1)
    if s == 1:
        return Fraction(3 * n2 - big_l, 2)
    if s == 2:
        return Fraction(n2 * (5 * n2 + 1 - 3 * big_l), 2)
    if s == -1:
        return Fraction(1, n2)
    if s == -2:
        return 1 / (Fraction(n**3) * (l + Fraction(1, 2)))
    if s == -3:
        return 1 / (Fraction(n**3) * l * (l + Fraction(1, 2)) * (l + 1))
    raise InvalidParameterError(f"no closed form for s={s}; use the recursion")


def kramers_coefficients(
    n: int, l: int, s: int  # noqa: E741
) -> tuple[Fraction, Fraction, Fraction]:
    """
    Kramers–Pasternack 关系
        c0·⟨r^s⟩ + c1·⟨r^{s−1}⟩ + c2·⟨r^{s−2}⟩ = 0
    的系数 (c0, c1, c2)
    """
    return (
        Fraction(s + 1, n * n),
        Fraction(-(2 * s + 1)),
        Fraction(s, 4) * ((2 * l + 1) ** 2 - s * s),
    )


@lru_cache(maxsize=4096)
def recursion_moment(n: int, l: int, s: int) -> Fraction:  # noqa: E741
    """
    由递推得到 ⟨r^s⟩

    向上递推以 ⟨r⁰⟩ = 1、⟨r⁻¹⟩ = 1/n² 为种子；
    s ≤ −3 时以 ⟨r⁻¹⟩、⟨r⁻²⟩ 为种子向下递推。
    """
    if not is_moment_defined(l, s):
        raise DivergentMomentError(f"<r^{s}> diverges for l={l}")
    if s in (0, -1, -2):
        return closed_form_moment(n, l, s)
    if s > 0:
        c0, c1, c2 = kramers_coefficients(n, l, s)
        return -(c1 * recursion_moment(n, l, s - 1) + c2 * recursion_moment(n, l, s - 2)) / c0
    # 在 s+2 处的关系中解出 ⟨r^s⟩
    c0, c1, c2 = kramers_coefficients(n, l, s + 2)
    return -(c0 * recursion_moment(n, l, s + 2) + c1 * recursion_moment(n, l, s + 1)) / c2


def radial_moment(
    q: QuantumNumbers, s: int, method: MomentMethod = MomentMethod.CLOSED
) -> Fraction:
    """
    ⟨r^s⟩，单位 a_B^s，与 m 无关

    Args:
        q: 量子数
        s: 幂次
        method: closed 时 −3 ≤ s ≤ 2 用闭式，其余递推；recursion 时全部递推

    Raises:
        DivergentMomentError: s < −2l − 2
    """
    _require_defined(q, s)
    if method is MomentMethod.CLOSED and -3 <= s <= 2:
        return closed_form_moment(q.n, q.l, s)
    return recursion_moment(q.n, q.l, s)


def kramers_residual(q: QuantumNumbers, s: int) -> Fraction:
    """以 radial_moment 的值代入 Kramers–Pasternack 关系得到的精确残差"""
    c0, c1, c2 = kramers_coefficients(q.n, q.l, s)
    return (
        c0 * radial_moment(q, s)
        + c1 * radial_moment(q, s - 1)
        + c2 * radial_moment(q, s - 2)
    )


def laguerre_coefficients(k: int, alpha: int) -> tuple[Fraction, ...]:
    """L^α_k(x) = Σ_i (−1)^i C(k+α, k−i) x^i / i! 的精确系数"""
    return tuple(
        Fraction((-1) ** i * math.comb(k + alpha, k - i), math.factorial(i)) for i in range(k + 1)
    )


@dataclass(frozen=True)
class RadialState:
    """
    R_nl(r) = N e^{−ρ/2} ρ^l L^{2l+1}_{n−l−1}(ρ)，ρ = 2r/n

    Attributes:
        n: 主量子数
        l: 轨道量子数
        norm_sq: N² = (2/n)³ (n−l−1)! / (2n (n+l)!)
        laguerre: Laguerre 多项式系数（升幂）
    """

    n: int
    l: int  # noqa: E741
    norm_sq: Fraction
    laguerre: tuple[Fraction, ...]

    @classmethod
    def of(cls, n: int, l: int) -> RadialState:  # noqa: E741
        q = QuantumNumbers(n=n, l=l)
        norm_sq = Fraction(2, q.n) ** 3 * Fraction(
            math.factorial(q.n - q.l - 1), 2 * q.n * math.factorial(q.n + q.l)
        )
        return cls(q.n, q.l, norm_sq, laguerre_coefficients(q.n - q.l - 1, 2 * q.l + 1))

    @cached_property
    def norm(self) -> float:
        return math.sqrt(self.norm_sq)

    @cached_property
    def _float_coeffs(self) -> list[float]:
        return [float(c) for c in self.laguerre]

    def laguerre_value(self, rho: ArrayLike) -> NDArray[np.float64]:
        return np.asarray(
            np.polynomial.polynomial.polyval(rho, self._float_coeffs), dtype=np.float64
        )

    def value_at(self, r: float) -> float:
        """标量版本，供求积积分函数使用"""
        rho = 2.0 * r / self.n
        poly = 0.0
        for c in reversed(self._float_coeffs):
            poly = poly * rho + c
        return self.norm * math.exp(-rho / 2.0) * rho**self.l * poly

    def __call__(self, r: ArrayLike) -> NDArray[np.float64]:
        rho = 2.0 * np.asarray(r, dtype=np.float64) / self.n
        return self.norm * np.exp(-rho / 2.0) * rho**self.l * self.laguerre_value(rho)

    def nodes(self) -> list[float]:
        """径向节点位置（a_B）"""
        k = self.n - self.l - 1
        if k == 0:
            return []
        roots, _ = roots_genlaguerre(k, 2 * self.l + 1)
        return [float(x) * self.n / 2.0 for x in roots]


def radial_wavefunction(n: int, l: int, r: ArrayLike) -> NDArray[np.float64]:  # noqa: E741
    """R_nl(r)，r 以 a_B 计"""
    return RadialState.of(n, l)(r)


def quadrature_moment(q: QuantumNumbers, s: int, tol: float = 1e-10) -> float:
    """
    ∫₀^{r_max} R_nl² r^{s+2} dr 的自适应求积，仅作为闭式的独立校验

    Raises:
        InvalidParameterError: tol ≤ 0
        DivergentMomentError: s ≤ −(2l + 3)
        QuadratureError: 积分不收敛
    """
    if tol <= 0:
        raise InvalidParameterError(f"tol must be positive, got {tol}")
    _require_defined(q, s)
    state = RadialState.of(q.n, q.l)
    r_max = 2.0 * q.n * (q.n + TAIL_MARGIN)

    def integrand(r: float) -> float:
        value = state.value_at(r)
        return value * value * r ** (s + 2)

    result = adaptive_integral(integrand, 0.0, r_max, tol=tol, points=state.nodes())
    logger.debug("quadrature <r^%d> for %s = %.17g", s, q.label, result)
    return result


def moment_report(
    q: QuantumNumbers,
    s: int,
    tol: float = 1e-10,
    method: MomentMethod = MomentMethod.CLOSED,
) -> MomentReport:
    """精确值与求积值对照"""
    exact = radial_moment(q, s, method)
    quadrature = quadrature_moment(q, s, tol)
    return MomentReport(
        n=q.n,
        l=q.l,
        s=s,
        method=method,
        exact=fraction_str(exact),
        value=float(exact),
        quadrature=quadrature,
        relative_gap=relative_gap(quadrature, float(exact)),
    )
