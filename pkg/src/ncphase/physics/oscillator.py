"""
辅助振子基态统计量

θ_i = (l0/ħ) a_i、η_i = (p0/ħ) p^b_i，两个振子处于基态，
振子长度 l_P = √(ħ / m_osc ω)。单位 ħ = a_B = 1。
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence

import numpy as np

from ncphase.core.exceptions import InvalidAxisError, InvalidParameterError
from ncphase.domain.models import GAUSSIAN_THETA_RATIO, NCParams
from ncphase.physics.hydrogen import energy0
from ncphase.utils.quadrature import (
    DEFAULT_HERMITE_NODES,
    FloatArray,
    gaussian_expectation,
    isotropic_radial_expectation,
)

logger = logging.getLogger(__name__)

# 用户给出的 θ̃、θ̃² 偏离高斯关系的告警阈值
RATIO_WARN_TOL = 1e-9

_Integrand = Callable[[FloatArray], FloatArray]


def _check_axis(*axes: int) -> None:
    for axis in axes:
        if axis not in (1, 2, 3):
            raise InvalidAxisError(f"axis must be 1, 2 or 3, got {axis}")


def theta_mean(params: NCParams) -> float:
    """θ̃ = ħ⟨θ⟩/a_B² = 2 l0 l_P / √π"""
    if params.is_raw:
        return 2.0 * (params.l0 or 0.0) * (params.l_planck or 0.0) / math.sqrt(math.pi)
    return params.theta_tilde or 0.0


def theta_sq_mean(params: NCParams) -> float:
    """θ̃² = ħ²⟨θ²⟩/a_B⁴ = (3/2) l0² l_P²"""
    if params.is_raw:
        return 1.5 * ((params.l0 or 0.0) * (params.l_planck or 0.0)) ** 2
    theta_sq = params.theta_sq_tilde or 0.0
    theta = params.theta_tilde or 0.0
    expected = GAUSSIAN_THETA_RATIO * theta**2
    if abs(theta_sq - expected) > RATIO_WARN_TOL * max(theta_sq, expected):
        logger.warning(
            "theta_sq_tilde=%g is inconsistent with the ground-state relation (expected %g)",
            theta_sq,
            expected,
        )
    return theta_sq


def eta_sq_mean(params: NCParams) -> float:
    """η̃² = a_B⁴⟨η²⟩/ħ² = (3/2) p0² / l_P²"""
    if params.is_raw:
        return 1.5 * ((params.p0 or 0.0) / (params.l_planck or 1.0)) ** 2
    return params.eta_sq_tilde or 0.0


def eta_covariance(params: NCParams, i: int, j: int) -> float:
    """⟨η_i η_j⟩ = (η̃²/3) δ_ij"""
    _check_axis(i, j)
    return eta_sq_mean(params) / 3.0 if i == j else 0.0


def theta_covariance(params: NCParams, i: int, j: int) -> float:
    """⟨θ_i θ_j⟩ = (θ̃²/3) δ_ij"""
    _check_axis(i, j)
    return theta_sq_mean(params) / 3.0 if i == j else 0.0


def coordinate_scale(params: NCParams) -> float:
    """θ 分量的高斯宽度 l0·l_P"""
    if params.is_raw:
        return (params.l0 or 0.0) * (params.l_planck or 0.0)
    return math.sqrt(2.0 * (params.theta_sq_tilde or 0.0) / 3.0)


def momentum_scale(params: NCParams) -> float:
    """η 分量的高斯宽度 p0/l_P"""
    if params.is_raw:
        return (params.p0 or 0.0) / (params.l_planck or 1.0)
    return math.sqrt(2.0 * (params.eta_sq_tilde or 0.0) / 3.0)


def oscillator_ground_energy(omega: float) -> float:
    """
    两个振子的基态能量 3ħω

    Raises:
        InvalidParameterError: ω ≤ 0
    """
    if omega <= 0:
        raise InvalidParameterError(f"omega must be positive, got {omega}")
    return 3.0 * omega


def oscillator_mass(omega: float, l_planck: float) -> float:
    """由 m_osc ω = ħ / l_P² 确定的振子质量"""
    if omega <= 0 or l_planck <= 0:
        raise InvalidParameterError("omega and l_planck must be positive")
    return 1.0 / (omega * l_planck**2)


def unperturbed_energy(
    n: int, n_a: Sequence[int], n_b: Sequence[int], omega: float
) -> float:
    """
    H₀ 的本征值 −1/(2n²) + ω(Σn^a + Σn^b + 3)

    Args:
        n: 氢原子主量子数
        n_a: a 振子三个方向的量子数
        n_b: b 振子三个方向的量子数
        omega: 振子频率
    """
    if len(n_a) != 3 or len(n_b) != 3 or min(*n_a, *n_b) < 0:
        raise InvalidParameterError(
            "oscillator quantum numbers must be three non-negative integers"
        )
    return float(energy0(n)) + oscillator_ground_energy(omega) + omega * (sum(n_a) + sum(n_b))


class GaussianOracle:
    """
    基态高斯积分的数值校验

    多项式矩用 64 节点乘积 Gauss–Hermite 规则；⟨|a|⟩ 化为径向积分。
    """

    def __init__(self, nodes: int = DEFAULT_HERMITE_NODES) -> None:
        self._nodes = nodes

    def _expect(self, f: _Integrand, scale: float) -> float:
        if scale == 0.0:
            return float(f(np.zeros((1, 3)))[0])
        return gaussian_expectation(f, scale, self._nodes)

    def theta_mean(self, params: NCParams) -> float:
        scale = coordinate_scale(params)
        if scale == 0.0:
            return 0.0
        return isotropic_radial_expectation(lambda t: t, scale)

    def theta_sq_mean(self, params: NCParams) -> float:
        return self._expect(_squared_norm, coordinate_scale(params))

    def eta_sq_mean(self, params: NCParams) -> float:
        return self._expect(_squared_norm, momentum_scale(params))

    def theta_covariance(self, params: NCParams, i: int, j: int) -> float:
        _check_axis(i, j)
        return self._expect(lambda q: q[:, i - 1] * q[:, j - 1], coordinate_scale(params))

    def eta_covariance(self, params: NCParams, i: int, j: int) -> float:
        _check_axis(i, j)
        return self._expect(lambda q: q[:, i - 1] * q[:, j - 1], momentum_scale(params))

    def theta_first_moment(self, params: NCParams, i: int) -> float:
        """⟨θ_i⟩（奇函数，应为 0）"""
        _check_axis(i)
        return self._expect(lambda q: q[:, i - 1], coordinate_scale(params))

    def eta_first_moment(self, params: NCParams, i: int) -> float:
        """⟨η_i⟩（奇函数，应为 0）"""
        _check_axis(i)
        return self._expect(lambda q: q[:, i - 1], momentum_scale(params))


def _squared_norm(q: FloatArray) -> FloatArray:
    return np.sum(q * q, axis=1)
