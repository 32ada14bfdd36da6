"""
非对易相空间中氢原子能级的微扰修正（Hartree）
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray

from ncphase.core.exceptions import DivergentFormulaError, InvalidParameterError
from ncphase.domain.models import (
    CorrectionResult,
    NCParams,
    QuantumNumbers,
    ScanRow,
    TransitionShift,
    VanishingReport,
)
from ncphase.domain.types import CorrectionRoute
from ncphase.physics.hydrogen import radial_moment
from ncphase.physics.oscillator import GaussianOracle, eta_sq_mean, theta_mean, theta_sq_mean

logger = logging.getLogger(__name__)

# ns 能级公式中的数值常数 1.72，按精确小数处理
NS_THETA_CONSTANT = Fraction(43, 25)

# 1s-2s 跃迁 θ 部分的系数 −3π/16
THETA_TRANSITION_SHIFT = Fraction(-3, 16)
# 1s-2s 跃迁 η 部分的系数 13/4
ETA_TRANSITION_SHIFT = Fraction(13, 4)

MAX_SCAN_N = 50


def eta_coefficient(n: int, l: int) -> Fraction:  # noqa: E741
    """ΔE^(η) / η̃² = n²(5n² + 1 − 3l(l+1)) / 24"""
    q = QuantumNumbers(n=n, l=l)
    return Fraction(q.n**2 * (5 * q.n**2 + 1 - 3 * q.l * (q.l + 1)), 24)


def theta_bracket(n: int, l: int) -> Fraction:  # noqa: E741
    """
    ΔE^(θ) 中括号内四项之和 B(n, l)，l ≥ 2

    Raises:
        DivergentFormulaError: l = 0 或 l = 1
    """
    q = QuantumNumbers(n=n, l=l)
    if q.l == 0:
        raise DivergentFormulaError(
            "the generic theta correction diverges for l=0; use the ns formula (delta_ns)"
        )
    if q.l == 1:
        raise DivergentFormulaError(
            "the generic theta correction diverges for l=1; no finite np result is available"
        )
    n2, big_l = q.n * q.n, q.l * (q.l + 1)
    l = q.l  # noqa: E741
    radial = 5 * n2 - 3 * big_l + 1
    return (
        Fraction(1, 6 * big_l * (2 * l + 1))
        - Fraction(6 * n2 - 2 * big_l, 3 * big_l * (2 * l + 1) * (2 * l + 3) * (2 * l - 1))
        + Fraction(radial, 2 * (l + 2) * (2 * l + 1) * (2 * l + 3) * (l - 1) * (2 * l - 1))
        - Fraction(5, 6)
        * Fraction(
            radial,
            l * (l + 1) * (l + 2) * (2 * l + 1) * (2 * l + 3) * (l - 1) * (2 * l - 1),
        )
    )


def theta_bracket_reduced(n: int, l: int) -> Fraction:  # noqa: E741
    """B(n, l) 的约化形式 (3n²L − n² − L² − L + 1) / (6L(2l+1)(2l+3)(2l−1)(L−2))，L = l(l+1)"""
    if l < 2:
        raise DivergentFormulaError(f"reduced bracket undefined for l={l}")
    big_l = l * (l + 1)
    n2 = n * n
    return Fraction(
        3 * n2 * big_l - n2 - big_l * big_l - big_l + 1,
        6 * big_l * (2 * l + 1) * (2 * l + 3) * (2 * l - 1) * (big_l - 2),
    )


def delta_eta(n: int, l: int, params: NCParams) -> float:  # noqa: E741
    """动量非对易引起的一阶修正"""
    return float(eta_coefficient(n, l)) * eta_sq_mean(params)


def delta_theta(n: int, l: int, params: NCParams) -> float:  # noqa: E741
    """
    坐标非对易引起的一阶修正 −(θ̃²/n⁵) B(n, l)

    Raises:
        DivergentFormulaError: l < 2
    """
    coefficient = -theta_bracket(n, l) / Fraction(n**5)
    return float(coefficient) * theta_sq_mean(params)


def ns_eta_part(n: int, params: NCParams) -> float:
    return float(eta_coefficient(n, 0)) * eta_sq_mean(params)


def ns_theta_part(n: int, params: NCParams) -> float:
    """1.72 π θ̃ / (8n³)"""
    return float(NS_THETA_CONSTANT) * math.pi * theta_mean(params) / (8.0 * n**3)


def delta_ns(n: int, params: NCParams) -> float:
    """
    ns 能级修正 n²(5n²+1)η̃²/24 + 1.72 π θ̃ / (8n³)

    Raises:
        QuantumNumberError: n < 1
    """
    QuantumNumbers(n=n, l=0)
    return ns_eta_part(n, params) + ns_theta_part(n, params)


def correction(n: int, l: int, params: NCParams) -> CorrectionResult:  # noqa: E741
    """
    能级 (n, l) 的一阶修正，l = 0 走 ns 公式

    Raises:
        QuantumNumberError: 量子数非法
        DivergentFormulaError: l = 1
    """
    if l == 0:
        return CorrectionResult(
            n=n,
            l=0,
            delta_theta=ns_theta_part(n, params),
            delta_eta=ns_eta_part(n, params),
            route=CorrectionRoute.NS,
        )
    return CorrectionResult(
        n=n,
        l=l,
        delta_theta=delta_theta(n, l, params),
        delta_eta=delta_eta(n, l, params),
        route=CorrectionRoute.GENERIC,
    )


def transition_shift(params: NCParams) -> TransitionShift:
    """1s-2s 跃迁能量修正，已发表系数与 ns 公式能级差两条路径并列"""
    theta = theta_mean(params)
    eta_sq = eta_sq_mean(params)
    return TransitionShift(
        theta_direct=float(THETA_TRANSITION_SHIFT) * math.pi * theta,
        eta_direct=float(ETA_TRANSITION_SHIFT) * eta_sq,
        theta_levels=ns_theta_part(2, params) - ns_theta_part(1, params),
        eta_levels=ns_eta_part(2, params) - ns_eta_part(1, params),
    )


def scan_levels(n_max: int, params: NCParams) -> list[ScanRow]:
    """
    按 (n, l) 顺序列出 n ≤ n_max 的全部能级修正；l = 1 行只给出 η 部分

    Raises:
        InvalidParameterError: n_max 不在 1..50
    """
    if not 1 <= n_max <= MAX_SCAN_N:
        raise InvalidParameterError(f"n_max must be in 1..{MAX_SCAN_N}, got {n_max}")
    rows: list[ScanRow] = []
    for n in range(1, n_max + 1):
        for l in range(n):  # noqa: E741
            if l == 1:
                rows.append(
                    ScanRow(
                        n=n,
                        l=l,
                        delta_theta=None,
                        delta_eta=delta_eta(n, l, params),
                        total=None,
                        route=CorrectionRoute.UNSUPPORTED,
                    )
                )
                continue
            result = correction(n, l, params)
            rows.append(
                ScanRow(
                    n=n,
                    l=l,
                    delta_theta=result.delta_theta,
                    delta_eta=result.delta_eta,
                    total=result.total,
                    route=result.route,
                )
            )
    return rows


# ----------------------------------------------------------------------
# 二阶 (η·L) 通道与一阶项为零的检查
# ----------------------------------------------------------------------


@lru_cache(maxsize=64)
def angular_momentum_matrices(l: int) -> tuple[NDArray[np.complex128], ...]:  # noqa: E741
    """
    |l, m⟩ 基（m 从 l 到 −l）下的 (L_x, L_y, L_z)，ħ = 1
    """
    ms = np.arange(l, -l - 1, -1, dtype=np.float64)
    dim = ms.size
    l_plus = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(1, dim):
        m = ms[col]
        l_plus[col - 1, col] = math.sqrt(l * (l + 1) - m * (m + 1))
    l_minus = l_plus.conj().T
    lx = (l_plus + l_minus) / 2.0
    ly = (l_plus - l_minus) / 2.0j
    lz = np.diag(ms).astype(np.complex128)
    return lx, ly, lz


def _m_index(l: int, m: int) -> int:  # noqa: E741
    return l - m


def second_order_eta_L(  # noqa: N802
    n: int, l: int, omega: float, params: NCParams, m: int = 0  # noqa: E741
) -> float:
    """
    (η·L)/2M 项经单个 b 振子量子的二阶贡献

    中间态 |n, l, m′⟩ ⊗ |1_k⟩，能量分母恰为 −ħω：
        Σ_k Σ_m′ |½ ⟨1_k|η_k|0⟩ ⟨m′|L_k|m⟩|² / (−ω)，
    其中 |⟨1_k|η_k|0⟩|² = ⟨η_k²⟩ = η̃²/3。

    Raises:
        QuantumNumberError: 量子数非法
        InvalidParameterError: ω ≤ 0
    """
    q = QuantumNumbers(n=n, l=l, m=m)
    if omega <= 0:
        raise InvalidParameterError(f"omega must be positive, got {omega}")
    eta_component_sq = eta_sq_mean(params) / 3.0
    column = _m_index(q.l, q.m)
    total = 0.0
    for lk in angular_momentum_matrices(q.l):
        weights = np.abs(lk[:, column]) ** 2
        total += float(np.sum(0.25 * eta_component_sq * weights))
    return total / (-omega)


def second_order_eta_L_closed_form(  # noqa: N802
    n: int, l: int, omega: float, params: NCParams  # noqa: E741
) -> float:
    """−η̃² l(l+1) / (12ω)"""
    q = QuantumNumbers(n=n, l=l)
    if omega <= 0:
        raise InvalidParameterError(f"omega must be positive, got {omega}")
    return -eta_sq_mean(params) * q.l * (q.l + 1) / (12.0 * omega)


DEFAULT_VANISHING_STATE = QuantumNumbers(n=2, l=1, m=1)


def first_order_vanishing_check(
    params: NCParams,
    state: QuantumNumbers = DEFAULT_VANISHING_STATE,
    oracle: GaussianOracle | None = None,
    tolerance: float = 1e-12,
) -> VanishingReport:
    """
    一阶项 ⟨(η·L)⟩/2M 与 ⟨(e²/2r³)(θ·L)⟩ 在振子基态上的期望

    振子因子 ⟨θ_k⟩、⟨η_k⟩ 由高斯求积给出，氢原子因子取 ⟨L_k⟩ 与 ⟨r⁻³⟩。
    """
    oracle = oracle or GaussianOracle()
    column = _m_index(state.l, state.m)
    l_means = [float(lk[column, column].real) for lk in angular_momentum_matrices(state.l)]

    eta_term = 0.5 * sum(
        oracle.eta_first_moment(params, k) * l_means[k - 1] for k in (1, 2, 3)
    )
    if state.l == 0:
        theta_term = 0.0
    else:
        inv_r3 = float(radial_moment(state, -3))
        theta_term = 0.5 * inv_r3 * sum(
            oracle.theta_first_moment(params, k) * l_means[k - 1] for k in (1, 2, 3)
        )
    report = VanishingReport(
        state=state, eta_term=eta_term, theta_term=theta_term, tolerance=tolerance
    )
    if not report.passed:
        logger.warning(
            "First-order terms do not vanish: eta=%g theta=%g", eta_term, theta_term
        )
    return report
