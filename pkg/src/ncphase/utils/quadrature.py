"""
数值积分工具 - 三维 Gauss–Hermite 乘积规则与自适应一维积分
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Sequence
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy import integrate

from ncphase.core.exceptions import QuadratureError

FloatArray = NDArray[np.float64]

# 每个轴的节点数
DEFAULT_HERMITE_NODES = 64


@lru_cache(maxsize=4)
def gauss_hermite_3d(n: int = DEFAULT_HERMITE_NODES) -> tuple[FloatArray, FloatArray]:
    """
    单位高斯密度 e^{−|u|²}/π^{3/2} 上的三维乘积 Gauss–Hermite 规则

    Args:
        n: 每轴节点数

    Returns:
        (形状 (n³, 3) 的节点, 形状 (n³,) 的权重)，权重之和为 1
    """
    knots, weights = np.polynomial.hermite.hermgauss(n)
    weights = weights / np.sqrt(np.pi)
    gx, gy, gz = np.meshgrid(knots, knots, knots, indexing="ij")
    wx, wy, wz = np.meshgrid(weights, weights, weights, indexing="ij")
    points = np.stack([gx.ravel(), gy.ravel(), gz.ravel()], axis=1)
    return points, (wx * wy * wz).ravel()


def gaussian_expectation(
    f: Callable[[FloatArray], FloatArray],
    scale: float,
    n: int = DEFAULT_HERMITE_NODES,
) -> float:
    """
    ⟨f(q)⟩，q 的密度为 e^{−|q|²/scale²}/(π^{3/2} scale³)

    Args:
        f: 对形状 (N, 3) 的数组逐行求值的函数
        scale: 高斯宽度
        n: 每轴节点数
    """
    points, weights = gauss_hermite_3d(n)
    values = np.asarray(f(points * scale), dtype=np.float64)
    return float(np.dot(weights, values))


def adaptive_integral(
    f: Callable[[float], float],
    lower: float,
    upper: float,
    tol: float = 1e-10,
    points: Sequence[float] | None = None,
    limit: int = 500,
) -> float:
    """
    scipy.integrate.quad 的包装；积分器告警视为不收敛

    Raises:
        QuadratureError: 未在子区间预算内收敛
    """
    kwargs: dict[str, object] = {"epsabs": 0.0, "epsrel": tol, "limit": limit}
    if points is not None and np.isfinite(upper):
        kwargs["points"] = [p for p in points if lower < p < upper]
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, _ = integrate.quad(f, lower, upper, **kwargs)
        except integrate.IntegrationWarning as e:
            raise QuadratureError(f"quadrature did not converge: {e}") from e
    return float(value)


def isotropic_radial_expectation(
    g: Callable[[float], float], scale: float, tol: float = 1e-12
) -> float:
    """
    各向同性高斯下 ⟨g(|q|)⟩ = (4/√π) ∫₀^∞ t² e^{−t²} g(scale·t) dt

    |q| 不是多项式，乘积 Gauss–Hermite 规则对它不精确，因此化为径向积分。
    """
    value = adaptive_integral(
        lambda t: t * t * np.exp(-t * t) * g(scale * t), 0.0, np.inf, tol=tol
    )
    return 4.0 / np.sqrt(np.pi) * value
