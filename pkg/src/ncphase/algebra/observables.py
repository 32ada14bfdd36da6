"""
可观测量构造

旋转不变的非对易坐标与动量由辅助变量表示:
    X_i = x_i + θ_f (l0/ħ) [a × p]_i
    P_i = p_i + η_f (p0/ħ) [r × p^b]_i
θ_f、η_f 缺省均为 1/2。
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from ncphase.algebra.expr import OperatorExpr, gen
from ncphase.algebra.scalar import L0, P0, ParamScalar
from ncphase.core.exceptions import InvalidAxisError, UnknownObservableError
from ncphase.domain.types import GeneratorKind, ObservableId

Vector = tuple[OperatorExpr, OperatorExpr, OperatorExpr]

AXES = (1, 2, 3)


def levi_civita(i: int, j: int, k: int) -> int:
    """ε_ijk，轴编号 1..3"""
    return (i - j) * (j - k) * (k - i) // 2


def kronecker(i: int, j: int) -> int:
    return 1 if i == j else 0


def third_axis(i: int, j: int) -> int:
    """i ≠ j 时返回剩下的那个轴"""
    return 6 - i - j


def vector(kind: GeneratorKind | str) -> Vector:
    """某类生成元组成的三维矢量"""
    return (gen(kind, 1), gen(kind, 2), gen(kind, 3))


def cross(u: Sequence[OperatorExpr], v: Sequence[OperatorExpr]) -> Vector:
    """[u × v]_i = ε_ijk u_j v_k（保持 u 在左）"""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[OperatorExpr], v: Sequence[OperatorExpr]) -> OperatorExpr:
    """Σ u_i v_i"""
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _check_axes(name: str, axes: Sequence[int], count: int) -> None:
    if len(axes) != count:
        raise InvalidAxisError(f"{name} takes {count} axis argument(s), got {len(axes)}")
    for axis in axes:
        if axis not in AXES:
            raise InvalidAxisError(f"axis must be 1, 2 or 3, got {axis}")


@dataclass(frozen=True)
class Representation:
    """
    X、P 的显式表示

    Attributes:
        theta_factor: [a × p] 项前的数值因子
        eta_factor: [r × p^b] 项前的数值因子
    """

    theta_factor: Fraction = Fraction(1, 2)
    eta_factor: Fraction = Fraction(1, 2)

    def coordinate(self, i: int) -> OperatorExpr:
        """X_i"""
        scale = ParamScalar.const(self.theta_factor) * L0 * _inv_hbar()
        return gen("x", i) + cross(vector("a"), vector("p"))[i - 1] * scale

    def momentum(self, i: int) -> OperatorExpr:
        """P_i"""
        scale = ParamScalar.const(self.eta_factor) * P0 * _inv_hbar()
        return gen("p", i) + cross(vector("x"), vector("p_b"))[i - 1] * scale


def _inv_hbar() -> ParamScalar:
    return ParamScalar.symbol("hbar", -1)


DEFAULT_REPRESENTATION = Representation()


def theta_tensor(i: int, j: int) -> OperatorExpr:
    """θ_ij = (l0/ħ) ε_ijk a_k"""
    acc = OperatorExpr.zero()
    for k in AXES:
        eps = levi_civita(i, j, k)
        if eps:
            acc = acc + gen("a", k) * (L0 * _inv_hbar() * eps)
    return acc


def eta_tensor(i: int, j: int) -> OperatorExpr:
    """η_ij = (p0/ħ) ε_ijk p^b_k"""
    acc = OperatorExpr.zero()
    for k in AXES:
        eps = levi_civita(i, j, k)
        if eps:
            acc = acc + gen("p_b", k) * (P0 * _inv_hbar() * eps)
    return acc


def gamma_tensor(i: int, j: int) -> OperatorExpr:
    """γ_ij = (l0 p0 / 4ħ²)((a·p^b) δ_ij − a_j p^b_i)"""
    a, pb = vector("a"), vector("p_b")
    body = dot(a, pb) * kronecker(i, j) - a[j - 1] * pb[i - 1]
    return body * (ParamScalar.const(Fraction(1, 4)) * L0 * P0 * ParamScalar.symbol("hbar", -2))


def oscillator_hamiltonian(
    coord: GeneratorKind | str, momentum: GeneratorKind | str
) -> OperatorExpr:
    """H = Σ p² / 2m_osc + (m_osc ω²/2) Σ q²，m_osc ω² 记作 kosc"""
    q, p = vector(coord), vector(momentum)
    half = ParamScalar.const(Fraction(1, 2))
    return dot(p, p) * (half * ParamScalar.symbol("mosc", -1)) + dot(q, q) * (
        half * ParamScalar.symbol("kosc")
    )


def total_angular_momentum() -> Vector:
    """L̃ = r × p + a × p^a + b × p^b"""
    parts = (
        cross(vector("x"), vector("p")),
        cross(vector("a"), vector("p_a")),
        cross(vector("b"), vector("p_b")),
    )
    return (
        parts[0][0] + parts[1][0] + parts[2][0],
        parts[0][1] + parts[1][1] + parts[2][1],
        parts[0][2] + parts[1][2] + parts[2][2],
    )


def build_observable(
    name: ObservableId | str,
    *axes: int,
    representation: Representation = DEFAULT_REPRESENTATION,
) -> OperatorExpr:
    """
    按名称构造可观测量的规范形

    Args:
        name: 可观测量标识
        axes: 矢量取 1 个轴，张量取 2 个轴，标量不取轴
        representation: X、P 的表示

    Raises:
        UnknownObservableError: 名称未知
        InvalidAxisError: 轴数量或取值不合法
    """
    try:
        obs = ObservableId(name)
    except ValueError as e:
        raise UnknownObservableError(f"unknown observable: {name}") from e

    vectors: dict[ObservableId, Callable[[int], OperatorExpr]] = {
        ObservableId.X: representation.coordinate,
        ObservableId.P: representation.momentum,
        ObservableId.L: lambda i: cross(vector("x"), vector("p"))[i - 1],
        ObservableId.L_TILDE: lambda i: total_angular_momentum()[i - 1],
    }
    tensors: dict[ObservableId, Callable[[int, int], OperatorExpr]] = {
        ObservableId.THETA: theta_tensor,
        ObservableId.ETA: eta_tensor,
        ObservableId.GAMMA: gamma_tensor,
    }

    if obs in vectors:
        _check_axes(obs.value, axes, 1)
        return vectors[obs](axes[0])
    if obs in tensors:
        _check_axes(obs.value, axes, 2)
        return tensors[obs](axes[0], axes[1])

    _check_axes(obs.value, axes, 0)
    if obs is ObservableId.R2:
        xs = [representation.coordinate(i) for i in AXES]
        return dot(xs, xs)
    if obs is ObservableId.P2:
        ps = [representation.momentum(i) for i in AXES]
        return dot(ps, ps)
    if obs is ObservableId.H_OSC_A:
        return oscillator_hamiltonian("a", "p_a")
    return oscillator_hamiltonian("b", "p_b")


# ----------------------------------------------------------------------
# 常数参数（正则型）非对易
# ----------------------------------------------------------------------

Matrix = tuple[tuple[ParamScalar, ...], ...]


def _zero_matrix() -> Matrix:
    return tuple(tuple(ParamScalar() for _ in AXES) for _ in AXES)


def axial_matrix(strength: ParamScalar, axis: int = 3) -> Matrix:
    """M_ij = strength · ε_ij(axis)"""
    return tuple(
        tuple(strength * levi_civita(i, j, axis) for j in AXES) for i in AXES
    )


@dataclass(frozen=True)
class CanonicalAlgebra:
    """
    常数反对称 θ、η 矩阵下的 X、P 表示

    X_i = x_i − ½ Σ_j θ_ij p_j，P_i = p_i + ½ Σ_j η_ij x_j，
    从而 [X_i, P_j] = iħ(δ_ij + γ_ij)，γ_ij = Σ_k θ_ik η_jk / 4。
    """

    theta: Matrix = field(default_factory=_zero_matrix)
    eta: Matrix = field(default_factory=_zero_matrix)

    def __post_init__(self) -> None:
        for matrix in (self.theta, self.eta):
            for i in AXES:
                for j in AXES:
                    if matrix[i - 1][j - 1] != -matrix[j - 1][i - 1]:
                        raise InvalidAxisError(
                            "constant noncommutativity matrices must be antisymmetric"
                        )

    def coordinate(self, i: int) -> OperatorExpr:
        acc = gen("x", i)
        half = ParamScalar.const(Fraction(-1, 2))
        for j in AXES:
            acc = acc + gen("p", j) * (half * self.theta[i - 1][j - 1])
        return acc

    def momentum(self, i: int) -> OperatorExpr:
        acc = gen("p", i)
        half = ParamScalar.const(Fraction(1, 2))
        for j in AXES:
            acc = acc + gen("x", j) * (half * self.eta[i - 1][j - 1])
        return acc

    def gamma(self, i: int, j: int) -> ParamScalar:
        total = ParamScalar()
        for k in AXES:
            total = total + self.theta[i - 1][k - 1] * self.eta[j - 1][k - 1]
        return total * ParamScalar.const(Fraction(1, 4))


def build_canonical_observable(
    name: ObservableId | str, *axes: int, algebra: CanonicalAlgebra
) -> OperatorExpr:
    """
    常数 θ、η 下的可观测量（支持 X、P、L、R2、P2）

    Raises:
        UnknownObservableError: 名称未知或在常数参数情形下无意义
        InvalidAxisError: 轴不合法
    """
    try:
        obs = ObservableId(name)
    except ValueError as e:
        raise UnknownObservableError(f"unknown observable: {name}") from e

    if obs in (ObservableId.X, ObservableId.P, ObservableId.L):
        _check_axes(obs.value, axes, 1)
        if obs is ObservableId.X:
            return algebra.coordinate(axes[0])
        if obs is ObservableId.P:
            return algebra.momentum(axes[0])
        return cross(vector("x"), vector("p"))[axes[0] - 1]
    if obs in (ObservableId.R2, ObservableId.P2):
        _check_axes(obs.value, axes, 0)
        build = algebra.coordinate if obs is ObservableId.R2 else algebra.momentum
        comps = [build(i) for i in AXES]
        return dot(comps, comps)
    raise UnknownObservableError(f"{obs.value} is not defined for constant noncommutativity")
