"""
非对易代数基本关系、辅助变量正则对易关系与混合对易子
"""

from collections.abc import Iterator
from fractions import Fraction
from itertools import product

from ncphase.algebra.expr import I_HBAR, OperatorExpr, commutator, gen
from ncphase.algebra.observables import (
    AXES,
    eta_tensor,
    gamma_tensor,
    kronecker,
    levi_civita,
    theta_tensor,
)
from ncphase.algebra.scalar import L0, P0, ParamScalar
from ncphase.plugins.base import BaseIdentityGroup, Identity

# 报告 id 中使用的生成元类简写
SHORT = {"x": "x", "p": "p", "a": "a", "b": "b", "p_a": "pa", "p_b": "pb"}


class NCAlgebraGroup(BaseIdentityGroup):
    """[X,X] = iħθ，[X,P] = iħ(δ+γ)，[P,P] = iħη，遍历全部 9 个轴对"""

    @property
    def id(self) -> str:
        return "nc"

    @property
    def name(self) -> str:
        return "非对易代数"

    def identities(self) -> Iterator[Identity]:
        for i, j in product(AXES, AXES):
            yield Identity(
                f"XX.{i}{j}", commutator(self.X(i), self.X(j)), I_HBAR * theta_tensor(i, j)
            )
        for i, j in product(AXES, AXES):
            rhs = I_HBAR * (OperatorExpr.scalar(kronecker(i, j)) + gamma_tensor(i, j))
            yield Identity(f"XP.{i}{j}", commutator(self.X(i), self.P(j)), rhs)
        for i, j in product(AXES, AXES):
            yield Identity(
                f"PP.{i}{j}", commutator(self.P(i), self.P(j)), I_HBAR * eta_tensor(i, j)
            )


# (左生成元类, 右生成元类, 是否为共轭对)
_AUXILIARY_PAIRS: tuple[tuple[str, str, bool], ...] = (
    ("a", "a", False),
    ("b", "b", False),
    ("a", "b", False),
    ("a", "p_a", True),
    ("b", "p_b", True),
    ("p_a", "p_a", False),
    ("p_b", "p_b", False),
    ("p_a", "p_b", False),
    ("a", "p_b", False),
    ("b", "p_a", False),
)


class AuxiliaryCCRGroup(BaseIdentityGroup):
    """辅助坐标 a、b 与其动量的普通正则对易关系"""

    @property
    def id(self) -> str:
        return "ccr"

    @property
    def name(self) -> str:
        return "辅助变量正则对易关系"

    def identities(self) -> Iterator[Identity]:
        for left, right, conjugate in _AUXILIARY_PAIRS:
            for i, j in product(AXES, AXES):
                rhs = I_HBAR * kronecker(i, j) if conjugate else OperatorExpr.zero()
                yield Identity(
                    f"{SHORT[left]}_{SHORT[right]}.{i}{j}",
                    commutator(gen(left, i), gen(right, j)),
                    rhs,
                )


def _epsilon_vector(i: int, j: int, kind: str, scale: ParamScalar) -> OperatorExpr:
    """Σ_k ε_ijk · scale · kind_k"""
    acc = OperatorExpr.zero()
    for k in AXES:
        eps = levi_civita(i, j, k)
        if eps:
            acc = acc + gen(kind, k) * (scale * eps)
    return acc


class MixedCommutatorGroup(BaseIdentityGroup):
    """X、P 与辅助变量之间的混合对易子"""

    # (标签, "X" 或 "P", 辅助生成元类)
    ZERO_RELATIONS = (
        ("X", "a"),
        ("X", "b"),
        ("X", "p_b"),
        ("P", "a"),
        ("P", "p_a"),
        ("P", "p_b"),
    )

    @property
    def id(self) -> str:
        return "mixed"

    @property
    def name(self) -> str:
        return "混合对易子"

    def identities(self) -> Iterator[Identity]:
        half_i = ParamScalar.const(0, Fraction(1, 2))
        for i, j in product(AXES, AXES):
            yield Identity(
                f"X_pa.{i}{j}",
                commutator(self.X(i), gen("p_a", j)),
                _epsilon_vector(i, j, "p", half_i * L0),
            )
        for i, j in product(AXES, AXES):
            yield Identity(
                f"P_b.{i}{j}",
                commutator(self.P(i), gen("b", j)),
                _epsilon_vector(i, j, "x", half_i * P0),
            )
        for which, kind in self.ZERO_RELATIONS:
            build = self.X if which == "X" else self.P
            for i, j in product(AXES, AXES):
                yield Identity(
                    f"{which}_{SHORT[kind]}.{i}{j}",
                    commutator(build(i), gen(kind, j)),
                    OperatorExpr.zero(),
                )
