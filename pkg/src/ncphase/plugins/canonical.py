"""
常数参数非对易代数

θ_ij = (l0²/ħ) ε_ij3，η_ij = (p0²/ħ) ε_ij3。三条基本关系成立，
但 R² 不再与绕 1 轴的转动对易，只保留绕 3 轴的对称性。
"""

from collections.abc import Iterator
from fractions import Fraction
from itertools import product

from ncphase.algebra.expr import I_HBAR, OperatorExpr, commutator, gen
from ncphase.algebra.observables import (
    AXES,
    CanonicalAlgebra,
    axial_matrix,
    build_canonical_observable,
    kronecker,
)
from ncphase.algebra.scalar import L0, P0, ParamScalar
from ncphase.plugins.base import BaseIdentityGroup, Identity


def default_canonical_algebra() -> CanonicalAlgebra:
    inv_hbar = ParamScalar.symbol("hbar", -1)
    return CanonicalAlgebra(
        theta=axial_matrix(L0 * L0 * inv_hbar), eta=axial_matrix(P0 * P0 * inv_hbar)
    )


def rotation_breaking_witness() -> OperatorExpr:
    """[L₁, R²] = i l0² L₂ + (i l0⁴ / 2ħ) p₂ p₃，其中 L₂ = x₃p₁ − x₁p₃"""
    l2 = gen("x", 3) * gen("p", 1) - gen("x", 1) * gen("p", 3)
    i = ParamScalar.const(0, 1)
    return l2 * (i * L0 * L0) + gen("p", 2) * gen("p", 3) * (
        i * ParamScalar.const(Fraction(1, 2)) * L0**4 * ParamScalar.symbol("hbar", -1)
    )


class CanonicalAlgebraGroup(BaseIdentityGroup):
    """常数 θ、η 下的基本关系与转动对称性破缺"""

    def __init__(self, algebra: CanonicalAlgebra | None = None) -> None:
        super().__init__()
        self._algebra = algebra or default_canonical_algebra()

    @property
    def id(self) -> str:
        return "canonical"

    @property
    def name(self) -> str:
        return "常数参数代数"

    def identities(self) -> Iterator[Identity]:
        alg = self._algebra
        for i, j in product(AXES, AXES):
            rhs = I_HBAR * OperatorExpr.scalar(alg.theta[i - 1][j - 1])
            yield Identity(f"XX.{i}{j}", commutator(alg.coordinate(i), alg.coordinate(j)), rhs)
        for i, j in product(AXES, AXES):
            rhs = I_HBAR * OperatorExpr.scalar(alg.gamma(i, j) + kronecker(i, j))
            yield Identity(f"XP.{i}{j}", commutator(alg.coordinate(i), alg.momentum(j)), rhs)
        for i, j in product(AXES, AXES):
            rhs = I_HBAR * OperatorExpr.scalar(alg.eta[i - 1][j - 1])
            yield Identity(f"PP.{i}{j}", commutator(alg.momentum(i), alg.momentum(j)), rhs)

        r2 = build_canonical_observable("R2", algebra=alg)
        l1 = build_canonical_observable("L", 1, algebra=alg)
        l3 = build_canonical_observable("L", 3, algebra=alg)
        yield Identity("L1_R2", commutator(l1, r2), rotation_breaking_witness())
        yield Identity("L3_R2", commutator(l3, r2), OperatorExpr.zero())
