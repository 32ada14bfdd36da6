"""
辅助振子哈密顿量的对称性
"""

from collections.abc import Iterator
from itertools import combinations

from ncphase.algebra.expr import OperatorExpr, commutator
from ncphase.algebra.observables import (
    AXES,
    build_observable,
    eta_tensor,
    theta_tensor,
    total_angular_momentum,
)
from ncphase.plugins.base import BaseIdentityGroup, Identity


class OscillatorGroup(BaseIdentityGroup):
    """H_osc 旋转不变、两振子解耦，θ 只依赖 a 振子、η 只依赖 b 振子"""

    @property
    def id(self) -> str:
        return "oscillator"

    @property
    def name(self) -> str:
        return "辅助振子"

    def identities(self) -> Iterator[Identity]:
        zero = OperatorExpr.zero()
        h_a = build_observable("H_osc_a")
        h_b = build_observable("H_osc_b")
        l_tilde = total_angular_momentum()
        for i in AXES:
            yield Identity(f"Lt{i}_Ha", commutator(l_tilde[i - 1], h_a), zero)
            yield Identity(f"Lt{i}_Hb", commutator(l_tilde[i - 1], h_b), zero)
        yield Identity("Ha_Hb", commutator(h_a, h_b), zero)
        for i, j in combinations(AXES, 2):
            yield Identity(f"theta{i}{j}_Hb", commutator(theta_tensor(i, j), h_b), zero)
            yield Identity(f"eta{i}{j}_Ha", commutator(eta_tensor(i, j), h_a), zero)
