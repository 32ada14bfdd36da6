"""
Jacobi 恒等式

{X₁..X₃, P₁..P₃} 的全部无序三元组（允许重复），
外加按固定种子生成的随机低次三元组。
"""

import random
from collections.abc import Iterator
from fractions import Fraction
from itertools import combinations_with_replacement

from ncphase.algebra.expr import OperatorExpr, all_generators, jacobi_defect
from ncphase.algebra.observables import AXES, DEFAULT_REPRESENTATION, Representation
from ncphase.algebra.scalar import L0, P0, ParamScalar
from ncphase.plugins.base import BaseIdentityGroup, Identity

DEFAULT_SEED = 20240917
DEFAULT_RANDOM_TRIPLETS = 200


def random_expression(rng: random.Random, max_terms: int = 3, max_degree: int = 2) -> OperatorExpr:
    """
    随机低次表达式

    每项为小整数（或半整数）系数、可选的 l0/ħ 或 p0/ħ 因子，
    以及按随机顺序相乘的至多 max_degree 个生成元。
    """
    generators = all_generators()
    factors = (ParamScalar.const(1), L0, P0, ParamScalar.symbol("hbar", -1) * L0)
    acc = OperatorExpr.zero()
    for _ in range(rng.randint(1, max_terms)):
        coeff = ParamScalar.const(
            Fraction(rng.randint(-3, 3) or 1, rng.choice((1, 2))),
            rng.randint(-1, 1),
        )
        coeff = coeff * rng.choice(factors)
        word = [rng.choice(generators) for _ in range(rng.randint(1, max_degree))]
        acc = acc + OperatorExpr.from_word(word, coeff)
    return acc


class JacobiGroup(BaseIdentityGroup):
    """Jacobi 缺陷恒为零"""

    def __init__(
        self,
        representation: Representation = DEFAULT_REPRESENTATION,
        seed: int = DEFAULT_SEED,
        random_triplets: int = DEFAULT_RANDOM_TRIPLETS,
    ) -> None:
        super().__init__(representation)
        self._seed = seed
        self._random_triplets = random_triplets

    @property
    def id(self) -> str:
        return "jacobi"

    @property
    def name(self) -> str:
        return "Jacobi 恒等式"

    def identities(self) -> Iterator[Identity]:
        zero = OperatorExpr.zero()
        operators = [(f"X{i}", self.X(i)) for i in AXES] + [(f"P{i}", self.P(i)) for i in AXES]
        for triplet in combinations_with_replacement(operators, 3):
            label = "_".join(name for name, _ in triplet)
            a, b, c = (expr for _, expr in triplet)
            yield Identity(label, jacobi_defect(a, b, c), zero)

        rng = random.Random(self._seed)
        for n in range(self._random_triplets):
            a, b, c = (random_expression(rng) for _ in range(3))
            yield Identity(f"random{n:03d}", jacobi_defect(a, b, c), zero)
