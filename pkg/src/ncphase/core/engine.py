"""
VerificationEngine - 核心引擎，负责调度恒等式组并汇总验证报告
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ncphase.algebra.expr import OperatorExpr
from ncphase.algebra.observables import DEFAULT_REPRESENTATION, Representation
from ncphase.domain.models import SuiteEntry, SuiteReport
from ncphase.plugins.base import BaseIdentityGroup
from ncphase.plugins.canonical import CanonicalAlgebraGroup
from ncphase.plugins.invariance import (
    MagnitudeGroup,
    ScalarProductGroup,
    TensorCommutationGroup,
    VectorOperatorGroup,
)
from ncphase.plugins.jacobi import DEFAULT_RANDOM_TRIPLETS, DEFAULT_SEED, JacobiGroup
from ncphase.plugins.nc_algebra import AuxiliaryCCRGroup, MixedCommutatorGroup, NCAlgebraGroup
from ncphase.plugins.oscillators import OscillatorGroup

logger = logging.getLogger(__name__)

# 交换极限下置零的形式符号
NC_SYMBOLS = ("l0", "p0")

# 变异测试用: X 中去掉因子 ½
MUTATED_REPRESENTATION = Representation(theta_factor=Fraction(1))


class VerificationEngine:
    """
    代数验证引擎 - 编排者模式

    负责:
    - 加载和管理恒等式组插件
    - 逐组计算两端规范形并比较
    - 按注册顺序汇总确定性的报告
    """

    def __init__(
        self,
        representation: Representation = DEFAULT_REPRESENTATION,
        seed: int = DEFAULT_SEED,
        random_triplets: int = DEFAULT_RANDOM_TRIPLETS,
        commutative_limit: bool = False,
    ) -> None:
        self._groups: list[BaseIdentityGroup] = []
        self._representation = representation
        self._seed = seed
        self._random_triplets = random_triplets
        self._commutative_limit = commutative_limit
        self._load_plugins()

    def _load_plugins(self) -> None:
        """加载全部恒等式组"""
        rep = self._representation
        self.register_group(NCAlgebraGroup(rep))
        self.register_group(AuxiliaryCCRGroup(rep))
        self.register_group(MixedCommutatorGroup(rep))
        self.register_group(TensorCommutationGroup(rep))
        self.register_group(ScalarProductGroup(rep))
        self.register_group(MagnitudeGroup(rep))
        self.register_group(VectorOperatorGroup(rep))
        self.register_group(JacobiGroup(rep, self._seed, self._random_triplets))
        self.register_group(OscillatorGroup(rep))
        self.register_group(CanonicalAlgebraGroup())

    def register_group(self, group: BaseIdentityGroup) -> None:
        """注册恒等式组；id 重复时替换旧组"""
        self._groups = [g for g in self._groups if g.id != group.id]
        self._groups.append(group)

    def get_groups(self) -> list[BaseIdentityGroup]:
        """获取所有已注册的组"""
        return list(self._groups)

    def get_group(self, group_id: str) -> BaseIdentityGroup | None:
        """按 id 获取组"""
        for group in self._groups:
            if group.id == group_id:
                return group
        return None

    def _prepare(self, expr: OperatorExpr) -> OperatorExpr:
        if self._commutative_limit:
            return expr.substitute_zero(NC_SYMBOLS)
        return expr

    def run_group(self, group: BaseIdentityGroup) -> list[SuiteEntry]:
        """
        验证单个组

        Args:
            group: 恒等式组

        Returns:
            按生成顺序排列的报告条目
        """
        logger.info("Verifying group %s (%s)", group.id, group.name)
        entries: list[SuiteEntry] = []
        for identity in group.identities():
            lhs = self._prepare(identity.lhs)
            rhs = self._prepare(identity.rhs)
            passed = lhs == rhs
            entry = SuiteEntry(
                id=f"{group.id}.{identity.name}",
                lhs=lhs.render(),
                rhs=rhs.render(),
                passed=passed,
            )
            if not passed:
                logger.warning("Identity %s failed: %s != %s", entry.id, entry.lhs, entry.rhs)
            entries.append(entry)
        ok = sum(1 for entry in entries if entry.passed)
        logger.info("Group %s: %d/%d passed", group.id, ok, len(entries))
        return entries

    def run(self, group_ids: list[str] | None = None) -> SuiteReport:
        """
        执行全部（或指定的）组

        Args:
            group_ids: 只运行这些组，None 表示全部

        Returns:
            完整报告
        """
        entries: list[SuiteEntry] = []
        for group in self._groups:
            if group_ids is not None and group.id not in group_ids:
                continue
            entries.extend(self.run_group(group))
        return SuiteReport(seed=self._seed, entries=entries)


def run_algebra_suite(
    seed: int = DEFAULT_SEED,
    random_triplets: int = DEFAULT_RANDOM_TRIPLETS,
    representation: Representation = DEFAULT_REPRESENTATION,
    commutative_limit: bool = False,
) -> SuiteReport:
    """运行完整代数验证套件"""
    engine = VerificationEngine(
        representation=representation,
        seed=seed,
        random_triplets=random_triplets,
        commutative_limit=commutative_limit,
    )
    return engine.run()
