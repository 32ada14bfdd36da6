"""
BaseIdentityGroup - 恒等式组插件基类

所有恒等式组都应继承此基类，实现统一的接口。
"""

from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass

from ncphase.algebra.expr import OperatorExpr
from ncphase.algebra.observables import DEFAULT_REPRESENTATION, Representation


@dataclass(frozen=True)
class Identity:
    """一条待验证的恒等式 lhs = rhs"""

    name: str
    lhs: OperatorExpr
    rhs: OperatorExpr


class BaseIdentityGroup(ABC):
    """
    恒等式组基类 - 插件化设计

    每个组负责一类关系，例如：
    - NCAlgebraGroup: 非对易代数的三条基本关系
    - VectorOperatorGroup: 矢量算符与 L̃ 的对易关系
    - JacobiGroup: Jacobi 恒等式

    组通过依赖注入接收 X、P 的表示，
    这样可以在变异测试中替换为被篡改的表示。
    """

    def __init__(self, representation: Representation = DEFAULT_REPRESENTATION) -> None:
        """
        Args:
            representation: X、P 的显式表示
        """
        self._rep = representation

    @property
    @abstractmethod
    def id(self) -> str:
        """
        组唯一标识符

        用作报告条目 id 的前缀。
        示例: "nc", "jacobi"
        """
        raise NotImplementedError

    @property
    @abstractmethod
    def name(self) -> str:
        """组显示名称"""
        raise NotImplementedError

    @abstractmethod
    def identities(self) -> Iterator[Identity]:
        """
        按确定顺序生成本组的恒等式

        Returns:
            恒等式迭代器
        """
        raise NotImplementedError

    def X(self, i: int) -> OperatorExpr:  # noqa: N802
        return self._rep.coordinate(i)

    def P(self, i: int) -> OperatorExpr:  # noqa: N802
        return self._rep.momentum(i)
