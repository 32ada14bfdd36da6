"""
自定义异常类
"""


class NCPhaseError(Exception):
    """ncphase 基础异常类"""

    pass


class AlgebraError(NCPhaseError):
    """符号代数引擎错误"""

    pass


class DegreeOverflowError(AlgebraError):
    """单项式次数超过上限（通常意味着改写过程失控）"""

    pass


class UnknownObservableError(AlgebraError):
    """未知的可观测量名称"""

    pass


class InvalidAxisError(AlgebraError):
    """坐标轴编号不在 {1, 2, 3} 内"""

    pass


class DomainError(NCPhaseError):
    """物理定义域错误"""

    pass


class QuantumNumberError(DomainError):
    """量子数不满足 n >= 1, 0 <= l < n, |m| <= l"""

    pass


class DivergentFormulaError(DomainError):
    """公式在给定量子数下发散（例如 l = 0, 1 时的 θ 修正）"""

    pass


class DivergentMomentError(DomainError):
    """径向矩的定义积分发散"""

    pass


class InvalidParameterError(DomainError):
    """非正的频率、精度或预算等输入"""

    pass


class QuadratureError(NCPhaseError):
    """数值积分未在迭代预算内收敛"""

    pass


class ConfigError(NCPhaseError):
    """配置文件或命令行参数错误"""

    pass
