"""
类型定义 - 枚举和类型别名
"""

from enum import Enum


class GeneratorKind(str, Enum):
    """正则生成元种类，声明顺序即规范序（全部坐标在全部动量之前）"""

    X = "x"  # 物理坐标
    A = "a"  # 辅助坐标 a（θ 张量的来源）
    B = "b"  # 辅助坐标 b
    P = "p"  # 物理动量
    P_A = "p_a"  # a 的共轭动量
    P_B = "p_b"  # b 的共轭动量（η 张量的来源）


class ObservableId(str, Enum):
    """可构造的可观测量"""

    X = "X"  # 非对易坐标
    P = "P"  # 非对易动量
    L = "L"  # 轨道角动量 r × p
    L_TILDE = "Ltilde"  # 总角动量
    THETA = "theta"  # 坐标非对易张量
    ETA = "eta"  # 动量非对易张量
    GAMMA = "gamma"  # [X, P] 的修正张量
    R2 = "R2"  # 距离算符的平方
    P2 = "P2"  # 动量模的平方
    H_OSC_A = "H_osc_a"  # a 振子哈密顿量
    H_OSC_B = "H_osc_b"  # b 振子哈密顿量


class CorrectionRoute(str, Enum):
    """能级修正所用公式"""

    GENERIC = "generic_l_ge_2"  # l >= 2 的一阶微扰公式
    NS = "ns_formula"  # ns 能级公式
    UNSUPPORTED = "unsupported"  # l = 1，没有有限结果


class BoundRoute(str, Enum):
    """由 1s-2s 跃迁反推 θ 上界时使用的 Δθ 表达式"""

    PAPER = "paper"  # −3π θ̃ / 16
    LEVELS = "levels"  # ns 公式两能级之差


class MomentMethod(str, Enum):
    """径向矩计算路径"""

    CLOSED = "closed"  # 闭式为主，超出范围时递推
    RECURSION = "recursion"  # 仅由 ⟨r⁰⟩、⟨r⁻¹⟩（及 ⟨r⁻²⟩）递推


class OutputFormat(str, Enum):
    """输出格式"""

    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class UnitSystem(str, Enum):
    """输出单位制"""

    HARTREE = "hartree"  # Hartree 原子单位
    SI = "si"  # 国际单位制
