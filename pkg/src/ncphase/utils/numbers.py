"""
数值格式化与换算辅助
"""

from fractions import Fraction


def format_sig17(value: float | None) -> str:
    """
    至多 17 位有效数字，与区域设置无关；None 输出空串

    采用 .17g：末尾的 0 不输出（3.5 → "3.5"），位数不固定，
    但 float(format_sig17(x)) == x 对任意有限 x 成立。
    """
    if value is None:
        return ""
    return format(value, ".17g")


def fraction_str(value: Fraction) -> str:
    """p/q 形式，整数不带分母"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def relative_gap(value: float, reference: float) -> float:
    """|value − reference| / |reference|；reference 为 0 时返回绝对差"""
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)
