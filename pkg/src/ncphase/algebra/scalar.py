"""
ParamScalar - 形式参数上的精确系数

系数环为 sympy 的多项式环 QQ_I[hbar, hbar⁻¹, l0, l0⁻¹, ...]：每个形式符号
{hbar, l0, p0, mosc, kosc} 配一个逆元生成元，乘法后约去 x·x⁻¹，
得到 Gaussian 有理系数的 Laurent 多项式。kosc 代表 m_osc ω² 这一整体。
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Any, Union

from sympy import I as IMAGINARY_UNIT
from sympy import Rational
from sympy.polys.domains import QQ_I
from sympy.polys.rings import PolyElement, PolyRing, ring

from ncphase.core.exceptions import AlgebraError

SYMBOLS: tuple[str, ...] = ("hbar", "l0", "p0", "mosc", "kosc")

Exponents = tuple[int, ...]
Number = Union[int, Fraction]

_RING: PolyRing = ring(",".join(f"{name},{name}_inv" for name in SYMBOLS), QQ_I)[0]
_ONE_MONOM: tuple[int, ...] = (0,) * (2 * len(SYMBOLS))


def _rational(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _gaussian(re: Number, im: Number = 0) -> Any:
    """Fraction 实部、虚部 → QQ_I 元素"""
    re, im = Fraction(re), Fraction(im)
    return QQ_I.from_sympy(
        Rational(re.numerator, re.denominator)
        + IMAGINARY_UNIT * Rational(im.numerator, im.denominator)
    )


def _net(monom: tuple[int, ...]) -> Exponents:
    return tuple(monom[2 * k] - monom[2 * k + 1] for k in range(len(SYMBOLS)))


def _monom(net: Exponents) -> tuple[int, ...]:
    out: list[int] = []
    for power in net:
        out.extend((power, 0) if power >= 0 else (0, -power))
    return tuple(out)


def _reduce(poly: PolyElement) -> PolyElement:
    """约去 x·x⁻¹，使每个符号只以正幂或负幂之一出现"""
    if all(not (m[2 * k] and m[2 * k + 1]) for m in poly for k in range(len(SYMBOLS))):
        return poly
    acc: dict[tuple[int, ...], Any] = {}
    for monom, coeff in poly.items():
        key = _monom(_net(monom))
        acc[key] = acc[key] + coeff if key in acc else coeff
    return _RING.from_dict({m: c for m, c in acc.items() if c})


class ParamScalar:
    """
    形式参数多项式（允许负幂）

    不可变；零有唯一表示（空多项式）。相等性按约化后的多项式比较。
    """

    __slots__ = ("_poly", "_hash")

    def __init__(self, poly: PolyElement | None = None) -> None:
        self._poly: PolyElement = _reduce(poly) if poly is not None else _RING.zero
        self._hash = hash(frozenset(self._poly.items()))

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def const(cls, re: Number = 0, im: Number = 0) -> ParamScalar:
        """常数 re + im·i"""
        coeff = _gaussian(re, im)
        return cls(_RING.from_dict({_ONE_MONOM: coeff} if coeff else {}))

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> ParamScalar:
        """单个形式符号的幂"""
        try:
            index = SYMBOLS.index(name)
        except ValueError as e:
            raise AlgebraError(f"unknown formal symbol: {name}") from e
        net = [0] * len(SYMBOLS)
        net[index] = power
        return cls(_RING.from_dict({_monom(tuple(net)): QQ_I.one}))

    @classmethod
    def coerce(cls, value: ParamScalar | Number) -> ParamScalar:
        if isinstance(value, ParamScalar):
            return value
        return cls.const(value)

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------

    @property
    def poly(self) -> PolyElement:
        return self._poly

    def terms(self) -> list[tuple[Exponents, Fraction, Fraction]]:
        """(净指数, 实部, 虚部)，按指数排序"""
        return sorted(
            (_net(monom), _rational(coeff.x), _rational(coeff.y))
            for monom, coeff in self._poly.items()
        )

    def is_zero(self) -> bool:
        return not self._poly

    def __add__(self, other: ParamScalar | Number) -> ParamScalar:
        return ParamScalar(self._poly + ParamScalar.coerce(other)._poly)

    __radd__ = __add__

    def __neg__(self) -> ParamScalar:
        return ParamScalar(-self._poly)

    def __sub__(self, other: ParamScalar | Number) -> ParamScalar:
        return ParamScalar(self._poly - ParamScalar.coerce(other)._poly)

    def __rsub__(self, other: ParamScalar | Number) -> ParamScalar:
        return ParamScalar.coerce(other) - self

    def __mul__(self, other: ParamScalar | Number) -> ParamScalar:
        return ParamScalar(self._poly * ParamScalar.coerce(other)._poly)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> ParamScalar:
        if power < 0:
            raise AlgebraError("negative powers of a ParamScalar are not supported")
        if power == 0:
            return ParamScalar.const(1)
        return ParamScalar(self._poly**power)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ParamScalar.const(other)
        if not isinstance(other, ParamScalar):
            return NotImplemented
        return bool(self._poly == other._poly)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ParamScalar({self.render()})"

    # ------------------------------------------------------------------
    # 代入与求值
    # ------------------------------------------------------------------

    def substitute_zero(self, names: Iterable[str]) -> ParamScalar:
        """
        将给定符号置零

        Raises:
            AlgebraError: 某一项含被置零符号的负幂
        """
        names = list(names)
        indices = [SYMBOLS.index(name) for name in names]
        kept: dict[tuple[int, ...], Any] = {}
        for monom, coeff in self._poly.items():
            net = _net(monom)
            if any(net[i] < 0 for i in indices):
                raise AlgebraError(
                    f"cannot set {', '.join(names)} to zero in a term with a negative power"
                )
            if all(net[i] == 0 for i in indices):
                kept[monom] = coeff
        return ParamScalar(_RING.from_dict(kept))

    def evaluate(self, values: Mapping[str, float]) -> complex:
        """代入数值求复数值；未给出的符号取 1"""
        total = 0j
        for net, re, im in self.terms():
            term = complex(float(re), float(im))
            for name, power in zip(SYMBOLS, net, strict=True):
                if power:
                    term *= values.get(name, 1.0) ** power
            total += term
        return total

    # ------------------------------------------------------------------
    # 渲染
    # ------------------------------------------------------------------

    def is_single_term(self) -> bool:
        return len(self._poly) == 1

    def render(self) -> str:
        """线性语法，例如 (1/2)*i*l0*hbar^-1"""
        if not self._poly:
            return "0"
        return " + ".join(_render_term(net, re, im) for net, re, im in self.terms())


def _format_fraction(value: Fraction, bare: bool = False) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    text = f"{value.numerator}/{value.denominator}"
    return text if bare else f"({text})"


def render_coefficient(re: Fraction, im: Fraction) -> str:
    """Gaussian 有理数的线性语法，例如 (1/2)*i、-i、(1/2+3*i)"""
    if im == 0:
        return _format_fraction(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{_format_fraction(im)}*i"
    imag = "i" if im == 1 else f"{_format_fraction(im, bare=True)}*i"
    if im == -1:
        imag = "-i"
    sign = "" if imag.startswith("-") else "+"
    return f"({_format_fraction(re, bare=True)}{sign}{imag})"


def _render_term(net: Exponents, re: Fraction, im: Fraction) -> str:
    factors = [
        name if power == 1 else f"{name}^{power}"
        for name, power in zip(SYMBOLS, net, strict=True)
        if power
    ]
    if not factors:
        return render_coefficient(re, im)
    symbols = "*".join(factors)
    if im == 0 and re == 1:
        return symbols
    if im == 0 and re == -1:
        return f"-{symbols}"
    return f"{render_coefficient(re, im)}*{symbols}"


ZERO = ParamScalar()
ONE = ParamScalar.const(1)
I = ParamScalar.const(0, 1)  # noqa: E741
HBAR = ParamScalar.symbol("hbar")
L0 = ParamScalar.symbol("l0")
P0 = ParamScalar.symbol("p0")
