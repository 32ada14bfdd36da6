"""
OperatorExpr - 18 个正则生成元上的精确算符多项式

规范形: 每个单项式的生成元按规范序排列（全部坐标在全部动量之前），
同类项合并，零系数项删除。内部以 18 维指数向量作为单项式的键。
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial

from ncphase.algebra.scalar import HBAR, ONE, ParamScalar
from ncphase.core.exceptions import DegreeOverflowError, InvalidAxisError
from ncphase.domain.types import GeneratorKind

logger = logging.getLogger(__name__)

# 单个单项式允许的最高次数
MAX_DEGREE = 16

_KINDS: tuple[GeneratorKind, ...] = tuple(GeneratorKind)
N_GENERATORS = 3 * len(_KINDS)
# 坐标的秩为 0..8，其共轭动量的秩为 9..17
_N_COORDS = N_GENERATORS // 2

Key = tuple[int, ...]
_IDENTITY_KEY: Key = (0,) * N_GENERATORS


@dataclass(frozen=True, order=False)
class GeneratorId:
    """正则生成元 (kind, axis)"""

    kind: GeneratorKind
    axis: int

    def __post_init__(self) -> None:
        if self.axis not in (1, 2, 3):
            raise InvalidAxisError(f"axis must be 1, 2 or 3, got {self.axis}")

    @property
    def rank(self) -> int:
        """规范序中的位置 0..17"""
        return _KINDS.index(self.kind) * 3 + self.axis - 1

    @property
    def name(self) -> str:
        """线性语法名，例如 x1、pa2、pb3"""
        return f"{self.kind.value.replace('_', '')}{self.axis}"

    @classmethod
    def from_rank(cls, rank: int) -> GeneratorId:
        return _GENERATORS[rank]

    def __lt__(self, other: GeneratorId) -> bool:
        return self.rank < other.rank

    def __str__(self) -> str:
        return self.name


_GENERATORS: tuple[GeneratorId, ...] = tuple(
    GeneratorId(kind, axis) for kind in _KINDS for axis in (1, 2, 3)
)


def all_generators() -> tuple[GeneratorId, ...]:
    """按规范序返回全部 18 个生成元"""
    return _GENERATORS


@dataclass(frozen=True)
class Monomial:
    """系数 × 生成元字（字不必有序）"""

    coeff: ParamScalar
    word: tuple[GeneratorId, ...] = ()


# ----------------------------------------------------------------------
# 单项式乘法
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _contraction_factor(k: int) -> ParamScalar:
    """(−iħ)^k"""
    return (ParamScalar.const(0, -1) * HBAR) ** k


@lru_cache(maxsize=1 << 16)
def _key_product(left: Key, right: Key) -> tuple[tuple[Key, int, int], ...]:
    """
    两个规范单项式之积的规范展开

    左因子的动量与右因子的坐标交换，逐个共轭对使用
    p^a x^b = Σ_k k! C(a,k) C(b,k) (−iħ)^k x^(b−k) p^(a−k)。

    Returns:
        (键, 整数系数, 收缩次数 k) 的元组
    """
    options: list[list[tuple[int, int, int]]] = []
    for j in range(_N_COORDS):
        a = left[_N_COORDS + j]
        b = right[j]
        if a and b:
            options.append(
                [(j, k, factorial(k) * comb(a, k) * comb(b, k)) for k in range(min(a, b) + 1)]
            )
    base = tuple(x + y for x, y in zip(left, right, strict=True))
    results: list[tuple[Key, int, int]] = []
    for choice in product(*options):
        key = list(base)
        coef = 1
        contractions = 0
        for j, k, c in choice:
            key[j] -= k
            key[_N_COORDS + j] -= k
            coef *= c
            contractions += k
        results.append((tuple(key), coef, contractions))
    return tuple(results)


def _degree(key: Key) -> int:
    return sum(key)


def _word_of(key: Key) -> tuple[int, ...]:
    return tuple(rank for rank, power in enumerate(key) for _ in range(power))


def _sort_key(key: Key) -> tuple[int, tuple[int, ...]]:
    return (_degree(key), _word_of(key))


# ----------------------------------------------------------------------
# OperatorExpr
# ----------------------------------------------------------------------


class OperatorExpr:
    """
    规范形算符多项式

    不可变；构造时即为规范形，因此相等比较就是规范形比较。
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, ParamScalar] | None = None) -> None:
        items = [(key, c) for key, c in (terms or {}).items() if not c.is_zero()]
        for key, _ in items:
            if _degree(key) > MAX_DEGREE:
                raise DegreeOverflowError(
                    f"monomial of degree {_degree(key)} exceeds the cap of {MAX_DEGREE}"
                )
        items.sort(key=lambda item: _sort_key(item[0]))
        self._terms: tuple[tuple[Key, ParamScalar], ...] = tuple(items)
        self._hash = hash(self._terms)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> OperatorExpr:
        return cls()

    @classmethod
    def identity(cls) -> OperatorExpr:
        return cls({_IDENTITY_KEY: ONE})

    @classmethod
    def scalar(cls, value: ParamScalar | int) -> OperatorExpr:
        return cls({_IDENTITY_KEY: ParamScalar.coerce(value)})

    @classmethod
    def generator(cls, kind: GeneratorKind | str, axis: int) -> OperatorExpr:
        """单个生成元"""
        gen = GeneratorId(GeneratorKind(kind), axis)
        key = [0] * N_GENERATORS
        key[gen.rank] = 1
        return cls({tuple(key): ONE})

    @classmethod
    def from_word(
        cls, word: Sequence[GeneratorId], coeff: ParamScalar | int = 1
    ) -> OperatorExpr:
        """按给定顺序相乘生成元并化为规范形"""
        return canonicalize([Monomial(ParamScalar.coerce(coeff), tuple(word))])

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Key, ParamScalar], ...]:
        return self._terms

    def monomials(self) -> Iterator[Monomial]:
        """按确定顺序迭代规范单项式"""
        for key, coeff in self._terms:
            yield Monomial(coeff, tuple(_GENERATORS[r] for r in _word_of(key)))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((_degree(key) for key, _ in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------

    def __add__(self, other: OperatorExpr) -> OperatorExpr:
        acc = dict(self._terms)
        for key, c in other._terms:
            acc[key] = acc[key] + c if key in acc else c
        return OperatorExpr(acc)

    def __neg__(self) -> OperatorExpr:
        return OperatorExpr({key: -c for key, c in self._terms})

    def __sub__(self, other: OperatorExpr) -> OperatorExpr:
        return self + (-other)

    def __mul__(self, other: OperatorExpr | ParamScalar | int) -> OperatorExpr:
        if isinstance(other, OperatorExpr):
            return multiply(self, other)
        factor = ParamScalar.coerce(other)
        return OperatorExpr({key: c * factor for key, c in self._terms})

    def __rmul__(self, other: ParamScalar | int) -> OperatorExpr:
        factor = ParamScalar.coerce(other)
        return OperatorExpr({key: factor * c for key, c in self._terms})

    def __pow__(self, power: int) -> OperatorExpr:
        result = OperatorExpr.identity()
        for _ in range(power):
            result = multiply(result, self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"OperatorExpr({self.render()})"

    def __str__(self) -> str:
        return self.render()

    def substitute_zero(self, names: Iterable[str]) -> OperatorExpr:
        """把形式符号置零（交换极限），逐项作用于系数"""
        names = tuple(names)
        return OperatorExpr({key: c.substitute_zero(names) for key, c in self._terms})

    # ------------------------------------------------------------------
    # 渲染
    # ------------------------------------------------------------------

    def render(self) -> str:
        """
        线性语法

        例如 ``i*l0*a3``、``(1/2)*l0*hbar^-1*a2*p3``；零渲染为 ``0``。
        """
        if not self._terms:
            return "0"
        return " + ".join(_render_term(key, c) for key, c in self._terms)


def _render_word(key: Key) -> str:
    parts = []
    for rank, power in enumerate(key):
        if power:
            name = _GENERATORS[rank].name
            parts.append(name if power == 1 else f"{name}^{power}")
    return "*".join(parts)


def _render_term(key: Key, coeff: ParamScalar) -> str:
    word = _render_word(key)
    scalar = coeff.render()
    if not word:
        return scalar
    if not coeff.is_single_term():
        return f"({scalar})*{word}"
    if scalar == "1":
        return word
    if scalar == "-1":
        return f"-{word}"
    return f"{scalar}*{word}"


# ----------------------------------------------------------------------
# 公开操作
# ----------------------------------------------------------------------


def canonicalize(e: OperatorExpr | Iterable[Monomial]) -> OperatorExpr:
    """
    化为规范（正规序）形式

    对未排序的字，依次相乘其生成元；乱序的相邻对 g·h 改写为 h·g + [g, h]，
    其中只有坐标与其共轭动量之间的对易子非零（iħ）。

    Args:
        e: 已是规范形的表达式（原样返回），或任意字的单项式序列

    Returns:
        唯一的规范形
    """
    if isinstance(e, OperatorExpr):
        return e
    acc = OperatorExpr.zero()
    for mono in e:
        term = OperatorExpr.scalar(mono.coeff)
        for gen in mono.word:
            term = multiply(term, OperatorExpr.generator(gen.kind, gen.axis))
        acc = acc + term
    return acc


def multiply(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """规范形乘积"""
    acc: dict[Key, ParamScalar] = {}
    for k1, c1 in a.terms:
        for k2, c2 in b.terms:
            coeff = c1 * c2
            for key, count, contractions in _key_product(k1, k2):
                if _degree(key) > MAX_DEGREE:
                    raise DegreeOverflowError(
                        f"product of degree {_degree(key)} exceeds the cap of {MAX_DEGREE}"
                    )
                term = coeff * count
                if contractions:
                    term = term * _contraction_factor(contractions)
                acc[key] = acc[key] + term if key in acc else term
    return OperatorExpr(acc)


def commutator(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """[a, b] = ab − ba"""
    return multiply(a, b) - multiply(b, a)


def jacobi_defect(a: OperatorExpr, b: OperatorExpr, c: OperatorExpr) -> OperatorExpr:
    """[a,[b,c]] + [b,[c,a]] + [c,[a,b]]"""
    return (
        commutator(a, commutator(b, c))
        + commutator(b, commutator(c, a))
        + commutator(c, commutator(a, b))
    )


def verify_relation(lhs: OperatorExpr, rhs: OperatorExpr) -> bool:
    """两端规范形是否一致"""
    return canonicalize(lhs) == canonicalize(rhs)


def gen(kind: GeneratorKind | str, axis: int) -> OperatorExpr:
    """OperatorExpr.generator 的简写"""
    return OperatorExpr.generator(kind, axis)


I_HBAR = OperatorExpr.scalar(ParamScalar.const(0, 1) * HBAR)
