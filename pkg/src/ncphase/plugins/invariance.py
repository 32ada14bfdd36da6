"""
旋转不变性相关的恒等式组

张量与 X、P 对易；L̃ 与标量积、平方模、R²、P² 对易；
各矢量算符在 L̃ 下按矢量变换。
"""

from collections.abc import Callable, Iterator
from itertools import combinations, product

from ncphase.algebra.expr import I_HBAR, OperatorExpr, commutator
from ncphase.algebra.observables import (
    AXES,
    Vector,
    build_observable,
    cross,
    dot,
    eta_tensor,
    gamma_tensor,
    levi_civita,
    theta_tensor,
    total_angular_momentum,
    vector,
)
from ncphase.plugins.base import BaseIdentityGroup, Identity

_ZERO = OperatorExpr.zero()


def _tensors() -> list[tuple[str, OperatorExpr]]:
    """θ、η 取 i<j 分量（反对称），γ 取全部分量"""
    items = [(f"theta{i}{j}", theta_tensor(i, j)) for i, j in combinations(AXES, 2)]
    items += [(f"eta{i}{j}", eta_tensor(i, j)) for i, j in combinations(AXES, 2)]
    items += [(f"gamma{i}{j}", gamma_tensor(i, j)) for i, j in product(AXES, AXES)]
    return items


class TensorCommutationGroup(BaseIdentityGroup):
    """[θ, X] = [θ, P] = [η, X] = … = 0，以及张量之间相互对易"""

    @property
    def id(self) -> str:
        return "tensor"

    @property
    def name(self) -> str:
        return "非对易张量"

    def identities(self) -> Iterator[Identity]:
        tensors = _tensors()
        for label, tensor in tensors:
            for k in AXES:
                yield Identity(f"{label}_X{k}", commutator(tensor, self.X(k)), _ZERO)
                yield Identity(f"{label}_P{k}", commutator(tensor, self.P(k)), _ZERO)
        by_kind: dict[str, list[tuple[str, OperatorExpr]]] = {}
        for label, tensor in tensors:
            by_kind.setdefault(label.rstrip("0123456789"), []).append((label, tensor))
        for left, right in (("theta", "eta"), ("theta", "gamma"), ("eta", "gamma")):
            for (l_label, l_tensor), (r_label, r_tensor) in product(by_kind[left], by_kind[right]):
                yield Identity(f"{l_label}_{r_label}", commutator(l_tensor, r_tensor), _ZERO)


def _scalar_products() -> list[tuple[str, OperatorExpr]]:
    r, p = vector("x"), vector("p")
    a, b = vector("a"), vector("b")
    pa, pb = vector("p_a"), vector("p_b")
    orbital = cross(r, p)
    return [
        ("a.p", dot(a, p)),
        ("b.p", dot(b, p)),
        ("a.b", dot(a, b)),
        ("r.a", dot(r, a)),
        ("r.b", dot(r, b)),
        ("a.L", dot(a, orbital)),
        ("b.L", dot(b, orbital)),
        ("pa.L", dot(pa, orbital)),
        ("pb.L", dot(pb, orbital)),
    ]


def _squares() -> list[tuple[str, OperatorExpr]]:
    return [
        (f"{label}^2", dot(vec, vec))
        for label, vec in (
            ("r", vector("x")),
            ("p", vector("p")),
            ("a", vector("a")),
            ("b", vector("b")),
            ("pa", vector("p_a")),
            ("pb", vector("p_b")),
        )
    ]


class ScalarProductGroup(BaseIdentityGroup):
    """L̃ 与九个标量积及六个平方模对易"""

    @property
    def id(self) -> str:
        return "scalar"

    @property
    def name(self) -> str:
        return "标量积"

    def identities(self) -> Iterator[Identity]:
        l_tilde = total_angular_momentum()
        for label, scalar in _scalar_products() + _squares():
            for i in AXES:
                yield Identity(f"Lt{i}_{label}", commutator(l_tilde[i - 1], scalar), _ZERO)


class MagnitudeGroup(BaseIdentityGroup):
    """[L̃_i, R²] = [L̃_i, P²] = 0"""

    @property
    def id(self) -> str:
        return "magnitude"

    @property
    def name(self) -> str:
        return "距离与动量模"

    def identities(self) -> Iterator[Identity]:
        l_tilde = total_angular_momentum()
        r2 = build_observable("R2", representation=self._rep)
        p2 = build_observable("P2", representation=self._rep)
        for i in AXES:
            yield Identity(f"Lt{i}_R2", commutator(l_tilde[i - 1], r2), _ZERO)
        for i in AXES:
            yield Identity(f"Lt{i}_P2", commutator(l_tilde[i - 1], p2), _ZERO)


class VectorOperatorGroup(BaseIdentityGroup):
    """[V_i, L̃_j] = iħ ε_ijk V_k，V ∈ {X, P, a, p^a, b, p^b}"""

    @property
    def id(self) -> str:
        return "vector"

    @property
    def name(self) -> str:
        return "矢量算符"

    def _vectors(self) -> list[tuple[str, Callable[[int], OperatorExpr]]]:
        def component(vec: Vector) -> Callable[[int], OperatorExpr]:
            return lambda i: vec[i - 1]

        return [
            ("X", self.X),
            ("P", self.P),
            ("a", component(vector("a"))),
            ("pa", component(vector("p_a"))),
            ("b", component(vector("b"))),
            ("pb", component(vector("p_b"))),
        ]

    def identities(self) -> Iterator[Identity]:
        l_tilde = total_angular_momentum()
        for label, component in self._vectors():
            for i, j in product(AXES, AXES):
                rhs = _ZERO
                for k in AXES:
                    eps = levi_civita(i, j, k)
                    if eps:
                        rhs = rhs + I_HBAR * component(k) * eps
                yield Identity(
                    f"{label}{i}_Lt{j}", commutator(component(i), l_tilde[j - 1]), rhs
                )
