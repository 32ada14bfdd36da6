import random

import pytest

from ncphase.algebra.expr import (
    I_HBAR,
    MAX_DEGREE,
    GeneratorId,
    Monomial,
    OperatorExpr,
    all_generators,
    canonicalize,
    commutator,
    gen,
    jacobi_defect,
    multiply,
    verify_relation,
)
from ncphase.algebra.scalar import HBAR, ONE, ParamScalar
from ncphase.core.exceptions import AlgebraError, DegreeOverflowError, InvalidAxisError
from ncphase.domain.types import GeneratorKind
from ncphase.plugins.jacobi import random_expression


def _word(*names: str) -> tuple[GeneratorId, ...]:
    lookup = {g.name: g for g in all_generators()}
    return tuple(lookup[name] for name in names)


def test_canonical_order_of_generators() -> None:
    names = [g.name for g in all_generators()]
    assert names[:9] == ["x1", "x2", "x3", "a1", "a2", "a3", "b1", "b2", "b3"]
    assert names[9:] == ["p1", "p2", "p3", "pa1", "pa2", "pa3", "pb1", "pb2", "pb3"]
    assert [g.rank for g in all_generators()] == list(range(18))


def test_generator_axis_validation() -> None:
    with pytest.raises(InvalidAxisError):
        GeneratorId(GeneratorKind.X, 0)
    with pytest.raises(InvalidAxisError):
        gen("p", 4)


@pytest.mark.parametrize(
    ("word", "expected"),
    [
        (("x1", "p1"), "x1*p1"),
        (("p1", "x1"), "-i*hbar + x1*p1"),
        (("p1", "x2"), "x2*p1"),
        (("p1", "p1", "x1"), "-2*i*hbar*p1 + x1*p1^2"),
        (("pb3", "a3", "x1"), "x1*a3*pb3"),
        (("pa2", "a2"), "-i*hbar + a2*pa2"),
    ],
)
def test_canonicalize_examples(word: tuple[str, ...], expected: str) -> None:
    assert canonicalize([Monomial(ONE, _word(*word))]).render() == expected


def test_canonicalize_is_idempotent() -> None:
    expr = OperatorExpr.from_word(_word("p2", "x2", "p1", "x1"))
    assert canonicalize(expr) is expr
    assert canonicalize(expr.monomials()) == expr


def test_like_terms_are_combined() -> None:
    expr = canonicalize(
        [Monomial(ONE, _word("x1", "p1")), Monomial(-ONE, _word("p1", "x1"))]
    )
    assert expr == OperatorExpr.scalar(ParamScalar.const(0, 1) * HBAR)


def test_basic_commutator() -> None:
    assert commutator(gen("x", 1), gen("p", 1)) == I_HBAR
    assert commutator(gen("x", 1), gen("p", 2)).is_zero()
    assert commutator(gen("a", 3), gen("p_a", 3)) == I_HBAR
    assert commutator(gen("a", 1), gen("p", 1)).is_zero()


def test_zero_renders_as_zero() -> None:
    assert OperatorExpr.zero().render() == "0"
    assert (gen("x", 1) - gen("x", 1)).render() == "0"


def test_scalar_multiplication_both_sides() -> None:
    two = ParamScalar.const(2)
    assert gen("x", 1) * two == two * gen("x", 1)
    assert (gen("x", 1) * 2).render() == "2*x1"


def test_degree_and_monomials() -> None:
    expr = gen("p", 1) * gen("x", 1)
    assert expr.degree == 2
    assert len(expr) == 2
    words = [tuple(g.name for g in m.word) for m in expr.monomials()]
    assert words == [(), ("x1", "p1")]


def test_degree_cap() -> None:
    assert (gen("x", 1) ** MAX_DEGREE).degree == MAX_DEGREE
    with pytest.raises(DegreeOverflowError):
        _ = gen("x", 1) ** (MAX_DEGREE + 1)


def test_degree_overflow_is_an_algebra_error() -> None:
    assert issubclass(DegreeOverflowError, AlgebraError)


def test_verify_relation() -> None:
    lhs = OperatorExpr.from_word(_word("p1", "x1"))
    rhs = gen("x", 1) * gen("p", 1) - I_HBAR
    assert verify_relation(lhs, rhs)
    assert not verify_relation(lhs, gen("x", 1) * gen("p", 1))


def test_substitute_zero_on_expression() -> None:
    l0 = ParamScalar.symbol("l0")
    expr = gen("x", 1) + gen("a", 1) * l0
    assert expr.substitute_zero(["l0"]) == gen("x", 1)


@pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
def test_multiplication_is_associative(seed: int) -> None:
    rng = random.Random(seed)
    a, b, c = (random_expression(rng) for _ in range(3))
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@pytest.mark.parametrize("seed", [11, 12, 13, 14, 15])
def test_commutator_leibniz_rule(seed: int) -> None:
    rng = random.Random(seed)
    a, b, c = (random_expression(rng) for _ in range(3))
    assert commutator(a, b * c) == commutator(a, b) * c + b * commutator(a, c)


@pytest.mark.parametrize("seed", [21, 22, 23])
def test_jacobi_defect_vanishes(seed: int) -> None:
    rng = random.Random(seed)
    a, b, c = (random_expression(rng) for _ in range(3))
    assert jacobi_defect(a, b, c).is_zero()


def test_commutator_is_antisymmetric() -> None:
    rng = random.Random(99)
    a, b = random_expression(rng), random_expression(rng)
    assert commutator(a, b) == -commutator(b, a)
