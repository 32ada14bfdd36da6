from fractions import Fraction

import pytest

from ncphase.algebra.scalar import HBAR, I, L0, ONE, P0, ZERO, ParamScalar, render_coefficient
from ncphase.core.exceptions import AlgebraError


def test_coefficient_render() -> None:
    assert render_coefficient(Fraction(1, 2), Fraction(1)) == "(1/2+i)"
    assert render_coefficient(Fraction(-2), Fraction(0)) == "-2"
    assert render_coefficient(Fraction(0), Fraction(-3, 4)) == "(-3/4)*i"


def test_gaussian_coefficients_multiply() -> None:
    a = ParamScalar.const(Fraction(1, 2), 1)
    b = ParamScalar.const(0, 2)
    assert a * b == ParamScalar.const(-2, 1)
    assert (a + (-a)).is_zero()


@pytest.mark.parametrize(
    ("value", "expected"),
    [
        (ParamScalar.const(0), "0"),
        (ParamScalar.const(3), "3"),
        (ParamScalar.const(Fraction(1, 2)), "(1/2)"),
        (ParamScalar.const(0, 1), "i"),
        (ParamScalar.const(0, -1), "-i"),
        (ParamScalar.const(0, Fraction(1, 2)), "(1/2)*i"),
        (ParamScalar.const(1, 2), "(1+2*i)"),
        (ParamScalar.const(1, -1), "(1-i)"),
        (ParamScalar.symbol("hbar", -1), "hbar^-1"),
        (I * L0, "i*l0"),
        (-L0 * P0, "-l0*p0"),
    ],
)
def test_render(value: ParamScalar, expected: str) -> None:
    assert value.render() == expected


def test_multi_term_render_is_joined() -> None:
    assert (ONE + L0).render() == "1 + l0"


def test_zero_has_unique_representation() -> None:
    assert (L0 - L0).is_zero()
    assert L0 - L0 == ZERO
    assert (L0 * 0) == 0


def test_laurent_powers_cancel() -> None:
    assert HBAR * ParamScalar.symbol("hbar", -1) == ONE


def test_equality_with_plain_numbers() -> None:
    assert ParamScalar.const(3) == 3
    assert ParamScalar.const(Fraction(1, 2)) == Fraction(1, 2)
    assert I * I == -1


def test_unknown_symbol_rejected() -> None:
    with pytest.raises(AlgebraError):
        ParamScalar.symbol("omega")


def test_negative_power_rejected() -> None:
    with pytest.raises(AlgebraError):
        _ = L0**-1


def test_substitute_zero_drops_terms() -> None:
    value = ONE + L0 * P0 + P0
    assert value.substitute_zero(["l0"]) == ONE + P0
    assert value.substitute_zero(["l0", "p0"]) == ONE


def test_substitute_zero_with_negative_power_fails() -> None:
    with pytest.raises(AlgebraError):
        ParamScalar.symbol("l0", -1).substitute_zero(["l0"])


def test_evaluate() -> None:
    value = I * L0 * ParamScalar.symbol("hbar", -1) + 2
    assert value.evaluate({"l0": 3.0, "hbar": 2.0}) == pytest.approx(2 + 1.5j)
    assert L0.evaluate({}) == pytest.approx(1.0)


def test_hash_matches_equality() -> None:
    assert hash(L0 + P0) == hash(P0 + L0)
    assert len({L0 + P0, P0 + L0}) == 1


def test_inverse_generators_are_reduced() -> None:
    mixed = ParamScalar.symbol("mosc", 2) * ParamScalar.symbol("mosc", -1)
    assert mixed == ParamScalar.symbol("mosc")
    assert mixed.poly == ParamScalar.symbol("mosc").poly
    assert mixed.is_single_term()


def test_terms_report_net_exponents() -> None:
    value = ParamScalar.const(0, Fraction(1, 2)) * L0 * ParamScalar.symbol("hbar", -1)
    assert value.terms() == [((-1, 1, 0, 0, 0), Fraction(0), Fraction(1, 2))]
    assert value.render() == "(1/2)*i*hbar^-1*l0"


def test_zeroth_power_is_one() -> None:
    assert L0**0 == ONE
    assert (L0 + P0) ** 2 == L0 * L0 + 2 * L0 * P0 + P0 * P0
