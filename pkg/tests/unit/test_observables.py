from fractions import Fraction

import pytest

from ncphase.algebra.expr import I_HBAR, OperatorExpr, commutator, gen, multiply
from ncphase.algebra.observables import (
    DEFAULT_REPRESENTATION,
    CanonicalAlgebra,
    Representation,
    axial_matrix,
    build_canonical_observable,
    build_observable,
    eta_tensor,
    gamma_tensor,
    kronecker,
    levi_civita,
    theta_tensor,
    third_axis,
    total_angular_momentum,
)
from ncphase.algebra.scalar import L0, P0, ParamScalar
from ncphase.core.exceptions import InvalidAxisError, UnknownObservableError
from ncphase.plugins.canonical import default_canonical_algebra, rotation_breaking_witness


def test_levi_civita() -> None:
    assert levi_civita(1, 2, 3) == 1
    assert levi_civita(2, 3, 1) == 1
    assert levi_civita(2, 1, 3) == -1
    assert levi_civita(1, 1, 2) == 0
    assert kronecker(2, 2) == 1
    assert kronecker(1, 3) == 0
    assert third_axis(1, 3) == 2


def test_coordinate_commutator_renders_exactly() -> None:
    x1 = build_observable("X", 1)
    x2 = build_observable("X", 2)
    assert commutator(x1, x2).render() == "i*l0*a3"


def test_momentum_commutator_renders_exactly() -> None:
    p1 = build_observable("P", 1)
    p2 = build_observable("P", 2)
    assert commutator(p1, p2).render() == "i*p0*pb3"


def test_mixed_commutator_renders_exactly() -> None:
    x1 = build_observable("X", 1)
    p2 = build_observable("P", 2)
    assert commutator(x1, p2).render() == "(-1/4)*i*hbar^-1*l0*p0*a2*pb1"


def test_diagonal_xp_commutator() -> None:
    x1 = build_observable("X", 1)
    p1 = build_observable("P", 1)
    expected = I_HBAR * (OperatorExpr.identity() + gamma_tensor(1, 1))
    assert commutator(x1, p1) == expected


def test_tensors_are_antisymmetric() -> None:
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            assert theta_tensor(i, j) == -theta_tensor(j, i)
            assert eta_tensor(i, j) == -eta_tensor(j, i)
    assert theta_tensor(2, 2).is_zero()


def test_build_observable_matches_representation() -> None:
    assert build_observable("X", 3) == DEFAULT_REPRESENTATION.coordinate(3)
    assert build_observable("P", 1) == DEFAULT_REPRESENTATION.momentum(1)
    assert build_observable("Ltilde", 2) == total_angular_momentum()[1]
    assert build_observable("theta", 1, 2) == theta_tensor(1, 2)


def test_orbital_angular_momentum() -> None:
    expected = gen("x", 2) * gen("p", 3) - gen("x", 3) * gen("p", 2)
    assert build_observable("L", 1) == expected


def test_scalar_observables_take_no_axes() -> None:
    assert build_observable("R2").degree == 4
    with pytest.raises(InvalidAxisError):
        build_observable("R2", 1)


def test_unknown_observable() -> None:
    with pytest.raises(UnknownObservableError):
        build_observable("Q", 1)


@pytest.mark.parametrize(
    ("name", "axes"),
    [("X", ()), ("X", (4,)), ("theta", (1,)), ("gamma", (1, 0)), ("P", (1, 2))],
)
def test_invalid_axes(name: str, axes: tuple[int, ...]) -> None:
    with pytest.raises(InvalidAxisError):
        build_observable(name, *axes)


def test_opposite_eta_sign_flips_momentum_commutator() -> None:
    flipped = Representation(eta_factor=Fraction(-1, 2))
    p1, p2 = flipped.momentum(1), flipped.momentum(2)
    assert commutator(p1, p2) == -(I_HBAR * eta_tensor(1, 2))
    assert commutator(p1, p2).render() == "-i*p0*pb3"


def test_opposite_eta_sign_keeps_coordinate_algebra() -> None:
    flipped = Representation(eta_factor=Fraction(-1, 2))
    assert commutator(flipped.coordinate(1), flipped.coordinate(2)) == I_HBAR * theta_tensor(1, 2)


def test_oscillator_hamiltonian_renders_formal_symbols() -> None:
    h_a = build_observable("H_osc_a")
    assert "mosc^-1" in h_a.render()
    assert "kosc" in h_a.render()


def test_canonical_algebra_requires_antisymmetry() -> None:
    l0 = ParamScalar.symbol("l0")
    bad = tuple(tuple(l0 for _ in range(3)) for _ in range(3))
    with pytest.raises(InvalidAxisError):
        CanonicalAlgebra(theta=bad)


def test_canonical_coordinate_commutator() -> None:
    algebra = default_canonical_algebra()
    x1 = build_canonical_observable("X", 1, algebra=algebra)
    x2 = build_canonical_observable("X", 2, algebra=algebra)
    assert commutator(x1, x2) == I_HBAR * OperatorExpr.scalar(algebra.theta[0][1])
    assert commutator(x1, x2).render() == "i*l0^2"


def test_canonical_gamma() -> None:
    algebra = default_canonical_algebra()
    gamma = algebra.gamma(1, 1)
    expected = ParamScalar.const(Fraction(1, 4)) * L0**2 * ParamScalar.symbol("p0", 2)
    assert gamma == expected * ParamScalar.symbol("hbar", -2)
    assert algebra.gamma(3, 3).is_zero()


def test_canonical_rotation_is_broken_around_first_axis() -> None:
    algebra = default_canonical_algebra()
    r2 = build_canonical_observable("R2", algebra=algebra)
    l1 = build_canonical_observable("L", 1, algebra=algebra)
    l3 = build_canonical_observable("L", 3, algebra=algebra)
    assert commutator(l1, r2) == rotation_breaking_witness()
    assert not commutator(l1, r2).is_zero()
    assert commutator(l3, r2).is_zero()


def test_canonical_observable_rejects_auxiliary_names() -> None:
    with pytest.raises(UnknownObservableError):
        build_canonical_observable("theta", 1, 2, algebra=CanonicalAlgebra())


def test_axial_matrix() -> None:
    m = axial_matrix(L0)
    assert m[0][1] == L0
    assert m[1][0] == -L0
    assert m[2][2].is_zero()


def test_gamma_diagonal_element() -> None:
    scale = ParamScalar.const(Fraction(1, 4)) * L0 * P0 * ParamScalar.symbol("hbar", -2)
    expected = (gen("a", 2) * gen("p_b", 2) + gen("a", 3) * gen("p_b", 3)) * scale
    assert build_observable("gamma", 1, 1) == expected


def test_theta_eta_product() -> None:
    scale = L0 * P0 * ParamScalar.symbol("hbar", -2)
    product = multiply(theta_tensor(1, 2), eta_tensor(1, 2))
    assert product == gen("a", 3) * gen("p_b", 3) * scale
