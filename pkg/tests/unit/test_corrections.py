import math
from fractions import Fraction

import pytest

from ncphase.core.exceptions import (
    DivergentFormulaError,
    InvalidParameterError,
    QuantumNumberError,
)
from ncphase.domain.models import NCParams, QuantumNumbers
from ncphase.domain.types import CorrectionRoute
from ncphase.physics.corrections import (
    angular_momentum_matrices,
    correction,
    delta_eta,
    delta_ns,
    delta_theta,
    eta_coefficient,
    first_order_vanishing_check,
    ns_eta_part,
    ns_theta_part,
    scan_levels,
    second_order_eta_L,
    second_order_eta_L_closed_form,
    theta_bracket,
    theta_bracket_reduced,
    transition_shift,
)
from ncphase.physics.oscillator import GaussianOracle


def test_bracket_value_for_3d() -> None:
    assert theta_bracket(3, 2) == Fraction(1, 135)


def test_bracket_matches_reduced_form() -> None:
    for n in range(3, 12):
        for l in range(2, n):  # noqa: E741
            assert theta_bracket(n, l) == theta_bracket_reduced(n, l)


def test_bracket_rejects_low_l() -> None:
    with pytest.raises(DivergentFormulaError, match="delta_ns"):
        theta_bracket(2, 0)
    with pytest.raises(DivergentFormulaError):
        theta_bracket(2, 1)
    with pytest.raises(DivergentFormulaError):
        theta_bracket_reduced(3, 1)


def test_theta_correction_for_3d(theta_only: NCParams) -> None:
    assert delta_theta(3, 2, theta_only) == pytest.approx(-1.0 / 32805.0, rel=1e-12)


def test_theta_correction_scales_like_inverse_cube() -> None:
    l = 3  # noqa: E741
    big_l = l * (l + 1)
    limit = Fraction(
        3 * big_l - 1, 6 * big_l * (2 * l + 1) * (2 * l + 3) * (2 * l - 1) * (big_l - 2)
    )
    n = 1000
    ratio = theta_bracket(n, l) / (n * n) / limit
    assert abs(float(ratio) - 1.0) < 1e-5


def test_eta_coefficients() -> None:
    assert eta_coefficient(1, 0) == Fraction(1, 4)
    assert eta_coefficient(2, 0) == Fraction(7, 2)
    assert eta_coefficient(3, 2) == Fraction(9 * (45 + 1 - 18), 24)
    params = NCParams.from_moments(eta_sq_tilde=2.0)
    assert delta_eta(2, 1, params) == pytest.approx(2.0 * float(eta_coefficient(2, 1)))


def test_ns_formula() -> None:
    params = NCParams.from_moments(theta_tilde=1.0, eta_sq_tilde=0.0)
    assert delta_ns(1, params) == pytest.approx(0.67544, rel=1e-5)
    assert delta_ns(2, params) == pytest.approx(delta_ns(1, params) / 8.0)
    with pytest.raises(QuantumNumberError):
        delta_ns(0, params)


def test_correction_routes(theta_only: NCParams) -> None:
    ns = correction(1, 0, theta_only)
    assert ns.route is CorrectionRoute.NS
    generic = correction(3, 2, theta_only)
    assert generic.route is CorrectionRoute.GENERIC
    assert generic.total == pytest.approx(generic.delta_theta + generic.delta_eta)
    with pytest.raises(DivergentFormulaError):
        correction(3, 1, theta_only)
    with pytest.raises(QuantumNumberError):
        correction(2, 2, theta_only)


def test_correction_vanishes_without_noncommutativity() -> None:
    result = correction(4, 3, NCParams.from_moments())
    assert result.total == 0.0


def test_transition_shift_paths() -> None:
    params = NCParams.from_moments(theta_tilde=1.0, eta_sq_tilde=1.0)
    shift = transition_shift(params)
    assert shift.theta_direct == pytest.approx(-3.0 * math.pi / 16.0)
    assert shift.theta_levels == pytest.approx(-1.72 * 7.0 * math.pi / 64.0)
    assert shift.eta_direct == pytest.approx(shift.eta_levels)
    assert 0.0 < shift.theta_relative_gap < 0.01


def test_scan_rows_are_ordered() -> None:
    rows = scan_levels(3, NCParams.from_moments(theta_tilde=1.0, eta_sq_tilde=1.0))
    assert [(row.n, row.l) for row in rows] == [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)]
    p_row = rows[2]
    assert p_row.route is CorrectionRoute.UNSUPPORTED
    assert p_row.delta_theta is None
    assert p_row.total is None
    assert p_row.delta_eta > 0.0
    assert rows[-1].route is CorrectionRoute.GENERIC


@pytest.mark.parametrize("n_max", [0, 51])
def test_scan_range(n_max: int) -> None:
    with pytest.raises(InvalidParameterError):
        scan_levels(n_max, NCParams.from_moments())


def test_angular_momentum_matrices() -> None:
    lx, ly, lz = angular_momentum_matrices(2)
    commutator = lx @ ly - ly @ lx
    assert abs(commutator - 1j * lz).max() < 1e-12
    casimir = lx @ lx + ly @ ly + lz @ lz
    assert abs(casimir.diagonal() - 6.0).max() < 1e-12


@pytest.mark.parametrize("l", [0, 1, 2, 3])
def test_second_order_sum_matches_closed_form(l: int) -> None:  # noqa: E741
    params = NCParams.from_moments(eta_sq_tilde=0.3)
    closed = second_order_eta_L_closed_form(l + 1, l, 0.7, params)
    for m in range(-l, l + 1):
        summed = second_order_eta_L(l + 1, l, 0.7, params, m=m)
        assert summed == pytest.approx(closed, rel=1e-12, abs=1e-15)


def test_second_order_rejects_bad_input() -> None:
    params = NCParams.from_moments(eta_sq_tilde=0.3)
    with pytest.raises(InvalidParameterError):
        second_order_eta_L(2, 1, 0.0, params)
    with pytest.raises(QuantumNumberError):
        second_order_eta_L(2, 1, 1.0, params, m=2)


def test_first_order_terms_vanish(raw_params: NCParams) -> None:
    report = first_order_vanishing_check(raw_params)
    assert report.passed
    assert report.state == QuantumNumbers(n=2, l=1, m=1)


class _BiasedOracle(GaussianOracle):
    """把 ⟨η_k⟩ 错算为非零的振子"""

    def eta_first_moment(self, params: NCParams, i: int) -> float:
        return 0.1


def test_vanishing_check_detects_biased_oracle(raw_params: NCParams) -> None:
    report = first_order_vanishing_check(raw_params, oracle=_BiasedOracle())
    assert not report.passed
    assert report.eta_term == pytest.approx(0.05)


def test_ns_theta_part_uses_derived_theta_mean() -> None:
    params = NCParams(theta_sq_tilde=3.0 * math.pi / 8.0, eta_sq_tilde=0.0)
    assert ns_theta_part(1, params) == pytest.approx(1.72 * math.pi / 8.0)


@pytest.mark.parametrize("n", range(1, 11))
def test_generic_eta_matches_ns_eta_part(n: int) -> None:
    params = NCParams.from_moments(theta_tilde=0.5, eta_sq_tilde=0.7)
    assert delta_eta(n, 0, params) == ns_eta_part(n, params)


@pytest.mark.parametrize("n", [40, 60, 100])
def test_corrections_asymptotic_ratios(n: int) -> None:
    params = NCParams.from_moments(theta_sq_tilde=1.0, eta_sq_tilde=1.0)
    eta_ratio = delta_eta(2 * n, 0, params) / delta_eta(n, 0, params)
    theta_ratio = delta_theta(2 * n, 2, params) / delta_theta(n, 2, params)
    assert eta_ratio == pytest.approx(16.0, rel=0.05)
    assert theta_ratio == pytest.approx(1.0 / 8.0, rel=0.05)


@pytest.mark.parametrize("omega", [1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3])
def test_second_order_halves_when_omega_doubles(omega: float) -> None:
    params = NCParams.from_moments(eta_sq_tilde=0.3)
    ratio = second_order_eta_L(2, 1, 2.0 * omega, params) / second_order_eta_L(
        2, 1, omega, params
    )
    assert ratio == pytest.approx(0.5, abs=1e-12)


def test_second_order_negligible_at_large_omega() -> None:
    params = NCParams.from_moments(eta_sq_tilde=0.3)
    second = second_order_eta_L(2, 1, 1e12, params)
    assert abs(second) < 1e-10 * abs(delta_eta(2, 1, params))
