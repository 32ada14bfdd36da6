"""
由 1s-2s 跃迁的测量精度反推非对易参数的上界
"""

from __future__ import annotations

import logging
import math

from ncphase.core.exceptions import InvalidParameterError
from ncphase.domain.models import BoundResult, EtaBound, ThetaBound, TransitionReference
from ncphase.domain.types import BoundRoute
from ncphase.infra.constants import TRANSITION_1S2S, PhysicalConstants, default_constants
from ncphase.physics.corrections import (
    ETA_TRANSITION_SHIFT,
    NS_THETA_CONSTANT,
    THETA_TRANSITION_SHIFT,
)
from ncphase.physics.hydrogen import energy0

logger = logging.getLogger(__name__)

DEFAULT_SPLIT = 0.5


def transition_gap() -> float:
    """|E₂ − E₁| = 3/8 Hartree"""
    return float(energy0(2) - energy0(1))


def theta_transition_coefficient(route: BoundRoute = BoundRoute.PAPER) -> float:
    """|Δθ| / θ̃：3π/16，或 ns 公式能级差给出的 1.72·7π/64"""
    if route is BoundRoute.PAPER:
        return abs(float(THETA_TRANSITION_SHIFT)) * math.pi
    return float(NS_THETA_CONSTANT) * 7.0 * math.pi / 64.0


def _check_budget(rel_accuracy: float, budget_fraction: float) -> None:
    if rel_accuracy <= 0:
        raise InvalidParameterError(f"rel_accuracy must be positive, got {rel_accuracy}")
    if not 0 < budget_fraction <= 1:
        raise InvalidParameterError(f"budget_fraction must be in (0, 1], got {budget_fraction}")


def bound_theta(
    rel_accuracy: float,
    budget_fraction: float,
    route: BoundRoute = BoundRoute.PAPER,
    constants: PhysicalConstants | None = None,
) -> ThetaBound:
    """
    |Δθ| / |E₂ − E₁| ≤ budget·accuracy 给出的 θ̃ 上界

    Args:
        rel_accuracy: 相对测量精度
        budget_fraction: 分配给 θ 的误差预算比例
        route: Δθ 的取法
        constants: SI 换算用常数表

    Raises:
        InvalidParameterError: 输入非正或预算超过 1
    """
    _check_budget(rel_accuracy, budget_fraction)
    constants = constants or default_constants()
    budget = budget_fraction * rel_accuracy * transition_gap()
    theta_tilde = budget / theta_transition_coefficient(route)
    return ThetaBound(
        theta_tilde=theta_tilde,
        theta_si=constants.theta_to_si(theta_tilde),
        rel_accuracy=rel_accuracy,
        budget_fraction=budget_fraction,
        route=route,
    )


def bound_eta(
    rel_accuracy: float,
    budget_fraction: float,
    constants: PhysicalConstants | None = None,
) -> EtaBound:
    """
    (13/4) η̃² ≤ budget·accuracy·(3/8) 给出的 η̃ 上界

    Raises:
        InvalidParameterError: 输入非正或预算超过 1
    """
    _check_budget(rel_accuracy, budget_fraction)
    constants = constants or default_constants()
    eta_tilde = math.sqrt(
        budget_fraction * rel_accuracy * transition_gap() / float(ETA_TRANSITION_SHIFT)
    )
    return EtaBound(
        eta_tilde=eta_tilde,
        eta_si=constants.eta_to_si(eta_tilde),
        rel_accuracy=rel_accuracy,
        budget_fraction=budget_fraction,
    )


def transition_reference() -> TransitionReference:
    """1s-2s 跃迁的参考频率与相对精度"""
    return TRANSITION_1S2S


def measured_transition_energy(constants: PhysicalConstants | None = None) -> float:
    """参考频率对应的 h·f（Hartree），与非相对论能级差 3/8 对照"""
    constants = constants or default_constants()
    return constants.frequency_to_hartree(transition_reference().frequency_hz)


def estimate_bounds(
    rel_accuracy: float | None = None,
    split: float = DEFAULT_SPLIT,
    route: BoundRoute = BoundRoute.PAPER,
    constants: PhysicalConstants | None = None,
) -> BoundResult:
    """
    按 split : (1 − split) 分配误差预算，同时给出 θ、η 上界

    Args:
        rel_accuracy: 相对精度，缺省取参考测量值
        split: 分配给 θ 的比例，须在 (0, 1) 内
    """
    if not 0 < split < 1:
        raise InvalidParameterError(f"split must be in (0, 1), got {split}")
    accuracy = rel_accuracy if rel_accuracy is not None else transition_reference().rel_accuracy
    constants = constants or default_constants()
    logger.debug(
        "1s-2s: measured %.9f Hartree, nonrelativistic gap %.9f Hartree",
        measured_transition_energy(constants),
        transition_gap(),
    )
    result = BoundResult(
        theta=bound_theta(accuracy, split, route, constants),
        eta=bound_eta(accuracy, 1.0 - split, constants),
        accuracy_used=accuracy,
        split=split,
    )
    if result.paper_value_discrepancy:
        logger.info(
            "eta bound %.3g differs from the published %.0e by more than a decade",
            result.eta.eta_si,
            result.published_eta_si,
        )
    return result
