"""
域模型层 - Pydantic 数据模型
"""

from ncphase.domain.models import (
    BoundResult,
    CorrectionResult,
    EtaBound,
    MomentReport,
    NCParams,
    QuantumNumbers,
    ScanRow,
    SuiteEntry,
    SuiteReport,
    ThetaBound,
    TransitionReference,
    TransitionShift,
    VanishingReport,
)
from ncphase.domain.types import (
    BoundRoute,
    CorrectionRoute,
    GeneratorKind,
    MomentMethod,
    ObservableId,
    OutputFormat,
    UnitSystem,
)

__all__ = [
    "QuantumNumbers",
    "NCParams",
    "CorrectionResult",
    "TransitionShift",
    "VanishingReport",
    "TransitionReference",
    "ThetaBound",
    "EtaBound",
    "BoundResult",
    "SuiteEntry",
    "SuiteReport",
    "MomentReport",
    "ScanRow",
    "GeneratorKind",
    "ObservableId",
    "CorrectionRoute",
    "BoundRoute",
    "MomentMethod",
    "OutputFormat",
    "UnitSystem",
]
