"""
非对易相空间代数 - 精确正规序引擎与可观测量
"""

from ncphase.algebra.expr import (
    GeneratorId,
    Monomial,
    OperatorExpr,
    canonicalize,
    commutator,
    jacobi_defect,
    multiply,
    verify_relation,
)
from ncphase.algebra.observables import (
    CanonicalAlgebra,
    Representation,
    build_canonical_observable,
    build_observable,
)
from ncphase.algebra.scalar import ParamScalar, render_coefficient

__all__ = [
    "ParamScalar",
    "render_coefficient",
    "GeneratorId",
    "Monomial",
    "OperatorExpr",
    "canonicalize",
    "multiply",
    "commutator",
    "jacobi_defect",
    "verify_relation",
    "Representation",
    "CanonicalAlgebra",
    "build_observable",
    "build_canonical_observable",
]
