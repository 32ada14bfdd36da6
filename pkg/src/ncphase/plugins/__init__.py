"""
恒等式组插件
"""

from ncphase.plugins.base import BaseIdentityGroup, Identity
from ncphase.plugins.canonical import CanonicalAlgebraGroup
from ncphase.plugins.invariance import (
    MagnitudeGroup,
    ScalarProductGroup,
    TensorCommutationGroup,
    VectorOperatorGroup,
)
from ncphase.plugins.jacobi import JacobiGroup
from ncphase.plugins.nc_algebra import AuxiliaryCCRGroup, MixedCommutatorGroup, NCAlgebraGroup
from ncphase.plugins.oscillators import OscillatorGroup

__all__ = [
    "BaseIdentityGroup",
    "Identity",
    "NCAlgebraGroup",
    "AuxiliaryCCRGroup",
    "MixedCommutatorGroup",
    "TensorCommutationGroup",
    "ScalarProductGroup",
    "MagnitudeGroup",
    "VectorOperatorGroup",
    "JacobiGroup",
    "OscillatorGroup",
    "CanonicalAlgebraGroup",
]
