"""Gain tuning and fidelity in continuous-variable quantum teleportation."""
from .fidelity import (
    FidelityCurve,
    fidelity,
    fidelity_coherent,
    fidelity_joint,
    fidelity_oracle,
    fidelity_single_photon,
    fidelity_vacuum,
    sample_curve,
)
from .gainopt import (
    CoherentFixedAmp,
    OptimalGainResult,
    PhotonicQubit,
    improvement_table,
    optimal_gain_coherent,
    optimal_gain_joint,
    rule_of_thumb_gain,
    stationarity_residual_coherent,
)
from .inputs import Coherent, PolarizationQubit, SinglePhoton, Vacuum
from .quadrature import QuadratureSpec
from .transfer import TeleportParams

__version__ = "0.1.0"
