"""Gain-dependent transfer operator and the conditional output states.

The teleporter maps an input |psi> to the unnormalized output T(beta)|psi>
conditioned on the measured field value beta, with

    T(beta) = sqrt((1-q^2)/pi) D(g beta) q^n D(-beta).

Closed forms are provided for coherent, vacuum and single-photon inputs. All
closed-form functions broadcast over array-valued ``beta``. The matrix route
(:func:`transfer_operator`) exists to check them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .fock import FockOperator, FockVector, coherent_amplitudes, default_dim, displacement_operator
from .inputs import Coherent, PolarizationQubit, SinglePhoton, Vacuum

__all__ = [
    "TeleportParams",
    "OutputKind",
    "ConditionalOutput",
    "transfer_operator",
    "output_coherent",
    "output_vacuum",
    "output_single_photon",
    "conditional_output",
    "render",
    "probability_density",
]


@dataclass(frozen=True)
class TeleportParams:
    """Entanglement ``q`` in [0, 1) and gain ``g`` (any finite real)."""

    q: float
    g: float = 1.0

    def __post_init__(self):
        q, g = float(self.q), float(self.g)
        if not 0 <= q < 1:
            raise ValueError(f"entanglement q must lie in [0, 1), got {q}")
        if not math.isfinite(g):
            raise ValueError(f"gain must be finite, got {g}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "g", g)

    @property
    def prefactor(self) -> float:
        return math.sqrt((1 - self.q**2) / math.pi)


class OutputKind(Enum):
    COHERENT = "coherent"
    DISPLACED_QUBIT = "displaced_qubit"
    MATRIX = "matrix"


@dataclass(frozen=True)
class ConditionalOutput:
    """Unnormalized output state for one measurement result (or an array of them).

    COHERENT:         scalar * |coherent_amplitude>
    DISPLACED_QUBIT:  scalar * D(displacement) (c0 |0> + c1 |1>)
    MATRIX:           the explicit truncated ``vector``
    """

    kind: OutputKind
    scalar: complex | np.ndarray = 1.0
    coherent_amplitude: complex | np.ndarray | None = None
    displacement: complex | np.ndarray | None = None
    components: tuple | None = None
    vector: FockVector | None = None

    def norm_sq(self):
        if self.kind is OutputKind.COHERENT:
            return np.abs(self.scalar) ** 2
        if self.kind is OutputKind.DISPLACED_QUBIT:
            c0, c1 = self.components
            return np.abs(self.scalar) ** 2 * (np.abs(c0) ** 2 + np.abs(c1) ** 2)
        return self.vector.norm_sq()


def transfer_operator(p: TeleportParams, beta: complex, dim: int | None = None) -> FockOperator:
    beta = complex(beta)
    dim = default_dim(beta, p.g * beta) if dim is None else dim
    d_out = displacement_operator(p.g * beta, dim).matrix
    d_in = displacement_operator(-beta, dim).matrix
    weights = p.q ** np.arange(dim, dtype=float)
    return FockOperator(p.prefactor * (d_out * weights) @ d_in)


def _envelope(p: TeleportParams, x):
    return p.prefactor * np.exp(-0.5 * (1 - p.q**2) * x)


def output_coherent(p: TeleportParams, beta, alpha) -> ConditionalOutput:
    beta = np.asarray(beta, dtype=complex)
    alpha = np.asarray(alpha, dtype=complex)
    # purely imaginary exponent: a unit-modulus phase
    twisted = alpha * np.conj(beta) - np.conj(alpha) * beta
    phase = np.exp(0.5j * (1 - p.q * p.g) * twisted.imag)
    scalar = _envelope(p, np.abs(alpha - beta) ** 2) * phase
    amplitude = p.q * alpha + (p.g - p.q) * beta
    return ConditionalOutput(OutputKind.COHERENT, scalar=scalar, coherent_amplitude=amplitude)


def output_vacuum(p: TeleportParams, beta) -> ConditionalOutput:
    beta = np.asarray(beta, dtype=complex)
    scalar = _envelope(p, np.abs(beta) ** 2) + 0j
    return ConditionalOutput(OutputKind.COHERENT, scalar=scalar, coherent_amplitude=(p.g - p.q) * beta)


def output_single_photon(p: TeleportParams, beta) -> ConditionalOutput:
    beta = np.asarray(beta, dtype=complex)
    scalar = _envelope(p, np.abs(beta) ** 2) + 0j
    c0 = (1 - p.q**2) * np.conj(beta)
    c1 = np.full_like(beta, p.q)
    return ConditionalOutput(
        OutputKind.DISPLACED_QUBIT,
        scalar=scalar,
        displacement=(p.g - p.q) * beta,
        components=(c0, c1),
    )


def conditional_output(inp, p: TeleportParams, beta) -> ConditionalOutput:
    if isinstance(inp, Coherent):
        return output_coherent(p, beta, inp.alpha)
    if isinstance(inp, Vacuum):
        return output_vacuum(p, beta)
    if isinstance(inp, SinglePhoton):
        return output_single_photon(p, beta)
    if isinstance(inp, PolarizationQubit):
        raise TypeError("two-mode qubit inputs are handled by cvgain.polarization")
    raise TypeError(f"unknown input {inp!r}")


def render(out: ConditionalOutput, dim: int) -> FockVector:
    """Photon-number amplitudes of a scalar-``beta`` conditional output.

    Uses D(c)|1> = (a^dag - c*) |c>, so no displacement matrix is involved.
    """
    if out.kind is OutputKind.MATRIX:
        return out.vector
    scalar = complex(out.scalar)
    if out.kind is OutputKind.COHERENT:
        return FockVector(scalar * coherent_amplitudes(complex(out.coherent_amplitude), dim))
    c = complex(out.displacement)
    c0, c1 = (complex(x) for x in out.components)
    coh = coherent_amplitudes(c, dim)
    raised = np.zeros(dim, dtype=complex)
    raised[1:] = np.sqrt(np.arange(1, dim)) * coh[:-1]
    return FockVector(scalar * (c0 * coh + c1 * (raised - np.conj(c) * coh)))


def probability_density(inp, p: TeleportParams, beta):
    """Probability density of the measurement result ``beta``.

    It does not depend on the gain: D(g beta) is unitary and only acts after
    the projection.
    """
    beta = np.asarray(beta, dtype=complex)
    k = 1 - p.q**2
    if isinstance(inp, Coherent):
        return k / math.pi * np.exp(-k * np.abs(inp.alpha - beta) ** 2)
    if isinstance(inp, Vacuum):
        return k / math.pi * np.exp(-k * np.abs(beta) ** 2)
    if isinstance(inp, SinglePhoton):
        b2 = np.abs(beta) ** 2
        return k / math.pi * np.exp(-k * b2) * (k**2 * b2 + p.q**2)
    return conditional_output(inp, p, beta).norm_sq()
