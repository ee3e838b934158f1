"""Teleportation fidelity as a function of gain.

Closed forms for coherent, vacuum, single-photon and photonic-qubit inputs,
a curve sampler, and a quadrature oracle that integrates the squared overlap
of input and conditional output over the measurement plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .inputs import Coherent, PolarizationQubit, SinglePhoton, Vacuum
from .quadrature import QuadratureSpec, integrate_plane
from .transfer import OutputKind, TeleportParams, conditional_output, probability_density

__all__ = [
    "fidelity_coherent",
    "fidelity_vacuum",
    "fidelity_single_photon",
    "fidelity_joint",
    "fidelity",
    "overlap",
    "fidelity_oracle",
    "normalization_oracle",
    "FidelityCurve",
    "sample_curve",
]


def _check_q(q) -> None:
    q = np.asarray(q, dtype=float)
    if np.any((q < 0) | (q >= 1)) or np.any(~np.isfinite(q)):
        raise ValueError(f"entanglement q must lie in [0, 1), got {q}")


def _w(q, g):
    return 1 - 2 * q * g + g * g


def fidelity_coherent(q, g, alpha):
    """Fidelity for a coherent input; only |alpha| matters."""
    _check_q(q)
    w = _w(q, g)
    k = 1 - np.square(q)
    return k / w * np.exp(-k * np.square(1 - g) * np.abs(alpha) ** 2 / w)


def fidelity_vacuum(q, g):
    _check_q(q)
    return (1 - np.square(q)) / _w(q, g)


def _photon_numerator(q, g):
    k = 1 - np.square(q)
    return np.square((g - q) * (1 - q * g)) + np.square(g * k)


def fidelity_single_photon(q, g):
    _check_q(q)
    return (1 - np.square(q)) / _w(q, g) ** 3 * _photon_numerator(q, g)


def fidelity_joint(q, g):
    """Photonic-qubit fidelity, equal to vacuum fidelity times single-photon fidelity."""
    _check_q(q)
    return np.square(1 - np.square(q)) / _w(q, g) ** 4 * _photon_numerator(q, g)


def fidelity(inp, q, g):
    if isinstance(inp, Coherent):
        return fidelity_coherent(q, g, inp.alpha)
    if isinstance(inp, Vacuum):
        return fidelity_vacuum(q, g)
    if isinstance(inp, SinglePhoton):
        return fidelity_single_photon(q, g)
    if isinstance(inp, PolarizationQubit):
        return fidelity_joint(q, g)
    raise TypeError(f"unknown input {inp!r}")


def _bra_coherent(alpha, gamma):
    # <alpha|gamma>
    return np.exp(-0.5 * abs(alpha) ** 2 - 0.5 * np.abs(gamma) ** 2 + np.conj(alpha) * gamma)


def overlap(inp, out):
    """<psi| applied to a (possibly array-valued) closed-form conditional output."""
    if out.kind is OutputKind.COHERENT:
        if isinstance(inp, Coherent):
            return out.scalar * _bra_coherent(inp.alpha, out.coherent_amplitude)
        if isinstance(inp, Vacuum):
            return out.scalar * _bra_coherent(0, out.coherent_amplitude)
        if isinstance(inp, SinglePhoton):
            g = out.coherent_amplitude
            return out.scalar * g * np.exp(-0.5 * np.abs(g) ** 2)
    elif out.kind is OutputKind.DISPLACED_QUBIT:
        c = out.displacement
        c0, c1 = out.components
        env = out.scalar * np.exp(-0.5 * np.abs(c) ** 2)
        if isinstance(inp, Vacuum):
            return env * (c0 - c1 * np.conj(c))
        if isinstance(inp, SinglePhoton):
            return env * (c0 * c + c1 * (1 - np.abs(c) ** 2))
        if isinstance(inp, Coherent):
            raise NotImplementedError("coherent bra on a displaced qubit output")
    raise TypeError(f"cannot overlap {inp!r} with {out.kind}")


def fidelity_oracle(inp, q: float, g: float, spec: QuadratureSpec | None = None) -> float:
    """Fidelity by direct quadrature of |<psi|T(beta)|psi>|^2 over beta."""
    if isinstance(inp, PolarizationQubit):
        raise TypeError("use cvgain.polarization.joint_fidelity_numeric for qubit inputs")
    spec = spec or QuadratureSpec()
    p = TeleportParams(q, g)

    def integrand(beta):
        return np.abs(overlap(inp, conditional_output(inp, p, beta))) ** 2

    return integrate_plane(integrand, spec, default_width=_w(q, g))


def normalization_oracle(inp, q: float, g: float, spec: QuadratureSpec | None = None) -> float:
    """Total probability of all measurement outcomes (should be 1)."""
    spec = spec or QuadratureSpec()
    p = TeleportParams(q, g)
    return integrate_plane(lambda b: probability_density(inp, p, b), spec, default_width=1 - q * q)


@dataclass(frozen=True)
class FidelityCurve:
    input: object
    q: float
    g: np.ndarray
    F: np.ndarray
    metadata: dict = field(default_factory=dict)

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.g.tolist(), self.F.tolist()))

    def argmax(self) -> tuple[float, float]:
        i = int(np.argmax(self.F))
        return float(self.g[i]), float(self.F[i])


def sample_curve(inp, q: float, g_range=(0.0, 2.0), n: int = 201) -> FidelityCurve:
    g_lo, g_hi = g_range
    if not g_lo < g_hi:
        raise ValueError(f"empty gain range {g_range}")
    if n < 2:
        raise ValueError("need at least two samples")
    g = np.linspace(g_lo, g_hi, n)
    F = np.asarray(fidelity(inp, q, g), dtype=float)
    return FidelityCurve(inp, q, g, F, {"g_range": (g_lo, g_hi), "n": n})
