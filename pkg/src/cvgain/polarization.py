"""Teleportation of a single photon of unknown polarization.

Both polarization modes go through identical teleporters with the same gain.
Only photon numbers 0 and 1 of each mode enter the fidelity, so every
integrand is assembled from the 2x2 block of T(beta) per mode.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .inputs import PolarizationQubit
from .quadrature import QuadratureSpec, integrate_plane_pair
from .transfer import TeleportParams, transfer_operator

__all__ = [
    "ModeMatrixElements",
    "mode_matrix_elements",
    "mode_matrix_elements_numeric",
    "gram_elements",
    "qubit_overlap",
    "joint_fidelity_numeric",
    "two_mode_normalization",
    "basis_rotation_check",
    "zero_outcome_amplitudes",
    "random_qubits",
]


@dataclass(frozen=True)
class ModeMatrixElements:
    """<m|T(beta)|n> for m, n in {0, 1}; ``tmn`` is row m, column n."""

    t00: complex | np.ndarray
    t01: complex | np.ndarray
    t10: complex | np.ndarray
    t11: complex | np.ndarray


def mode_matrix_elements(p: TeleportParams, beta) -> ModeMatrixElements:
    beta = np.asarray(beta, dtype=complex)
    q, g = p.q, p.g
    b2 = np.abs(beta) ** 2
    gamma = (g - q) * beta
    env = p.prefactor * np.exp(-0.5 * (1 - q * q) * b2 - 0.5 * np.abs(gamma) ** 2) + 0j
    return ModeMatrixElements(
        t00=env,
        t01=env * (1 - q * g) * np.conj(beta),
        t10=env * gamma,
        t11=env * (q + (1 - q * g) * (g - q) * b2),
    )


def mode_matrix_elements_numeric(p: TeleportParams, beta: complex, dim: int = 80) -> ModeMatrixElements:
    t = transfer_operator(p, beta, dim).matrix
    return ModeMatrixElements(t[0, 0], t[0, 1], t[1, 0], t[1, 1])


def gram_elements(p: TeleportParams, beta):
    """(G00, G01, G11) with Gmn = <m|T^dag T|n>; the gain drops out."""
    beta = np.asarray(beta, dtype=complex)
    k = 1 - p.q**2
    b2 = np.abs(beta) ** 2
    base = k / math.pi * np.exp(-k * b2)
    return base, base * k * np.conj(beta), base * (k * k * b2 + p.q**2)


def qubit_overlap(qubit: PolarizationQubit, h: ModeMatrixElements, v: ModeMatrixElements):
    """<S| T(beta_H) x T(beta_V) |S> for S = c_H |1,0> + c_V |0,1>."""
    ch, cv = qubit.c_h, qubit.c_v
    return (
        abs(ch) ** 2 * h.t11 * v.t00
        + np.conj(ch) * cv * h.t10 * v.t01
        + np.conj(cv) * ch * h.t01 * v.t10
        + abs(cv) ** 2 * h.t00 * v.t11
    )


def _spec(spec):
    return spec or QuadratureSpec(points=24)


def joint_fidelity_numeric(qubit: PolarizationQubit, p: TeleportParams, spec: QuadratureSpec | None = None) -> float:
    """Fidelity from a 4D quadrature over (beta_H, beta_V)."""

    def integrand(beta_h, beta_v):
        h = mode_matrix_elements(p, beta_h)
        v = mode_matrix_elements(p, beta_v)
        return np.abs(qubit_overlap(qubit, h, v)) ** 2

    return integrate_plane_pair(integrand, _spec(spec), default_width=1 - 2 * p.q * p.g + p.g**2)


def two_mode_normalization(qubit: PolarizationQubit, p: TeleportParams, spec: QuadratureSpec | None = None) -> float:
    """Total outcome probability, the 4D integral of ||T x T |S>||^2."""
    ch, cv = qubit.c_h, qubit.c_v

    def integrand(beta_h, beta_v):
        h00, h01, h11 = gram_elements(p, beta_h)
        v00, v01, v11 = gram_elements(p, beta_v)
        cross = np.conj(ch) * cv * np.conj(h01) * v01
        return abs(ch) ** 2 * h11 * v00 + abs(cv) ** 2 * h00 * v11 + 2 * cross.real

    return integrate_plane_pair(integrand, _spec(spec), default_width=1 - p.q**2)


def basis_rotation_check(qubit: PolarizationQubit, p: TeleportParams, beta_h: complex, beta_v: complex, dim: int = 40) -> float:
    """|<S|T(b_H) x T(b_V)|S>| minus |<H|T(b_S) x T(b_P)|H>|, via truncated matrices.

    b_S = c_H b_H + c_V b_V and b_P = c_V b_H - c_H b_V. The rotation is an
    orthogonal mode mixing only for real c_H, c_V.
    """
    ch, cv = qubit.c_h, qubit.c_v
    if ch.imag != 0 or cv.imag != 0:
        raise ValueError("basis_rotation_check needs real qubit amplitudes")
    ch, cv = ch.real, cv.real
    h = mode_matrix_elements_numeric(p, beta_h, dim)
    v = mode_matrix_elements_numeric(p, beta_v, dim)
    lhs = qubit_overlap(qubit, h, v)
    s = mode_matrix_elements_numeric(p, ch * beta_h + cv * beta_v, dim)
    pp = mode_matrix_elements_numeric(p, cv * beta_h - ch * beta_v, dim)
    rhs = s.t11 * pp.t00
    return float(abs(abs(lhs) - abs(rhs)))


def zero_outcome_amplitudes(p: TeleportParams) -> tuple[complex, complex]:
    """Amplitudes of T(0) x T(0) on |H> and on |V>; equal since T(0) x T(0) ~ q^(n_H + n_V)."""
    t = mode_matrix_elements(p, 0)
    return complex(t.t11 * t.t00), complex(t.t00 * t.t11)


def random_qubits(n: int, seed: int = 0) -> list[PolarizationQubit]:
    """Haar-random qubits from numpy's PCG64 generator."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        z = rng.normal(size=2) + 1j * rng.normal(size=2)
        z /= np.linalg.norm(z)
        out.append(PolarizationQubit(z[0], z[1]))
    return out
