"""Optimal gain for coherent states of known intensity and for photonic qubits.

Coherent inputs: the stationarity condition of the coherent fidelity,

    (g - q)(1 - 2 q g + g^2) = a^2 (1 - g^2),   a^2 = (1+q)(1-q)^2 |alpha|^2,

is a cubic in g, solved by Cardano and polished by Newton. Photonic qubits: the
stationarity condition of the joint fidelity is a quintic in h = 1 - g, solved
by a sign scan plus safeguarded Newton. Both are cross-checked against a
golden-section maximization of the fidelity itself.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fidelity import fidelity_coherent, fidelity_joint
from .solvers import bisect_newton, cubic_roots, golden_section_max, sign_change_brackets

__all__ = [
    "OptimalGainResult",
    "CoherentGainCondition",
    "InternalConsistencyError",
    "SolverError",
    "CoherentFixedAmp",
    "PhotonicQubit",
    "stationarity_residual_coherent",
    "alpha_sq_for_gain",
    "coherent_cubic",
    "printed_coherent_cubic",
    "optimal_gain_coherent",
    "joint_quintic",
    "optimal_gain_joint",
    "rule_of_thumb_gain",
    "improvement_table",
    "optimal_gain_vs_intensity",
]

GOLDEN_TOL = 1e-8
CROSS_CHECK_TOL = 1e-6
SCAN_STEP = 1e-3
ROOT_TOL = 1e-12


class InternalConsistencyError(RuntimeError):
    """Polynomial root and direct maximization disagree."""


class SolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class OptimalGainResult:
    q: float
    g_opt: float
    F_opt: float
    F_unit: float
    delta_F: float
    residual: float
    bracket: tuple[float, float]

    def row(self) -> tuple[float, float, float, float, float]:
        return (self.q, self.g_opt, self.F_opt, self.F_unit, self.delta_F)


@dataclass(frozen=True)
class CoherentGainCondition:
    q: float
    alpha_sq: float

    def __post_init__(self):
        _check_q(self.q)
        if self.alpha_sq < 0:
            raise ValueError(f"intensity must be nonnegative, got {self.alpha_sq}")

    @property
    def a_sq(self) -> float:
        return (1 + self.q) * (1 - self.q) ** 2 * self.alpha_sq


@dataclass(frozen=True)
class CoherentFixedAmp:
    alpha_sq: float


@dataclass(frozen=True)
class PhotonicQubit:
    pass


def _check_q(q: float) -> None:
    if not 0 <= q < 1:
        raise ValueError(f"entanglement q must lie in [0, 1), got {q}")


def stationarity_residual_coherent(q: float, g: float, alpha_sq: float) -> float:
    """Positive where the coherent fidelity decreases with g, negative where it rises.

    Undefined at |g| = 1, where the intensity form of the condition has its pole;
    there, differentiate the fidelity directly.
    """
    _check_q(q)
    if abs(g) == 1:
        raise ZeroDivisionError("stationarity condition has a pole at |g| = 1")
    a_sq = CoherentGainCondition(q, alpha_sq).a_sq
    return (g - q) * (1 - 2 * q * g + g * g) - a_sq * (1 - g * g)


def alpha_sq_for_gain(q: float, g):
    """Input intensity for which ``g`` is the optimal gain."""
    g = np.asarray(g, dtype=float)
    return (g - q) * (1 - 2 * q * g + g * g) / ((1 + q) * (1 - q) ** 2 * (1 - g * g))


def coherent_cubic(q: float, alpha_sq: float) -> np.ndarray:
    """Monic cubic coefficients (highest power first) whose root is g_opt."""
    a_sq = CoherentGainCondition(q, alpha_sq).a_sq
    return np.array([1.0, a_sq - 3 * q, 1 + 2 * q * q, -(a_sq + q)])


def printed_coherent_cubic(q: float, alpha_sq: float) -> np.ndarray:
    """Cubic as it appears in the literature. Its roots are not the optimal gain.

    At q = 0 it equals -p(-g) for the correct cubic p, so its real root sits at
    minus the optimum.
    """
    a_sq = CoherentGainCondition(q, alpha_sq).a_sq
    return np.array([1.0, -(a_sq + 3 * q), 1 - 2 * q * q, a_sq - q])


def _bracket_around(f, x: float, lo: float, hi: float) -> tuple[float, float]:
    delta = 1e-12
    while True:
        a, b = max(lo, x - delta), min(hi, x + delta)
        if f(a) * f(b) <= 0 or (a == lo and b == hi):
            return (a, b)
        delta *= 10


def optimal_gain_coherent(q: float, alpha_sq: float) -> OptimalGainResult:
    cond = CoherentGainCondition(q, alpha_sq)
    f_unit = float(fidelity_coherent(q, 1.0, np.sqrt(alpha_sq)))
    if alpha_sq == 0:
        return OptimalGainResult(q, q, 1.0, f_unit, 1.0 - f_unit, 0.0, (q, q))

    coeffs = coherent_cubic(q, alpha_sq)
    poly = np.polynomial.Polynomial(coeffs[::-1])
    dpoly = poly.deriv()
    candidates = [r.real for r in cubic_roots(*coeffs[1:]) if q - 1e-9 <= r.real <= 1 + 1e-9]
    if not candidates:
        raise SolverError(f"no cubic root in [q, 1] for q={q}, |alpha|^2={alpha_sq}")
    g = min(candidates, key=lambda r: abs(poly(r)))
    g = float(g - poly(g) / dpoly(g))

    g_gs, _ = golden_section_max(lambda x: fidelity_coherent(q, x, np.sqrt(alpha_sq)), q, 1.0, GOLDEN_TOL)
    if abs(g_gs - g) > CROSS_CHECK_TOL:
        raise InternalConsistencyError(f"cubic root {g} vs golden-section argmax {g_gs} (q={q}, |alpha|^2={alpha_sq})")

    f_opt = float(fidelity_coherent(q, g, np.sqrt(alpha_sq)))
    residual = float(abs(stationarity_residual_coherent(q, g, cond.alpha_sq)))
    return OptimalGainResult(q, g, f_opt, f_unit, f_opt - f_unit, residual, tuple(map(float, _bracket_around(poly, g, q, 1.0))))


def joint_quintic(q: float) -> np.ndarray:
    """Coefficients (highest power first) of the joint-fidelity optimum condition in h = 1 - g."""
    return np.array([
        2 * q**2,
        5 * q * (1 - q) ** 2,
        2 * (3 - 10 * q + 13 * q**2 - 10 * q**3 + 4 * q**4),
        -2 * (1 - q) ** 2 * (9 - q + 8 * q**2 - 2 * q**3),
        4 * (1 - q) ** 2 * (4 - q + 3 * q**2 - 2 * q**3),
        -4 * (1 - q) ** 3 * (1 + q**2),
    ])


def optimal_gain_joint(q: float) -> OptimalGainResult:
    _check_q(q)
    poly = np.polynomial.Polynomial(joint_quintic(q)[::-1])
    dpoly = poly.deriv()
    grid = np.linspace(0.0, 1.0, int(round(1 / SCAN_STEP)) + 1)
    brackets = sign_change_brackets(poly, grid)
    if not brackets:
        raise SolverError(f"no sign change of the quintic on h in [0, 1] for q={q}")
    roots = [bisect_newton(poly, dpoly, a, b, ROOT_TOL) if a != b else a for a, b in brackets]
    h = max(roots, key=lambda r: fidelity_joint(q, 1 - r))
    g = float(1 - h)

    g_gs, _ = golden_section_max(lambda x: fidelity_joint(q, x), 0.0, 1.0, GOLDEN_TOL)
    if abs(g_gs - g) > CROSS_CHECK_TOL:
        raise InternalConsistencyError(f"quintic root {g} vs golden-section argmax {g_gs} (q={q})")

    f_opt = float(fidelity_joint(q, g))
    f_unit = float(fidelity_joint(q, 1.0))
    bracket = next((float(1 - b), float(1 - a)) for (a, b), r in zip(brackets, roots) if r == h)
    return OptimalGainResult(q, g, f_opt, f_unit, f_opt - f_unit, float(abs(poly(h))), bracket)


def rule_of_thumb_gain(q):
    return 0.6 + 0.4 * np.asarray(q, dtype=float)


def improvement_table(family, q_grid) -> list[OptimalGainResult]:
    if isinstance(family, CoherentFixedAmp):
        solve = lambda q: optimal_gain_coherent(q, family.alpha_sq)  # noqa: E731
    elif isinstance(family, PhotonicQubit):
        solve = optimal_gain_joint
    else:
        raise TypeError(f"unknown input family {family!r}")
    return [solve(float(q)) for q in sorted(q_grid)]


def optimal_gain_vs_intensity(q: float, alpha_sq_grid) -> list[OptimalGainResult]:
    return [optimal_gain_coherent(q, float(a)) for a in alpha_sq_grid]
