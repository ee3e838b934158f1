"""Truncated photon-number-basis states and operators.

Everything here is a plain numpy array wrapped in a small frozen dataclass.
The truncated objects serve as the numerical substrate against which the
closed-form teleportation expressions are checked.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FockVector",
    "FockOperator",
    "TwoModeVector",
    "default_dim",
    "number_state",
    "coherent_state",
    "coherent_amplitudes",
    "displacement_operator",
    "epr_state",
    "epr_dim_for_tail",
    "inner_product",
    "squeezing_to_q",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FockVector:
    """Single-mode state vector in the photon number basis.

    ``tail`` is the probability mass lost to truncation for states that are
    normalized in the untruncated space (0 for basis states).
    """

    amplitudes: np.ndarray
    tail: float = 0.0

    def __post_init__(self):
        amps = _frozen(self.amplitudes)
        if amps.ndim != 1 or amps.size < 1:
            raise ValueError("amplitudes must be a non-empty 1D array")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def __mul__(self, c) -> "FockVector":
        return FockVector(self.amplitudes * c, self.tail)

    __rmul__ = __mul__


@dataclass(frozen=True)
class FockOperator:
    matrix: np.ndarray

    def __post_init__(self):
        m = _frozen(self.matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("operator matrix must be square")
        if not np.all(np.isfinite(m)):
            raise ValueError("operator matrix has non-finite entries")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __matmul__(self, other):
        if isinstance(other, FockOperator):
            _check_dims(self.dim, other.dim)
            return FockOperator(self.matrix @ other.matrix)
        if isinstance(other, FockVector):
            _check_dims(self.dim, other.dim)
            return FockVector(self.matrix @ other.amplitudes, other.tail)
        return NotImplemented


@dataclass(frozen=True)
class TwoModeVector:
    """Two-mode state, ``amplitudes[n1, n2]`` is the coefficient of |n1>|n2>."""

    amplitudes: np.ndarray
    tail: float = 0.0

    def __post_init__(self):
        amps = _frozen(self.amplitudes)
        if amps.ndim != 2 or amps.shape[0] != amps.shape[1]:
            raise ValueError("two-mode amplitudes must be a square 2D array")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def _check_dims(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: {a} != {b}")


def _check_dim(dim: int) -> int:
    dim = int(dim)
    if dim < 1:
        raise ValueError(f"truncation dimension must be >= 1, got {dim}")
    return dim


def default_dim(*amplitudes: complex) -> int:
    """Truncation large enough that coherent tails stay below ~1e-12."""
    s = sum(abs(a) for a in amplitudes)
    return max(40, math.ceil(8 * (s + 1) ** 2))


def number_state(n: int, dim: int) -> FockVector:
    dim = _check_dim(dim)
    if not 0 <= n < dim:
        raise ValueError(f"photon number {n} outside truncation [0, {dim})")
    amps = np.zeros(dim, dtype=complex)
    amps[n] = 1.0
    return FockVector(amps)


def coherent_amplitudes(alpha, dim: int) -> np.ndarray:
    """exp(-|a|^2/2) a^n / sqrt(n!) for n < dim, broadcasting over ``alpha``.

    The trailing axis indexes photon number. The ratio recurrence
    c_n = c_{n-1} a / sqrt(n) avoids forming n! explicitly.
    """
    alpha = np.asarray(alpha, dtype=complex)
    out = np.empty(alpha.shape + (dim,), dtype=complex)
    out[..., 0] = np.exp(-0.5 * np.abs(alpha) ** 2)
    for n in range(1, dim):
        out[..., n] = out[..., n - 1] * alpha / math.sqrt(n)
    return out


def coherent_state(alpha: complex, dim: int | None = None) -> FockVector:
    dim = default_dim(alpha) if dim is None else _check_dim(dim)
    amps = coherent_amplitudes(complex(alpha), dim)
    tail = max(0.0, 1.0 - float(np.sum(np.abs(amps) ** 2)))
    return FockVector(amps, tail)


def _lower_displacement(beta: complex, dim: int) -> np.ndarray:
    """Entries <m|D(beta)|n> for m >= n, zero above the diagonal.

    For each offset k = m - n the scaled Laguerre values
        f_n = sqrt(n!/(n+k)!) beta^k exp(-|beta|^2/2) L_n^(k)(|beta|^2)
    obey the three-term Laguerre recurrence with the factorial ratio folded
    in, so nothing overflows. The seed f_0 is formed in log space.
    """
    x = abs(beta) ** 2
    out = np.zeros((dim, dim), dtype=complex)
    if beta == 0:
        np.fill_diagonal(out, 1.0)
        return out
    log_abs = math.log(abs(beta))
    phase = beta / abs(beta)
    n_idx = np.arange(dim)
    for k in range(dim):
        length = dim - k
        f = np.empty(length, dtype=complex)
        f[0] = math.exp(k * log_abs - 0.5 * math.lgamma(k + 1) - 0.5 * x) * phase**k
        if length > 1:
            f[1] = f[0] * (1 + k - x) / math.sqrt(1 + k)
        for n in range(1, length - 1):
            f[n + 1] = (
                (2 * n + 1 + k - x) * f[n] * math.sqrt((n + 1) / (n + 1 + k))
                - (n + k) * f[n - 1] * math.sqrt((n + 1) * n / ((n + 1 + k) * (n + k)))
            ) / (n + 1)
        out[n_idx[:length] + k, n_idx[:length]] = f
    return out


def displacement_operator(beta: complex, dim: int | None = None) -> FockOperator:
    """Truncated matrix of D(beta) from the associated-Laguerre closed form.

    Entries above the diagonal follow from <m|D(b)|n> = conj(<n|D(-b)|m>).
    """
    beta = complex(beta)
    dim = default_dim(beta) if dim is None else _check_dim(dim)
    lower = _lower_displacement(beta, dim)
    upper = np.conj(_lower_displacement(-beta, dim)).T
    mat = np.tril(lower) + np.triu(upper, 1)
    return FockOperator(mat)


def epr_state(q: float, dim: int) -> TwoModeVector:
    """Two-mode squeezed vacuum sqrt(1-q^2) sum_n q^n |n>|n>, truncated."""
    if not 0 <= q < 1:
        raise ValueError(f"entanglement q must lie in [0, 1), got {q}")
    dim = _check_dim(dim)
    amps = np.zeros((dim, dim), dtype=complex)
    np.fill_diagonal(amps, math.sqrt(1 - q * q) * q ** np.arange(dim, dtype=float))
    return TwoModeVector(amps, tail=q ** (2 * dim))


def epr_dim_for_tail(q: float, tol: float) -> int:
    """Smallest truncation with EPR tail mass q^(2 dim) below ``tol``."""
    if not 0 <= q < 1:
        raise ValueError(f"entanglement q must lie in [0, 1), got {q}")
    if q == 0:
        return 1
    return max(1, math.floor(math.log(tol) / (2 * math.log(q))) + 1)


def inner_product(a: FockVector, b: FockVector) -> complex:
    _check_dims(a.dim, b.dim)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def squeezing_to_q(r: float) -> float:
    if r < 0:
        raise ValueError(f"squeezing parameter must be nonnegative, got {r}")
    return math.tanh(r)
