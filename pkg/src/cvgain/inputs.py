"""Input states that can be fed through the teleporter."""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Coherent", "Vacuum", "SinglePhoton", "PolarizationQubit", "InputSpec"]


@dataclass(frozen=True)
class Coherent:
    alpha: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))


@dataclass(frozen=True)
class Vacuum:
    pass


@dataclass(frozen=True)
class SinglePhoton:
    pass


@dataclass(frozen=True)
class PolarizationQubit:
    """c_H |1>_H |0>_V + c_V |0>_H |1>_V."""

    c_h: complex
    c_v: complex

    def __post_init__(self):
        c_h, c_v = complex(self.c_h), complex(self.c_v)
        norm = abs(c_h) ** 2 + abs(c_v) ** 2
        if abs(norm - 1) > 1e-12:
            raise ValueError(f"qubit amplitudes not normalized: |c_H|^2+|c_V|^2 = {norm!r}")
        object.__setattr__(self, "c_h", c_h)
        object.__setattr__(self, "c_v", c_v)

    @classmethod
    def from_angles(cls, theta: float, phi: float = 0.0) -> "PolarizationQubit":
        return cls(math.cos(theta / 2), complex(math.cos(phi), math.sin(phi)) * math.sin(theta / 2))


InputSpec = Coherent | Vacuum | SinglePhoton | PolarizationQubit
