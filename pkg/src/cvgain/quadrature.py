"""Quadrature rules for integrals over the complex plane.

Integrands here all carry a Gaussian envelope exp(-w |beta|^2). The rules
absorb that envelope analytically (beta = u / sqrt(w)), so the nodes follow the
integrand's natural width.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.laguerre import laggauss

__all__ = ["QuadratureSpec", "ConvergenceError", "plane_rule", "integrate_plane", "integrate_plane_pair"]

SCHEMES = ("hermite", "polar")


class ConvergenceError(RuntimeError):
    """Doubling the quadrature order moved the result by more than allowed."""


@dataclass(frozen=True)
class QuadratureSpec:
    """How to discretize a d^2 beta integral.

    scheme  -- "hermite" (tensor Gauss-Hermite in Re/Im beta) or "polar"
               (Gauss-Laguerre in |beta|^2 times trapezoid in the angle)
    points  -- nodes per axis
    width   -- Gaussian envelope exponent w; None lets the caller choose
    tol     -- if set, the integral is repeated at twice the points and a
               change larger than 10 * tol raises ConvergenceError
    """

    scheme: str = "hermite"
    points: int = 48
    width: float | None = None
    tol: float | None = None

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown quadrature scheme {self.scheme!r}")
        if self.points < 8:
            raise ValueError(f"need at least 8 points per axis, got {self.points}")
        if self.width is not None and not self.width > 0:
            raise ValueError("Gaussian width must be positive")

    def doubled(self) -> "QuadratureSpec":
        return QuadratureSpec(self.scheme, 2 * self.points, self.width, None)


def plane_rule(scheme: str, points: int, width: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights with sum(w * f(nodes)) ~ integral of f over the plane."""
    if scheme == "hermite":
        u, w = hermgauss(points)
        # the envelope exp(-u^2) is divided back out of the weights
        w_eff = np.exp(np.log(w) + u * u) / math.sqrt(width)
        x = u / math.sqrt(width)
        nodes = x[:, None] + 1j * x[None, :]
        weights = w_eff[:, None] * w_eff[None, :]
        return nodes.ravel(), weights.ravel()
    if scheme == "polar":
        t, w = laggauss(points)
        radial_w = np.exp(np.log(w) + t) / (2 * width)
        r = np.sqrt(t / width)
        theta = 2 * math.pi * np.arange(points) / points
        nodes = r[:, None] * np.exp(1j * theta)[None, :]
        weights = np.repeat(radial_w * (2 * math.pi / points), points)
        return nodes.ravel(), weights
    raise ValueError(f"unknown quadrature scheme {scheme!r}")


def _check(value_fn, spec: QuadratureSpec, default_width: float) -> float:
    width = spec.width if spec.width is not None else default_width
    value = value_fn(spec.scheme, spec.points, width)
    if spec.tol is not None:
        finer = value_fn(spec.scheme, 2 * spec.points, width)
        if abs(finer - value) > 10 * spec.tol:
            raise ConvergenceError(
                f"quadrature not converged: {value!r} vs {finer!r} at {spec.points}/{2 * spec.points} points"
            )
    return value


def integrate_plane(f, spec: QuadratureSpec, default_width: float) -> float:
    """Integral of a vectorized real function ``f(beta)`` over the plane."""

    def value(scheme, points, width):
        nodes, weights = plane_rule(scheme, points, width)
        return float(math.fsum(weights * f(nodes)))

    return _check(value, spec, default_width)


def integrate_plane_pair(f, spec: QuadratureSpec, default_width: float) -> float:
    """Integral of ``f(beta_1, beta_2)`` over two complex planes (4D).

    The outer loop runs over beta_1 nodes in a fixed order and partial sums
    are combined with fsum, so results are bit-reproducible.
    """

    def value(scheme, points, width):
        nodes, weights = plane_rule(scheme, points, width)
        partial = [float(np.dot(weights, f(b1, nodes))) * w1 for b1, w1 in zip(nodes, weights)]
        return math.fsum(partial)

    return _check(value, spec, default_width)
