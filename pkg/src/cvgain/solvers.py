"""Scalar solvers: golden-section maximization, safeguarded Newton, cubic roots."""
from __future__ import annotations

import cmath
import math

import numpy as np

__all__ = ["golden_section_max", "bisect_newton", "sign_change_brackets", "cubic_roots"]

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_max(f, lo: float, hi: float, tol: float = 1e-8, max_iter: int = 200) -> tuple[float, float]:
    """Maximize a unimodal ``f`` on [lo, hi]; returns (argmax, max).

    The endpoints are compared against the interior optimum at the end, so a
    monotone ``f`` returns the right endpoint rather than a point near it.
    """
    a, b = float(lo), float(hi)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
    x = 0.5 * (a + b)
    best = (x, f(x))
    for end in (lo, hi):
        fe = f(end)
        if fe > best[1]:
            best = (end, fe)
    return float(best[0]), float(best[1])


def bisect_newton(f, df, lo: float, hi: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Root of ``f`` in a sign-change bracket [lo, hi].

    Newton steps are taken when they land inside the current bracket and
    shrink it fast enough; otherwise the bracket is bisected.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if flo * fhi > 0:
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    if flo > 0:
        lo, hi = hi, lo
    x = 0.5 * (lo + hi)
    dx_old = abs(hi - lo)
    for _ in range(max_iter):
        fx, dfx = f(x), df(x)
        if fx == 0:
            return x
        if fx < 0:
            lo = x
        else:
            hi = x
        newton_ok = dfx != 0 and min(lo, hi) < x - fx / dfx < max(lo, hi)
        if newton_ok and abs(fx / dfx) < 0.5 * dx_old:
            dx_old = abs(fx / dfx)
            x = x - fx / dfx
        else:
            dx_old = abs(hi - lo) / 2
            x = 0.5 * (lo + hi)
        if abs(hi - lo) <= tol or dx_old <= tol:
            return x
    return x


def sign_change_brackets(f, grid) -> list[tuple[float, float]]:
    grid = np.asarray(grid, dtype=float)
    vals = np.array([f(x) for x in grid])
    out = []
    for i in range(len(grid) - 1):
        if vals[i] == 0:
            out.append((grid[i], grid[i]))
        elif vals[i] * vals[i + 1] < 0:
            out.append((grid[i], grid[i + 1]))
    if vals[-1] == 0:
        out.append((grid[-1], grid[-1]))
    return out


def cubic_roots(b: complex, c: complex, d: complex) -> list[complex]:
    """All three roots of x^3 + b x^2 + c x + d by Cardano's formula.

    Uses principal complex square and cube roots throughout. The sign of the
    square root is chosen to keep the cube-root argument away from zero, which
    is what makes the formula branch-safe when all three roots are real.
    """
    d0 = b * b - 3 * c
    d1 = 2 * b**3 - 9 * b * c + 27 * d
    s = cmath.sqrt(d1 * d1 - 4 * d0**3)
    inner = (d1 + s) / 2 if abs(d1 + s) >= abs(d1 - s) else (d1 - s) / 2
    if inner == 0:
        return [-b / 3] * 3
    cbrt = inner ** (1 / 3)
    omega = complex(-0.5, math.sqrt(3) / 2)
    roots = []
    for k in range(3):
        ck = cbrt * omega**k
        roots.append(-(b + ck + d0 / ck) / 3)
    return roots
