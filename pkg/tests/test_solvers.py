import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cvgain.solvers import bisect_newton, cubic_roots, golden_section_max, sign_change_brackets


def test_golden_section_parabola():
    x, fx = golden_section_max(lambda x: -((x - 0.3) ** 2) + 2, 0, 1, tol=1e-10)
    # comparing function values resolves a smooth peak only to ~sqrt(eps)
    assert x == pytest.approx(0.3, abs=1e-7)
    assert fx == pytest.approx(2)


def test_golden_section_monotone_returns_endpoint():
    x, _ = golden_section_max(lambda x: x, 0, 1)
    assert x == 1


def test_bisect_newton_sqrt2():
    r = bisect_newton(lambda x: x * x - 2, lambda x: 2 * x, 0, 2, 1e-14)
    assert r == pytest.approx(math.sqrt(2), abs=1e-14)


def test_bisect_newton_falls_back_on_flat_derivative():
    # Newton alone diverges from x=0 here; the bracket keeps it honest
    f = lambda x: math.atan(x - 0.7)  # noqa: E731
    df = lambda x: 1 / (1 + (x - 0.7) ** 2)  # noqa: E731
    assert bisect_newton(f, df, -20, 30, 1e-12) == pytest.approx(0.7, abs=1e-11)


def test_bisect_newton_requires_sign_change():
    with pytest.raises(ValueError):
        bisect_newton(lambda x: x * x + 1, lambda x: 2 * x, -1, 1)


def test_sign_change_brackets():
    br = sign_change_brackets(lambda x: (x - 0.25) * (x - 0.65), np.linspace(0, 1, 11))
    assert len(br) == 2
    assert br[0][0] < 0.25 < br[0][1]
    assert br[1][0] < 0.65 < br[1][1]


@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3))
def test_cubic_roots_reproduce_polynomial(rs):
    coeffs = np.poly(rs)
    roots = cubic_roots(*coeffs[1:])
    for r in roots:
        assert abs(np.polyval(coeffs, r)) <= 1e-8 * (1 + max(abs(x) for x in rs)) ** 3
    if min(abs(a - b) for a, b in [(rs[0], rs[1]), (rs[0], rs[2]), (rs[1], rs[2])]) > 0.1:
        assert sorted(np.real(roots)) == pytest.approx(sorted(rs), abs=1e-9)


def test_cubic_roots_three_real_branch():
    # casus irreducibilis: all three roots real
    roots = sorted(r.real for r in cubic_roots(-(0.2 + 0.5 + 0.9), 0.2 * 0.5 + 0.2 * 0.9 + 0.5 * 0.9, -0.2 * 0.5 * 0.9))
    np.testing.assert_allclose(roots, [0.2, 0.5, 0.9], atol=1e-12)


def test_cubic_triple_root():
    np.testing.assert_allclose(cubic_roots(-3, 3, -1), [1, 1, 1], atol=1e-12)
