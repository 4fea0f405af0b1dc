"""Coefficient formulas and their defining identities."""

import cmath
import math

import numpy as np
import pytest

from pscomp.coefficients import (
    gamma_double_jump, gamma_smallest_phase, gamma_triple_jump,
    order_condition_residuals,
)
from pscomp.errors import DomainError


def _admissible(k):
    if k % 2 == 0:
        return range(-k // 2, k // 2)
    return range(-(k + 1) // 2, (k - 1) // 2 + 1)


@pytest.mark.parametrize("k", range(1, 9))
def test_double_jump_identities_all_branches(k):
    for ell in _admissible(k):
        g = gamma_double_jump(k, ell)
        assert abs(g + g.conjugate() - 1.0) < 1e-14
        # Relative to the power magnitude: branches far from the real axis
        # have |g| > 1, which inflates the absolute residual past what
        # 64-bit arithmetic can represent.
        scale = max(1.0, abs(g) ** (k + 1))
        assert abs(g ** (k + 1) + g.conjugate() ** (k + 1)) < 1e-13 * scale
        assert g.real == 0.5


def test_double_jump_k2_matches_closed_form():
    g = gamma_double_jump(2, 0)
    assert g == pytest.approx(complex(0.5, math.sqrt(3.0) / 6.0), abs=1e-15)


def test_double_jump_k4_smallest_branch():
    g = gamma_double_jump(4, 0)
    assert g == pytest.approx(complex(0.5, math.tan(math.pi / 10.0) / 2.0), abs=1e-15)
    assert abs(g**5 + g.conjugate() ** 5) < 1e-14


@pytest.mark.parametrize("k,ell", [(2, 5), (2, 1), (2, -2), (4, 2), (3, 2)])
def test_double_jump_rejects_out_of_range_branch(k, ell):
    with pytest.raises(DomainError, match="admissible"):
        gamma_double_jump(k, ell)


def test_double_jump_rejects_bad_k():
    with pytest.raises(DomainError):
        gamma_double_jump(0, 0)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_smallest_phase_argument(k):
    g = gamma_smallest_phase(k)
    assert abs(cmath.phase(g) - math.pi / (2 * (k + 1))) < 1e-14
    assert g == gamma_double_jump(k, 0)


def test_smallest_phase_rejects_bad_k():
    with pytest.raises(DomainError):
        gamma_smallest_phase(0)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_triple_jump_residual(k):
    g1, g2 = gamma_triple_jump(k)
    assert abs(2.0 * g1 ** (k + 1) + g2 ** (k + 1)) < 1e-13
    assert g2 == 1.0 - 2.0 * g1  # exact by construction


@pytest.mark.parametrize("k", [2, 4])
def test_triple_jump_has_smallest_phase_among_complex_roots(k):
    # Oracle: enumerate all solutions of 2 z^{k+1} + (1 - 2z)^{k+1} = 0 by
    # polynomial root-finding and compare phases of the non-real ones.
    n = k + 1
    poly = np.zeros(n + 1, dtype=complex)
    poly[0] = 2.0
    for j in range(n + 1):
        # coefficient of z^j in (1 - 2z)^n, stored highest power first
        poly[n - j] += math.comb(n, j) * (-2.0) ** j
    roots = np.roots(poly)
    complex_roots = [r for r in roots if abs(r.imag) > 1e-10]
    assert complex_roots, "expected complex solutions"
    g1, _ = gamma_triple_jump(k)
    min_phase = min(abs(cmath.phase(r)) for r in complex_roots)
    assert abs(cmath.phase(g1)) <= min_phase + 1e-9


def test_order_condition_residuals_conjugate_pair():
    g = gamma_smallest_phase(2)
    s, p = order_condition_residuals([g, g.conjugate()], 2)
    assert abs(s) < 1e-15
    assert abs(p) < 1e-15


def test_order_condition_residuals_single_euler():
    s, p = order_condition_residuals([1.0], 1)
    assert s == 0.0
    assert p == 1.0


def test_order_condition_residuals_triple_jump_palindrome():
    g1, g2 = gamma_triple_jump(2)
    s, p = order_condition_residuals([g1, g2, g1], 2)
    assert abs(s) < 1e-13
    assert abs(p) < 1e-13


def test_order_condition_residuals_empty_list():
    with pytest.raises(DomainError):
        order_condition_residuals([], 2)
