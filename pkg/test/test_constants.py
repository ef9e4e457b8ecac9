# -*- coding: utf-8 -*-
# hhl - Hausdorff operators on the Heisenberg group, checked numerically
# Copyright(C) 2026, The hhl developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import math

import numpy as np
import pytest

from hhl import hausdorff
from hhl import norms
from hhl import quad
from hhl import sharpness
from hhl import weights
from hhl.model import results

from conftest import SPHERE


GRID = norms.RadiusGrid.dyadic(-2, 2)
LAM = -0.25


@pytest.fixture
def annulus():
    return hausdorff.annulus_indicator(0.5, 2.0)


@pytest.fixture
def scaled(dim):
    # ||D|| = 1.5, ||D^-1|| = 1, det D = 3
    return hausdorff.MatrixField.diagonal_scaled(dim, (1.5, 1.0, 2.0))


def oracle(A, outer, inner, lo=0.5, hi=2.0):
    '''omega_Q int F(rho) drho / rho over the annulus, F written in rho.'''
    split = A.split_radius
    total = 0.0
    for F, a, b in ((outer, lo, min(split, hi)), (inner, max(split, lo), hi)):
        if a < b:
            total += quad.integrate_1d(lambda rho: F(rho) / rho, a, b)[0]
    return A.dim.omega_Q * total


def test_C1_against_oracle(annulus, scaled):
    prm = norms.NormParams(p=2, lam=LAM, q=1, p1=3, delta=2)
    s = 1.5 ** 4 / 3

    def outer(rho):
        return s ** (1 / 3) * (1.5 / rho) ** (4 * LAM / 2)

    def inner(rho):
        return s ** (1 / 3) * (1.5 / rho) ** (4 * LAM)

    res = sharpness.constant_C1(annulus, scaled, prm)
    assert math.isclose(res.value, oracle(scaled, outer, inner), rel_tol=1e-6)


def test_C2_against_oracle(annulus, scaled):
    prm = norms.NormParams(p=1, lam=LAM, q=1, p1=4, p2=4, delta=2)
    s = 1.5 ** 4 / 3

    def outer(rho):
        N = 1.5 / rho
        return s ** 0.25 * N ** (4 * LAM / 2) * max(s, math.log2(N))

    def inner(rho):
        N = 1.5 / rho
        return s ** 0.25 * N ** (4 * LAM) * max(s, -math.log2(N))

    res = sharpness.constant_C2(annulus, scaled, prm)
    expected = oracle(scaled, np.vectorize(outer), np.vectorize(inner))
    assert math.isclose(res.value, expected, rel_tol=1e-6)


def test_C5_against_oracle(annulus, scaled):
    alpha, p, p1 = 1.0, 1.0, 2.0

    def part(rho, r):
        N, M, D = 1.5 / rho, rho, 3.0 / rho ** 4
        return N ** (5 * (LAM + 1 / r)) / D ** (1 / r) * M ** (alpha / r)

    def F(rho):
        N = 1.5 / rho
        return part(rho, p) + part(rho, p1) * np.maximum(
            N ** 4 / (3.0 / rho ** 4), np.abs(np.log2(N)))

    res = sharpness.constant_C4_C5(annulus, scaled, alpha, p, p1, 2.0, LAM)
    assert res.id == 'C5'
    assert math.isclose(res.value, oracle(scaled, F, F), rel_tol=1e-6)


def test_verify_C1(ball, dilation, unweighted):
    prm = norms.NormParams(p=2, lam=LAM, q=1, p1=3)
    res = sharpness.verify_upper_bound('1.1', ball, dilation, unweighted, prm,
                                       grid=GRID)
    assert res.theorem == '1.1'
    assert res.bound.id == 'C1'
    assert res.verdict == results.BOUNDED_CONSISTENT
    # H f* = C3 f*, so the ratio is C3 ||f*||_(2, lambda) / ||f*||_(3, lambda)
    expected = SPHERE * (norms.extremizer_norm(0.0, 2.0, LAM) /
                         norms.extremizer_norm(0.0, 3.0, LAM))
    assert math.isclose(res.operator_ratio, expected, rel_tol=1e-6)


def test_verify_C2(ball, dilation, unweighted):
    lam = -0.2
    prm = norms.NormParams(p=1, lam=lam, q=1, p1=4, p2=4)
    res = sharpness.verify_upper_bound('aq-commutator', ball, dilation,
                                       unweighted, prm, grid=GRID)
    assert res.theorem == '1.2'
    assert res.bound.id == 'C2'
    assert res.verdict == results.BOUNDED_CONSISTENT
    # |H^b f*| = omega_Q / (Q lambda)^2 f* for b = ln|x|_h
    expected = (SPHERE / (4 * lam) ** 2 *
                norms.extremizer_norm(0.0, 1.0, lam) /
                (norms.extremizer_norm(0.0, 4.0, lam) *
                 norms.log_cmo_norm(0.0, 4.0)))
    assert math.isclose(res.operator_ratio, expected, rel_tol=1e-5)


def test_verify_C5(ball, dilation, dim):
    w = weights.WeightSpec('power', 1.0, dim)
    prm = norms.NormParams(p=1, lam=LAM, alpha=1.0, p1=2, p2=2)
    res = sharpness.verify_upper_bound('1.4', ball, dilation, w, prm,
                                       grid=GRID)
    assert res.bound.id == 'C5'
    assert res.verdict == results.BOUNDED_CONSISTENT
    expected = (SPHERE / (5 * LAM) ** 2 *
                norms.extremizer_norm(1.0, 1.0, LAM) /
                (norms.extremizer_norm(1.0, 2.0, LAM) *
                 norms.log_cmo_norm(1.0, 2.0)))
    assert math.isclose(res.operator_ratio, expected, rel_tol=1e-5)
