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
from hhl import sharpness
from hhl import weights
from hhl.model import heisenberg
from hhl.model import results
from hhl.utils.exceptions import CatalogError, ParameterError

from conftest import SPHERE


GRID = norms.RadiusGrid.dyadic(-2, 2)


def test_C3_dilation_ball(ball, dilation):
    res = sharpness.constant_C3(ball, dilation, 0.0, 2.0, -0.25)
    assert res.id == 'C3'
    assert math.isclose(res.value, SPHERE, rel_tol=1e-7)
    assert res.pieces['norm<=1'] == pytest.approx(0.0, abs=1e-12)


def test_C3_sampled(dim):
    def diagonals(y):
        rho = heisenberg.koranyi_norm(y)[..., None]
        return np.concatenate([1.0 / rho, 1.0 / rho, 1.0 / rho ** 2], axis=-1)

    A = hausdorff.MatrixField.diagonal(dim, diagonals)
    Phi = hausdorff.annulus_indicator(0.5, 1.0)
    res = sharpness.constant_C3(Phi, A, 0.0, 2.0, -0.25)
    assert res.params['mode'] == 'mc'
    assert res.error > 0
    assert abs(res.value - SPHERE / 2) <= 4 * res.error + 1e-3 * SPHERE


def test_C1_through_hypotheses(ball, dilation, unweighted):
    prm = norms.NormParams(p=2, lam=-0.25, q=1, p1=3)
    prm = sharpness.check_hypotheses('aq-hausdorff', prm, unweighted,
                                     dilation, ball)
    assert prm.delta == 2.0
    res = sharpness.constant_for('aq-hausdorff', ball, dilation, prm)
    assert math.isclose(res.value, 2 * SPHERE, rel_tol=1e-7)


def test_C2_finite(ball, dilation, unweighted):
    prm = norms.NormParams(p=1, lam=-0.25, q=1, p1=4, p2=4)
    prm = sharpness.check_hypotheses('aq-commutator', prm, unweighted,
                                     dilation, ball)
    res = sharpness.constant_for('aq-commutator', ball, dilation, prm)
    assert res.id == 'C2'
    assert res.finite
    assert res.value > 0


def test_C4(ball, dilation):
    res = sharpness.constant_C4_C5(ball, dilation, 0.0, 1.0, 2.0, 2.0, -0.25)
    assert res.id == 'C4'
    expected = SPHERE * (1 + 1 / (2 * math.log(2)))
    assert math.isclose(res.value, expected, rel_tol=1e-7)


def test_C5_positive_alpha(ball, dilation):
    res = sharpness.constant_C4_C5(ball, dilation, 1.0, 1.0, 2.0, 2.0, -0.25)
    assert res.id == 'C5'
    assert res.finite
    with pytest.raises(ParameterError, match='p2 > \\(Q \\+ alpha\\)/Q'):
        sharpness.constant_C4_C5(ball, dilation, 1.0, 1.0, 6.0, 1.2, -0.25)


def test_sharp_and_log_integrals(ball, dilation):
    sharp = sharpness.sharp_integral(ball, dilation, 0.0, -0.25)
    assert sharp.id == 'Sharp11'
    assert math.isclose(sharp.value, SPHERE, rel_tol=1e-7)
    outer = sharpness.log_integrals('ii', ball, dilation, 0.0, -0.25)
    assert outer.id == 'Log-ii'
    assert math.isclose(outer.value, SPHERE / math.log(2), rel_tol=1e-7)
    inner = sharpness.log_integrals('i', ball, dilation, 0.0, -0.25)
    assert inner.id == 'Log-i'
    assert inner.value == pytest.approx(0.0, abs=1e-12)
    alias = sharpness.log_integrals('outer', ball, dilation, 0.0, -0.25)
    assert alias.id == 'Log-ii' and alias.value == outer.value
    with pytest.raises(ParameterError):
        sharpness.log_integrals('middle', ball, dilation, 0.0, -0.25)


def test_sharp_integral_diverges(dilation):
    res = sharpness.sharp_integral(hausdorff.power_ball(-2.0), dilation, 0.0,
                                   -0.25)
    assert not res.finite
    assert res.witness is not None


@pytest.mark.parametrize('beta', [-0.98, -0.95, -0.9])
def test_sharp_integral_near_threshold(dilation, beta):
    res = sharpness.sharp_integral(hausdorff.power_ball(beta), dilation, 0.0,
                                   -0.25)
    assert res.finite
    assert math.isclose(res.value, SPHERE / (beta + 1), rel_tol=1e-6)


@pytest.mark.parametrize('beta', [-1.05, -1.0])
def test_sharp_integral_just_past_threshold(dilation, beta):
    res = sharpness.sharp_integral(hausdorff.power_ball(beta), dilation, 0.0,
                                   -0.25)
    assert not res.finite
    assert 0 < res.witness < 1


def test_zero_kernel(dilation):
    res = sharpness.constant_C3(hausdorff.zero(), dilation, 0.0, 2.0, -0.25)
    assert res.value == 0.0


def test_unknown_selector():
    with pytest.raises(CatalogError, match='unknown theorem'):
        sharpness.check_selector('theorem-9')


def test_selector_aliases():
    assert sharpness.check_selector('1.5') == '1.5'
    assert sharpness.check_selector('sharp-hausdorff') == '1.5'
    assert sharpness.check_selector('sharp-commutator-outer') == '1.6ii'
    assert sorted(sharpness.aliases.values()) == sorted(sharpness.selectors)


def test_hypotheses_holder(dilation, unweighted):
    prm = norms.NormParams(p=2, p1=2, p2=2)
    with pytest.raises(ParameterError, match='1/p = 1/p1 \\+ 1/p2'):
        sharpness.check_hypotheses('power-commutator', prm, unweighted, dilation)


def test_hypotheses_aq(dim, dilation):
    w = weights.WeightSpec('power', 3.0, dim)
    prm = norms.NormParams(p=2, q=1, p1=3)
    with pytest.raises(ParameterError, match='is not in A_1'):
        sharpness.check_hypotheses('aq-hausdorff', prm, w, dilation)
    unweighted = weights.WeightSpec('power', 0.0, dim)
    with pytest.raises(ParameterError, match='requires p1 >'):
        sharpness.check_hypotheses('aq-hausdorff', prm.replace(p1=2),
                                   unweighted, dilation)
    with pytest.raises(ParameterError, match='requires q'):
        sharpness.check_hypotheses('aq-hausdorff', prm.replace(q=None),
                                   unweighted, dilation)


def test_hypotheses_sharp(dim, dilation, unweighted):
    signed = hausdorff.from_callable(lambda y: np.ones(y.shape[:-1]),
                                     (0.0, 1.0))
    with pytest.raises(ParameterError, match='nonnegative'):
        sharpness.check_hypotheses('sharp-hausdorff', norms.NormParams(),
                                   unweighted, dilation, signed)
    with pytest.raises(ParameterError, match='differs from alpha'):
        sharpness.check_hypotheses('sharp-hausdorff',
                                   norms.NormParams(alpha=1.0), unweighted,
                                   dilation)


def test_verify_power_hausdorff(ball, dilation, unweighted):
    prm = norms.NormParams(p=2, lam=-0.25)
    res = sharpness.verify_upper_bound('power-hausdorff', ball, dilation,
                                       unweighted, prm, grid=GRID)
    assert res.verdict == results.BOUNDED_CONSISTENT
    assert not res.failed
    assert math.isclose(res.operator_ratio, SPHERE, rel_tol=1e-5)
    assert set(res.tables) == {'source', 'image'}


def test_verify_detects_violation(ball, dilation, unweighted):
    prm = norms.NormParams(p=2, lam=-0.25)
    res = sharpness.verify_upper_bound('power-hausdorff', ball, dilation,
                                       unweighted, prm, grid=GRID, kappa=0.1)
    assert res.verdict == results.BOUND_VIOLATED
    assert res.failed


def test_verify_power_commutator(ball, dilation, unweighted):
    prm = norms.NormParams(p=1, p1=2, p2=2, lam=-0.25)
    res = sharpness.verify_upper_bound('1.4', ball, dilation,
                                       unweighted, prm, grid=GRID)
    assert res.verdict == results.BOUNDED_CONSISTENT
    assert 'cmo' in res.tables
    assert 'b' in res.params


def test_verify_rejects_sharp_selector(ball, dilation, unweighted):
    with pytest.raises(ParameterError, match='verify_sharpness'):
        sharpness.verify_upper_bound('sharp-hausdorff', ball, dilation,
                                     unweighted, norms.NormParams())
    with pytest.raises(ParameterError, match='verify_upper_bound'):
        sharpness.verify_sharpness('power-hausdorff', ball, dilation, 0.0,
                                   norms.NormParams())


def test_sharpness_equality(ball, dilation):
    res = sharpness.verify_sharpness('1.5', ball, dilation, 0.0,
                                     norms.NormParams(p=2, lam=-0.25),
                                     grid=GRID)
    assert res.theorem == '1.5'
    assert res.bound.id == 'Sharp11'
    assert res.verdict == results.SHARPNESS_WITNESSED
    assert 'equality' in res.notes
    assert math.isclose(res.lower_bound, SPHERE, rel_tol=1e-7)


def test_sharpness_needs_integrable_extremizer(ball, dilation):
    with pytest.raises(ParameterError, match='lambda > -1/p'):
        sharpness.verify_sharpness('sharp-hausdorff', ball, dilation, 0.0,
                                   norms.NormParams(p=2, lam=-0.5))


@pytest.mark.parametrize('selector', ['1.6i', '1.6ii'])
def test_commutator_sharpness(ball, dilation, selector):
    prm = norms.NormParams(p=1, p1=2, p2=2, lam=-0.25)
    res = sharpness.verify_sharpness(selector, ball, dilation, 0.0, prm,
                                     grid=GRID)
    assert res.verdict == results.SHARPNESS_WITNESSED
    assert res.lower_bound is not None


@pytest.mark.slow
def test_sharpness_divergence(dilation):
    res = sharpness.verify_sharpness('1.5',
                                     hausdorff.power_ball(-2.0), dilation, 0.0,
                                     norms.NormParams(p=2, lam=-0.25),
                                     grid=norms.RadiusGrid.dyadic(-1, 1))
    assert not res.bound.finite
    assert res.verdict == results.SHARPNESS_WITNESSED
    rows = res.tables['truncation']
    assert len(rows) == 9
    ratios = [row[1] for row in rows]
    assert ratios == sorted(ratios)
    # int_eps^1 rho^-2 drho = 1/eps - 1 more than doubles per halving
    for a, b in zip(ratios[:-1], ratios[1:]):
        assert b >= 2 * a
