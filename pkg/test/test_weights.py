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

from hhl import quad
from hhl import weights
from hhl.model.heisenberg import BallSpec
from hhl.utils.exceptions import CatalogError, DivergenceError, ParameterError

from conftest import SPHERE


def central_family(dim):
    return [BallSpec.central(dim, r) for r in (0.25, 1.0, 4.0)]


def test_catalog(dim):
    w = weights.WeightSpec('power', 2.0, dim)
    assert w.label == 'power(2)'
    assert np.allclose(w(np.array([[2.0, 0.0, 0.0]])), [4.0])
    m = weights.WeightSpec('max-one', -1.0, dim)
    assert np.allclose(m(np.array([[0.5, 0.0, 0.0], [2.0, 0.0, 0.0]])),
                       [1.0, 0.5])
    with pytest.raises(CatalogError):
        weights.WeightSpec('exponential', 1.0, dim)
    with pytest.raises(ParameterError):
        weights.WeightSpec('power', -4.0, dim).validate()


@pytest.mark.parametrize('alpha,q_w,r_w', [
    (0.0, 1.0, math.inf),
    (2.0, 1.5, math.inf),
    (-2.0, 1.0, 2.0),
])
def test_critical_exponents(dim, alpha, q_w, r_w):
    w = weights.WeightSpec('power', alpha, dim)
    assert math.isclose(w.critical_q, q_w)
    assert w.critical_rh == r_w


def test_ap_membership(dim):
    assert weights.WeightSpec('power', -1.0, dim).in_ap(1)
    assert not weights.WeightSpec('power', 1.0, dim).in_ap(1)
    assert weights.WeightSpec('power', 3.9, dim).in_ap(2)
    assert not weights.WeightSpec('power', 4.0, dim).in_ap(2)
    with pytest.raises(ParameterError):
        weights.WeightSpec('power', 0.0, dim).in_ap(0.5)


@pytest.mark.parametrize('alpha', [-3.5, -2.0, 0.0, 1.0, 2.0, 6.0])
def test_ap_classes_increase_with_p(dim, alpha):
    w = weights.WeightSpec('power', alpha, dim)
    ps = (1.0, 1.5, 2.0, 3.0, 4.0)
    members = [w.in_ap(p) for p in ps]
    assert members == sorted(members)
    ratios = [weights.ap_probe(w, p, central_family(dim)).max_ratio
              for p in ps]
    for p, member, ratio in zip(ps, members, ratios):
        assert math.isfinite(ratio) == member
    for smaller, larger in zip(ratios[:-1], ratios[1:]):
        assert larger <= smaller * (1 + 1e-12)


@pytest.mark.parametrize('kind,alpha', [
    ('power', 0.0), ('power', 1.5), ('power', -2.0),
    ('max-one', 1.0), ('max-one', -4.0),
])
def test_central_mass_matches_radial_integral(dim, kind, alpha):
    w = weights.WeightSpec(kind, alpha, dim)
    for r in (0.5, 2.0):
        B = BallSpec.central(dim, r)
        closed = weights.ball_mass(w, B, method='closed')
        radial = weights.ball_mass(w, B, method='radial')
        assert math.isclose(closed, radial, rel_tol=1e-8)


def test_power_mass(dim):
    w = weights.WeightSpec('power', 2.0, dim)
    assert math.isclose(w.central_mass(2.0), SPHERE * 2.0 ** 6 / 6,
                        rel_tol=1e-12)


def test_off_centre_mass(dim):
    w = weights.WeightSpec('power', 1.0, dim)
    B = BallSpec((2.0, 0.0, 0.0), 0.5)
    value, err = weights.ball_mass_estimate(w, B, quad.McConfig(seed=4))
    # |x| is between 1.5 and 2.5 on the ball
    assert 1.5 * B.measure() < value < 2.5 * B.measure()
    assert err < 0.01 * value
    with pytest.raises(ParameterError):
        weights.ball_mass(w, B, method='closed')


def test_singular_mass(dim):
    w = weights.WeightSpec('power', -5.0, dim)
    with pytest.raises(DivergenceError):
        weights.ball_mass(w, BallSpec.central(dim, 1.0))


def test_ap_probe_on_central_balls(dim):
    # Q/(Q + alpha) (Q/(Q - alpha))^(p - 1) for p = 2, alpha = 2
    w = weights.WeightSpec('power', 2.0, dim)
    report = weights.ap_probe(w, 2.0, central_family(dim))
    assert report.balls_tested == 3
    assert np.allclose(report.ratios, 4.0 / 3.0, rtol=1e-12)
    assert math.isclose(report.max_ratio, 4.0 / 3.0, rel_tol=1e-12)


def test_ap_probe_detects_failure(dim):
    w = weights.WeightSpec('power', 1.0, dim)
    report = weights.ap_probe(w, 1.0, central_family(dim))
    assert report.max_ratio == math.inf
    assert report.witness == central_family(dim)[0]
    assert not report.finite

    w = weights.WeightSpec('power', 4.0, dim)
    assert weights.ap_probe(w, 2.0, central_family(dim)).max_ratio == math.inf


def test_ap_probe_constant_weight(dim):
    w = weights.WeightSpec('power', 0.0, dim)
    family = weights.default_family(dim)
    assert len(family) == 63
    report = weights.ap_probe(w, 2.0, family[:14], quad.McConfig(seed=1))
    assert np.allclose(report.ratios, 1.0, rtol=1e-12)


def test_reverse_holder(dim):
    w = weights.WeightSpec('power', -1.0, dim)
    ratio = weights.reverse_holder_probe(w, 2.0, central_family(dim))
    assert math.isclose(ratio, 3 * math.sqrt(2) / 4, rel_tol=1e-12)
    assert weights.reverse_holder_probe(w, 4.0, central_family(dim)) == math.inf
    with pytest.raises(ParameterError):
        weights.reverse_holder_probe(w, 1.0)


def test_sandwich(dim):
    assert weights.power_weight_sandwich_check(0.0, 2.0, 2.0, dim)
    assert weights.power_weight_sandwich_check(-1.0, 2.0, 3.0, dim)
    assert not weights.power_weight_sandwich_check(5.0, 2.0, 2.0, dim)
    assert not weights.power_weight_sandwich_check(-2.0, 2.0, 3.0, dim)


def test_doubling(dim):
    w = weights.WeightSpec('power', 2.0, dim)
    report = weights.doubling_probe(w, 2.0, central_family(dim))
    # w(B(0, L r)) / (L^(Qp) w(B(0, r))) = L^(Q + alpha - Qp)
    assert math.isclose(report.max_ratio, 2.0 ** (6 - 8), rel_tol=1e-12)


def test_average_domination(dim):
    from hhl.model import fields

    w = weights.WeightSpec('power', 0.0, dim)
    C, table = weights.average_domination_check(fields.ConstantField(1.0), w,
                                                2.0, radii=(0.5, 1.0, 2.0))
    assert math.isclose(C, 1.0, rel_tol=1e-8)
    assert len(table) == 3
