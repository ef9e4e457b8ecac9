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

from hhl import norms
from hhl import quad
from hhl import weights
from hhl.model import fields
from hhl.model.heisenberg import BallSpec
from hhl.utils.exceptions import ParameterError

from conftest import OMEGA


GRID = norms.RadiusGrid.dyadic(-2, 2)


def test_params_validation(dim):
    norms.NormParams(p=2, lam=-0.5).validate(dim)
    with pytest.raises(ParameterError, match='-1/p <= lambda < 0'):
        norms.NormParams(p=2, lam=-0.75).validate(dim)
    with pytest.raises(ParameterError):
        norms.NormParams(p=2, lam=0.0).validate(dim)
    with pytest.raises(ParameterError):
        norms.NormParams(p=0.5).validate(dim)
    with pytest.raises(ParameterError, match='alpha > -Q'):
        norms.NormParams(alpha=-4.0).validate(dim)
    with pytest.raises(ParameterError):
        norms.NormParams(delta=1.0).validate(dim)


def test_holder_relation():
    norms.NormParams(p=1, p1=2, p2=2).check_holder()
    with pytest.raises(ParameterError, match='1/p = 1/p1 \\+ 1/p2'):
        norms.NormParams(p=2, p1=2, p2=2).check_holder()
    with pytest.raises(ParameterError):
        norms.NormParams(p=2).check_holder()


def test_params_replace():
    prm = norms.NormParams(p=2, lam=-0.25)
    assert prm.replace(p=4).p == 4
    assert prm.replace(p=4).lam == -0.25
    assert prm.as_dict()['p1'] is None


def test_radius_grid():
    assert list(norms.RadiusGrid.dyadic(-1, 1)) == [0.5, 1.0, 2.0]
    assert len(norms.RadiusGrid()) == 21
    assert len(norms.RadiusGrid.logspace(0.1, 10.0, 5)) == 5
    with pytest.raises(ParameterError):
        norms.RadiusGrid((1.0, 1.0))
    with pytest.raises(ParameterError):
        norms.RadiusGrid(())
    with pytest.raises(ParameterError):
        norms.RadiusGrid.dyadic(2, 1)


def test_extremizer_norm_closed_form(dim):
    assert math.isclose(norms.extremizer_norm(0.0, 2.0, -0.25, dim),
                        math.sqrt(2 * math.pi), rel_tol=1e-12)
    assert norms.extremizer_norm(0.0, 2.0, -0.5, dim) == math.inf


@pytest.mark.parametrize('alpha,p,lam', [
    (0.0, 2.0, -0.25),
    (2.0, 1.0, -0.5),
    (-2.0, 3.0, -0.1),
])
def test_morrey_norm_of_extremizer(dim, alpha, p, lam):
    w = weights.WeightSpec('power', alpha, dim)
    f = norms.extremizer_field(alpha, lam, dim)
    res = norms.morrey_norm(f, norms.NormParams(p=p, lam=lam, alpha=alpha),
                            w, GRID)
    expected = norms.extremizer_norm(alpha, p, lam, dim)
    assert res.kind == 'morrey'
    assert math.isclose(res.value, expected, rel_tol=1e-7)
    # the table is flat and the maximum is the first radius attaining it
    assert len(res.table) == len(GRID)
    for r, value, err in res.table:
        assert math.isclose(value, expected, rel_tol=1e-7)
    value, argmax_r, table = res
    assert argmax_r in GRID


def test_morrey_norm_diverges_at_endpoint(dim, unweighted):
    f = norms.extremizer_field(0.0, -0.5, dim)
    res = norms.morrey_norm(f, norms.NormParams(p=2, lam=-0.5), unweighted,
                            GRID)
    assert res.value == math.inf
    assert not res.finite
    assert res.witness is not None


def test_morrey_norm_of_indicator(dim, unweighted):
    # sup_r (|B(0, min(r, 1))| / |B(0, r)|^(1 + p lambda))^(1/p), attained at r = 1
    f = fields.BallIndicator(1.0)
    res = norms.morrey_norm(f, norms.NormParams(p=2, lam=-0.25), unweighted,
                            GRID)
    assert res.argmax_r == 1.0
    assert math.isclose(res.value, OMEGA ** 0.25, rel_tol=1e-8)


def test_lp_ball_norm(dim, unweighted):
    f = fields.ConstantField(2.0)
    value, err = norms.lp_ball_norm(f, 2.0, unweighted,
                                    BallSpec.central(dim, 1.0))
    assert math.isclose(value, 2.0 * math.sqrt(OMEGA), rel_tol=1e-10)

    B = BallSpec((1.0, 0.0, 0.0), 0.5)
    value, err = norms.lp_ball_norm(f, 1.0, unweighted, B,
                                    quad.McConfig(seed=1))
    assert abs(value - 2.0 * B.measure()) <= 4 * err + 1e-9
    with pytest.raises(ParameterError):
        norms.lp_ball_norm(f, 0.5, unweighted, B)


def test_ball_mean_of_log(dim):
    for r in (0.5, 1.0, 3.0):
        mean, err = norms.ball_mean(fields.LogField(1.0), r, dim)
        assert math.isclose(mean, math.log(r) - 0.25, rel_tol=1e-8,
                            abs_tol=1e-10)


def test_cmo_norm_of_log(dim, unweighted):
    res = norms.cmo_norm(fields.LogField(1.0), 1.0, unweighted, GRID)
    assert res.kind == 'cmo'
    assert math.isclose(res.value, 1.0 / (2 * math.e), rel_tol=1e-7)
    assert math.isclose(res.value, 0.18394, rel_tol=1e-4)
    for r, value, err in res.table:
        assert math.isclose(value, res.value, rel_tol=1e-7)


@pytest.mark.parametrize('alpha,p2', [(0.0, 1.0), (0.0, 2.0), (2.0, 2.0),
                                      (-1.0, 1.5)])
def test_log_cmo_closed_form(dim, alpha, p2):
    w = weights.WeightSpec('power', alpha, dim)
    res = norms.cmo_norm(fields.LogField(-1.0), p2, w,
                         norms.RadiusGrid.dyadic(0, 1))
    assert math.isclose(res.value, norms.log_cmo_norm(alpha, p2, dim),
                        rel_tol=1e-7)


def test_cmo_of_constant_is_zero(dim, unweighted):
    res = norms.cmo_norm(fields.ConstantField(5.0), 2.0, unweighted, GRID)
    assert res.value < 1e-12


def test_cmo_validation(dim, unweighted):
    with pytest.raises(ParameterError):
        norms.cmo_norm(fields.LogField(1.0), 0.5, unweighted, GRID)
    with pytest.raises(ParameterError):
        norms.log_cmo_norm(-4.0, 1.0, dim)


def test_norms_do_not_depend_on_threads(dim):
    w = weights.WeightSpec('power', 1.0, dim)
    f = fields.CallableField(lambda x: np.abs(x[..., 0]) + 1.0, label='f')
    prm = norms.NormParams(p=2, lam=-0.25, alpha=1.0)
    grid = norms.RadiusGrid.dyadic(-1, 1)
    one = norms.morrey_norm(f, prm, w, grid, quad.McConfig(seed=3, threads=1,
                                                            samples=2 ** 12))
    three = norms.morrey_norm(f, prm, w, grid, quad.McConfig(seed=3, threads=3,
                                                              samples=2 ** 12))
    assert one.table == three.table
