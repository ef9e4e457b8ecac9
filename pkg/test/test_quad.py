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
from hhl.model.fields import RadialProfile
from hhl.model.heisenberg import AnnulusSpec, BallSpec
from hhl.utils.exceptions import DivergenceError, ParameterError

from conftest import OMEGA, SPHERE


def test_integrate_1d():
    value, err = quad.integrate_1d(np.sin, 0.0, math.pi)
    assert math.isclose(value, 2.0, rel_tol=1e-10)
    value, err = quad.integrate_1d(np.sin, math.pi, 0.0)
    assert math.isclose(value, -2.0, rel_tol=1e-10)
    assert quad.integrate_1d(np.sin, 1.0, 1.0) == (0.0, 0.0)
    with pytest.raises(ParameterError):
        quad.integrate_1d(np.sin, 0.0, math.inf)


def test_integrate_1d_kink():
    value, err = quad.integrate_1d(lambda x: np.abs(x - 0.3), 0.0, 1.0)
    assert math.isclose(value, 0.5 * (0.3 ** 2 + 0.7 ** 2), rel_tol=1e-8)


def test_ball_volume_radially(dim):
    value, err = quad.integrate_radial(lambda rho: np.ones(np.shape(rho)),
                                       dim, 0.0, 1.0)
    assert math.isclose(value, OMEGA, rel_tol=1e-10)


def test_convergent_tail(dim):
    g = RadialProfile(lambda rho: rho ** -5.0, -5.0)
    value, err = quad.integrate_radial(g, dim, 1.0, math.inf)
    assert math.isclose(value, SPHERE, rel_tol=1e-7)


def test_convergent_core(dim):
    # omega int_0^1 rho^-3.5 rho^3 drho = 2 omega
    g = RadialProfile(lambda rho: rho ** -3.5, -3.5)
    value, err = quad.integrate_radial(g, dim, 0.0, 1.0)
    assert math.isclose(value, 2 * SPHERE, rel_tol=1e-7)


def test_slow_geometric_tail_is_summed(dim):
    # omega int_0^1 rho^0.05 drho / rho, dyadic shells decay by 2^-0.05
    g = RadialProfile(lambda rho: rho ** 0.05)
    value, err = quad.integrate_radial(g, dim, 0.0, 1.0, degree=-dim.Q)
    assert math.isclose(value, 20 * SPHERE, rel_tol=1e-9)


def test_tail_after_the_last_shell(dim):
    # shells decay by 2^-0.02, the 1000 shells reach rho = 2^-1000
    g = RadialProfile(lambda rho: rho ** 0.02, 0.02)
    value, err = quad.integrate_radial(g, dim, 0.0, 1.0, degree=-dim.Q)
    assert math.isclose(value, 50 * SPHERE, rel_tol=1e-7)


def test_degree_enters_singular_hint(dim):
    g = RadialProfile(lambda rho: np.ones(np.shape(rho)), 0.0)
    with pytest.raises(DivergenceError) as info:
        quad.integrate_radial(g, dim, 0.0, 1.0, degree=-dim.Q)
    assert info.value.witness == 0.0


def test_witness_is_a_radius(dim):
    g = RadialProfile(lambda rho: np.where(rho < 0.5, np.inf, 1.0))
    with pytest.raises(DivergenceError) as info:
        quad.integrate_radial(g, dim, 0.25, 1.0)
    assert math.isclose(info.value.witness, 0.25, rel_tol=1e-12)


def test_divergent_tail(dim):
    g = RadialProfile(lambda rho: rho ** -4.0, -4.0)
    with pytest.raises(DivergenceError) as info:
        quad.integrate_radial(g, dim, 1.0, math.inf)
    assert info.value.witness is not None
    assert info.value.witness > 1.0


def test_singular_hint(dim):
    g = RadialProfile(lambda rho: rho ** -4.0, -4.0)
    with pytest.raises(DivergenceError) as info:
        quad.integrate_radial(g, dim, 0.0, 1.0)
    assert info.value.witness == 0.0


def test_support_restriction(dim):
    g = RadialProfile(lambda rho: np.ones(np.shape(rho)), 0.0, (), (2.0, 3.0))
    assert quad.integrate_radial(g, dim, 0.0, 1.0) == (0.0, 0.0)


def test_mc_ball_integral(dim):
    B = BallSpec.central(dim, 2.0)
    value, err = quad.integrate_mc(lambda x: np.ones(len(x)), B,
                                   quad.McConfig(seed=3), dim)
    assert abs(value - OMEGA * 16) <= 4 * err + 1e-9 * OMEGA * 16


def test_mc_off_centre_ball(dim):
    B = BallSpec((1.0, 0.0, 0.0), 0.5)
    value, err = quad.integrate_mc(lambda x: np.ones(len(x)), B,
                                   quad.McConfig(seed=5), dim)
    assert abs(value - B.measure()) <= 4 * err + 1e-9


def test_mc_radial_integrand(dim):
    # int_B(0,1) |x|^2 = omega / 6
    from hhl.model import heisenberg

    B = BallSpec.central(dim, 1.0)
    value, err = quad.integrate_mc(lambda x: heisenberg.koranyi_norm(x) ** 2,
                                   B, quad.McConfig(seed=1), dim)
    assert abs(value - SPHERE / 6) <= 4 * err


def test_mc_annulus(dim):
    A = AnnulusSpec(dim, 1.0, 2.0)
    value, err = quad.integrate_mc(lambda x: np.ones(len(x)), A,
                                   quad.McConfig(seed=2), dim)
    assert abs(value - A.measure()) <= 4 * err + 1e-9 * A.measure()


def test_mc_threads_do_not_change_results(dim):
    from hhl.model import heisenberg

    def f(x):
        return np.cos(x[:, 0]) * heisenberg.koranyi_norm(x)

    B = BallSpec((0.5, 0.0, 0.25), 1.5)
    one = quad.integrate_mc(f, B, quad.McConfig(seed=7, threads=1), dim)
    four = quad.integrate_mc(f, B, quad.McConfig(seed=7, threads=4), dim)
    assert one == four


def test_mc_config_validation():
    with pytest.raises(ParameterError):
        quad.McConfig(samples=4, strata=32)
    with pytest.raises(ParameterError):
        quad.McConfig(allocation='uniform')
    assert quad.McConfig().replace(seed=9).seed == 9
