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
from hhl.model import heisenberg
from hhl.model.heisenberg import BallSpec, GroupPoint
from hhl.utils.exceptions import DimensionError, ParameterError

from conftest import OMEGA, SPHERE, random_points


def test_dimension_constants(dim):
    assert dim.coords == 3
    assert dim.Q == 4
    assert math.isclose(dim.Omega_Q, OMEGA, rel_tol=1e-12)
    assert math.isclose(dim.omega_Q, SPHERE, rel_tol=1e-12)
    assert math.isclose(dim.lebesgue_ball_volume, OMEGA / 2, rel_tol=1e-12)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_haar_normalization_is_two(n):
    assert math.isclose(heisenberg.HeisDim(n).haar_normalization, 2.0,
                        rel_tol=1e-12)


def test_bad_dimensions():
    with pytest.raises(DimensionError):
        heisenberg.HeisDim(0)
    with pytest.raises(DimensionError):
        heisenberg.HeisDim.for_coords(4)
    with pytest.raises(DimensionError):
        heisenberg.group_mul(np.zeros(3), np.zeros(5))
    with pytest.raises(DimensionError):
        heisenberg.HeisDim(2).check(np.zeros(3))


def test_group_law_h1():
    x = GroupPoint([1.0, 0.0, 0.0])
    y = GroupPoint([0.0, 1.0, 0.0])
    assert np.allclose((x * y).coords, [1.0, 1.0, -2.0])
    assert np.allclose((y * x).coords, [1.0, 1.0, 2.0])


def test_group_axioms(dim, rng):
    x, y, z = (random_points(rng, 10000, dim) for i in range(3))
    mul = heisenberg.group_mul
    left = mul(mul(x, y), z)
    right = mul(x, mul(y, z))
    assert np.max(np.abs(left - right)) < 1e-12

    e = np.zeros(dim.coords)
    assert np.array_equal(mul(x, e), x)
    assert np.array_equal(mul(e, x), x)
    assert np.max(np.abs(mul(x, heisenberg.group_inverse(x)))) < 1e-12


def test_dilations_are_automorphisms(dim, rng):
    x, y = random_points(rng, 1000, dim), random_points(rng, 1000, dim)
    r = 1.7
    lhs = heisenberg.dilate(r, heisenberg.group_mul(x, y))
    rhs = heisenberg.group_mul(heisenberg.dilate(r, x), heisenberg.dilate(r, y))
    assert np.max(np.abs(lhs - rhs)) < 1e-12
    with pytest.raises(ParameterError):
        heisenberg.dilate(0.0, x)


def test_norm_homogeneity_and_symmetry(dim, rng):
    x = random_points(rng, 1000, dim)
    r = rng.uniform(0.1, 10.0, 1000)
    norm = heisenberg.koranyi_norm
    assert np.allclose(norm(heisenberg.dilate(r, x)), r * norm(x), rtol=1e-12)
    assert np.allclose(norm(heisenberg.group_inverse(x)), norm(x), rtol=1e-14)


def test_distance(dim, rng):
    p, q, g = (random_points(rng, 10000, dim) for i in range(3))
    d = heisenberg.distance
    mul = heisenberg.group_mul
    assert np.allclose(d(mul(g, p), mul(g, q)), d(p, q), rtol=1e-10,
                       atol=1e-12)
    assert np.allclose(d(p, q), d(q, p), rtol=1e-12)

    r = random_points(rng, 10000, dim)
    assert np.all(d(p, r) <= d(p, q) + d(q, r) + 1e-12)


def test_group_point(dim):
    x = GroupPoint([1.0, 2.0, 3.0])
    assert x.dim == dim
    assert x.inverse() == GroupPoint([-1.0, -2.0, -3.0])
    assert x.dilate(2.0) == GroupPoint([2.0, 4.0, 12.0])
    assert math.isclose(x.norm(), (25.0 + 9.0) ** 0.25, rel_tol=1e-14)
    assert (x * GroupPoint.origin(dim)) == x
    with pytest.raises(AttributeError):
        x.coords = np.zeros(3)
    with pytest.raises(ParameterError):
        GroupPoint([0.0, math.inf, 0.0])


def test_box_measure_scales_with_dilation(dim):
    lower = np.array([-0.3, 0.1, -0.5])
    upper = np.array([0.7, 0.4, 0.2])
    volume = float(np.prod(upper - lower)) * dim.haar_normalization
    r = 3.0
    scale = np.array([r, r, r * r])
    dilated = float(np.prod(scale * upper - scale * lower)) * dim.haar_normalization
    assert math.isclose(dilated, r ** dim.Q * volume, rel_tol=1e-12)


def test_balls(dim):
    B = BallSpec((1.0, 0.0, 0.0), 0.5)
    assert not B.is_central
    assert not B.contains_origin()
    assert B.contains(np.array([1.1, 0.0, 0.0]))
    assert math.isclose(B.measure(), OMEGA * 0.5 ** 4, rel_tol=1e-12)
    assert BallSpec.central(dim, 2.0).contains_origin()
    with pytest.raises(ParameterError):
        BallSpec.central(dim, 0.0)


def test_sphere_points(dim, rng):
    x = random_points(rng, 100, dim)
    assert np.allclose(heisenberg.koranyi_norm(heisenberg.sphere_points(x)), 1.0)


def test_mc_ball_volume(dim):
    value, err = quad.mc_ball_volume(dim, quad.McConfig(samples=2 ** 16))
    assert abs(value - OMEGA) <= 4 * err
