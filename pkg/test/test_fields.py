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

from hhl.model import fields
from hhl.model import heisenberg
from hhl.utils.exceptions import ParameterError

from conftest import random_points


def t_coordinate(x):
    return x[..., -1]


def test_power_and_log_fields(dim):
    x = np.array([[2.0, 0.0, 0.0], [0.0, 0.0, 4.0]])
    assert np.allclose(fields.PowerField(-1.0)(x), [0.5, 0.5])
    assert np.allclose(fields.LogField(1.0)(x), [math.log(2.0)] * 2)
    assert np.allclose(fields.LogField(-1.0)(x), [-math.log(2.0)] * 2)
    assert fields.PowerField(-1.0, 3.0).power == (3.0, -1.0)
    assert fields.LogField(-1.0).log == -1.0


def test_indicators(dim):
    x = np.array([[0.5, 0.0, 0.0], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]])
    assert np.array_equal(fields.BallIndicator(1.0)(x), [1.0, 0.0, 0.0])
    assert fields.BallIndicator(1.0).profile.breakpoints == (1.0,)
    with pytest.raises(ParameterError):
        fields.BallIndicator(0.0)


def test_field_algebra(dim, rng):
    x = random_points(rng, 50, dim)
    f = fields.PowerField(2.0)
    b = fields.LogField(1.0)
    rho = heisenberg.koranyi_norm(x)
    assert np.allclose((f * b)(x), rho ** 2 * np.log(rho))
    assert np.allclose((f + 1.0)(x), rho ** 2 + 1.0)
    assert np.allclose((f - b)(x), rho ** 2 - np.log(rho))
    assert np.allclose((2.0 * b)(x), 2.0 * np.log(rho))
    assert np.allclose((-f)(x), -rho ** 2)


def test_vector_fields_on_coordinates(dim, rng):
    x = random_points(rng, 20, dim)
    t = fields.CallableField(t_coordinate, label='t')
    # X_1 = d_1 + 2 x_2 d_t and X_2 = d_2 - 2 x_1 d_t on H^1
    assert np.allclose(fields.vector_field_apply(1, t, x), 2 * x[:, 1],
                       atol=1e-8)
    assert np.allclose(fields.vector_field_apply(2, t, x), -2 * x[:, 0],
                       atol=1e-8)
    assert np.allclose(fields.vector_field_apply(3, t, x), 1.0, atol=1e-8)


def test_bracket_of_horizontal_fields(dim, rng):
    x = random_points(rng, 20, dim, scale=1.0)
    t = fields.CallableField(t_coordinate, label='t')
    x1 = fields.vector_field(1, fields.vector_field(2, t))
    x2 = fields.vector_field(2, fields.vector_field(1, t))
    bracket = x1(x) - x2(x)
    assert np.allclose(bracket, -4.0, atol=1e-3)


def test_vector_field_is_left_invariant(dim, rng):
    f = fields.CallableField(lambda x: np.sin(x[..., 0]) * x[..., -1] +
                             x[..., 1] ** 2, label='f')
    g = random_points(rng, 1, dim)[0]
    x = random_points(rng, 20, dim, scale=1.0)
    translated = fields.CallableField(
        lambda y: f(heisenberg.group_mul(g, y)), label='translated')
    for j in (1, 2):
        lhs = fields.vector_field_apply(j, translated, x)
        rhs = fields.vector_field_apply(j, f, heisenberg.group_mul(g, x))
        assert np.allclose(lhs, rhs, rtol=1e-5, atol=1e-6)


def test_vector_field_index(dim):
    with pytest.raises(ParameterError):
        fields.vector_field_apply(4, fields.PowerField(1.0), np.zeros(3))
