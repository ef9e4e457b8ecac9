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
from hhl import weights
from hhl.model import heisenberg


# Closed forms for H^1 (Q = 4)
OMEGA = math.pi ** 2
SPHERE = 4 * math.pi ** 2


@pytest.fixture
def dim():
    return heisenberg.HeisDim(1)


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


@pytest.fixture
def ball():
    return hausdorff.ball_indicator(1.0)


@pytest.fixture
def dilation(dim):
    return hausdorff.MatrixField.dilation(dim)


@pytest.fixture
def unweighted(dim):
    return weights.WeightSpec('power', 0.0, dim)


def random_points(rng, count, dim, scale=2.0):
    return rng.uniform(-scale, scale, (count, dim.coords))
