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

"""
Integration over H^n: exact radial reduction (:py:mod:`.adaptive`) and
stratified Monte Carlo (:py:mod:`.montecarlo`).
"""

from hhl.model.fields import RadialProfile

from .adaptive import integrate_1d, integrate_radial
from .montecarlo import McConfig, RestrictedRegion, Sample, sample_region, \
    integrate_mc, integrate_box_mc, mc_ball_volume, unit_sphere_sample
