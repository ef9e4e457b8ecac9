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
Hausdorff operators H_(Phi, A) on H^n and their commutators with a symbol b.

An operator is described by a :py:class:`GeneratingFunction` Phi and a
:py:class:`MatrixField` A; :py:mod:`.operators` evaluates it at single points
or turns the image of a field into a new field.
"""

from .generating import GeneratingFunction, ball_indicator, \
    annulus_indicator, power_ball, log_damped_ball, gaussian, zero, \
    truncated, from_callable
from .matrixfield import MatrixField
from .operators import eval_hausdorff, eval_commutator, \
    eval_commutator_piece, hausdorff_field, commutator_field
