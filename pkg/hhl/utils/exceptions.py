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


class DimensionError(ValueError):
    pass


class ParameterError(ValueError):
    pass


class CatalogError(ParameterError):
    pass


class DivergenceError(ArithmeticError):
    '''An improper integral was declared divergent.

    :ivar partial: the partial value accumulated before the verdict
    :ivar witness: radius (or shell edge) at which the verdict was made
    '''

    def __init__(self, msg, partial=float('nan'), witness=None):
        ArithmeticError.__init__(self, msg)
        self.partial = partial
        self.witness = witness
