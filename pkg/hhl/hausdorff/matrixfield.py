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
The matrix valued map y -> A(y) of a Hausdorff operator.

Kinds:

 * ``dilation``: A(y) = delta_(1/|y|_h) = diag(1/|y|, ..., 1/|y|, 1/|y|^2),
 * ``diagonal_scaled``: A(y) = D delta_(1/|y|_h) for a fixed diagonal D,
 * ``diagonal``: A(y) = diag(lambda_1(y), ..., lambda_(2n+1)(y)),
 * ``general``: any callable returning the matrices.

For the first two kinds ||A(y)||, ||A(y)^-1|| and det A(y) only depend on
rho = |y|_h and are known in closed form ("radial scaled" maps). Diagonal
maps have exact norms too; only the general kind goes through the numerical
norm estimator.
"""

import math

import numpy as np

from hhl import matrix
from hhl.model import heisenberg
from hhl.utils.exceptions import DimensionError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


kinds = ('dilation', 'diagonal_scaled', 'diagonal', 'general')


def _diag_norm(values):
    '''Koranyi norm of diag(values) (stacked on the last axis).'''
    return np.maximum(np.max(np.abs(values[..., :-1]), axis=-1),
                      np.sqrt(np.abs(values[..., -1])))


class MatrixField(object):

    def __init__(self, dim, kind, scale=None, func=None, comparability=None,
                 label=None):
        if kind not in kinds:
            raise ParameterError(_('unknown matrix field kind "%s"') % kind)
        self.dim = dim
        self.kind = kind
        self.func = func
        self.label = label or kind

        if scale is None:
            scale = np.ones(dim.coords)
        scale = np.array(scale, dtype=float)
        if scale.shape != (dim.coords,):
            raise DimensionError(
                _('a diagonal needs %i entries') % dim.coords)
        if np.any(scale == 0) or not np.all(np.isfinite(scale)):
            raise ParameterError(_('diagonal entries must be finite and '
                                   'non zero'))
        self.scale = scale

        if kind in ('dilation', 'diagonal_scaled'):
            comparability = self.scale_norm * self.scale_inv_norm
        if comparability is not None and not comparability >= 1:
            raise ParameterError(_('a comparability constant is >= 1'))
        self.comparability_constant = comparability

    @classmethod
    def dilation(cls, dim):
        return cls(dim, 'dilation', label='dilation')

    @classmethod
    def diagonal_scaled(cls, dim, c):
        return cls(dim, 'diagonal_scaled', scale=c,
                   label='diagonal(%s)' % ','.join('%g' % v for v in c))

    @classmethod
    def diagonal(cls, dim, func, comparability=None):
        '''func maps y (N, 2n+1) to the diagonals (N, 2n+1).'''
        return cls(dim, 'diagonal', func=func, comparability=comparability)

    @classmethod
    def general(cls, dim, func, comparability=None):
        '''func maps y (N, 2n+1) to matrices (N, 2n+1, 2n+1).'''
        return cls(dim, 'general', func=func, comparability=comparability)

    @property
    def is_dilation(self):
        return self.kind == 'dilation'

    @property
    def radial_scaled(self):
        return self.kind in ('dilation', 'diagonal_scaled')

    @property
    def scale_norm(self):
        '''||D||'''
        return float(_diag_norm(self.scale))

    @property
    def scale_inv_norm(self):
        '''||D^-1||'''
        return float(_diag_norm(1.0 / self.scale))

    @property
    def scale_det(self):
        return float(np.prod(self.scale))

    @property
    def split_radius(self):
        '''||A(y)|| <= 1 iff |y|_h >= split_radius (radial scaled kinds).'''
        return self.scale_norm

    # Radial scaled closed forms, functions of rho = |y|_h
    def norm_radial(self, rho):
        return self.scale_norm / np.asarray(rho, dtype=float)

    def inv_norm_radial(self, rho):
        return self.scale_inv_norm * np.asarray(rho, dtype=float)

    def det_radial(self, rho):
        return self.scale_det * np.asarray(rho, dtype=float) ** (-self.dim.Q)

    def _check(self, y):
        y = heisenberg.coordinates(y)
        if y.shape[-1] != self.dim.coords:
            raise DimensionError(
                _('expected %(want)i coordinates, got %(got)i') %
                {'want': self.dim.coords, 'got': y.shape[-1]})
        return y

    def diagonals(self, y):
        y = self._check(y)
        if self.radial_scaled:
            rho = heisenberg.koranyi_norm(y)
            res = self.scale / rho[..., None]
            res[..., -1] = res[..., -1] / rho
            return res
        if self.kind == 'diagonal':
            return np.asarray(self.func(y), dtype=float)
        raise ParameterError(_('a general matrix field has no diagonal'))

    def matrices(self, y):
        y = self._check(y)
        if self.kind == 'general':
            return np.asarray(self.func(y), dtype=float)
        d = self.diagonals(y)
        res = np.zeros(d.shape + (d.shape[-1],))
        idx = np.arange(d.shape[-1])
        res[..., idx, idx] = d
        return res

    def linear_map(self, y):
        y = np.asarray(heisenberg.coordinates(y), dtype=float)
        return matrix.LinearMap(self.matrices(y[None])[0])

    def norm(self, y):
        '''||A(y)||'''
        y = self._check(y)
        if self.radial_scaled:
            return self.norm_radial(heisenberg.koranyi_norm(y))
        if self.kind == 'diagonal':
            return _diag_norm(self.diagonals(y))
        M = self.matrices(y)
        flat = M.reshape((-1,) + M.shape[-2:])
        return matrix.batch_op_norm(flat, self.dim).reshape(M.shape[:-2])

    def inv_norm(self, y):
        '''||A(y)^-1||'''
        y = self._check(y)
        if self.radial_scaled:
            return self.inv_norm_radial(heisenberg.koranyi_norm(y))
        if self.kind == 'diagonal':
            with np.errstate(divide='ignore'):
                return _diag_norm(1.0 / self.diagonals(y))
        M = self.matrices(y)
        flat = M.reshape((-1,) + M.shape[-2:])
        inv = np.linalg.inv(flat)
        return matrix.batch_op_norm(inv, self.dim).reshape(M.shape[:-2])

    def det(self, y):
        y = self._check(y)
        if self.radial_scaled:
            return self.det_radial(heisenberg.koranyi_norm(y))
        if self.kind == 'diagonal':
            return np.prod(self.diagonals(y), axis=-1)
        return np.linalg.det(self.matrices(y))

    def apply(self, y, x):
        '''A(y)x for every row y; x is one point or one point per row.'''
        y = self._check(y)
        x = heisenberg.coordinates(x)
        if self.kind == 'general':
            M = self.matrices(y)
            x = np.broadcast_to(x, y.shape)
            return np.einsum('...ij,...j->...i', M, x)
        return self.diagonals(y) * x

    def __repr__(self):
        return '<MatrixField %s>' % self.label
