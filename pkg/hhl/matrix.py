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
Linear maps of R^(2n+1) and their norm with respect to the Koranyi norm,

    ||M|| = sup |Mx|_h / |x|_h.

The supremum is estimated on a grid over the Koranyi unit sphere, which is
parametrised as

    x = (sqrt|cos theta| u(psi), sin theta),

u(psi) being the unit vector of R^2n with hyperspherical angles psi. The best
grid point is refined by coordinate wise golden section search. The result is
a lower bound of the true supremum together with the refinement gap (how much
the refinement gained over the grid).

A map that does not preserve the splitting into the horizontal block and the
last coordinate has an infinite norm (the ratio is unbounded along dilation
orbits); for maps that do, :py:func:`block_norm` gives the exact value.
"""

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from hhl import defs
from hhl import log
from hhl.model import heisenberg
from hhl.utils.exceptions import DimensionError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


_golden = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class NormEstimate(object):
    value: float
    gap: float = 0.0

    def __float__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class LinearMap(object):
    '''An invertible (2n+1)x(2n+1) real matrix.

    det, inverse and op_norm are computed on first access.
    '''
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionError(_('a linear map needs a square matrix'))
        heisenberg.HeisDim.for_coords(entries.shape[0])
        if not np.all(np.isfinite(entries)):
            raise ParameterError(_('matrix entries must be finite'))
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim.coords))

    @classmethod
    def diagonal(cls, values):
        return cls(np.diag(values))

    @classmethod
    def dilation(cls, dim, r):
        '''The matrix of delta_r.'''
        values = np.full(dim.coords, float(r))
        values[-1] = float(r) ** 2
        return cls(np.diag(values))

    @property
    def dim(self):
        return heisenberg.HeisDim.for_coords(self.entries.shape[0])

    @cached_property
    def det(self):
        return float(np.linalg.det(self.entries))

    @cached_property
    def inverse(self):
        if self.det == 0:
            raise ParameterError(_('the map is singular (det = 0)'))
        return LinearMap(np.linalg.inv(self.entries))

    @cached_property
    def norm_estimate(self):
        return matrix_op_norm(self)

    @property
    def op_norm(self):
        return self.norm_estimate.value

    def apply(self, x):
        x = heisenberg.coordinates(x)
        return x @ self.entries.T

    def __matmul__(self, other):
        if isinstance(other, LinearMap):
            return LinearMap(self.entries @ other.entries)
        return self.apply(other)

    def __repr__(self):
        return 'LinearMap(%s)' % np.array2string(self.entries, precision=4)


def _entries(M):
    if isinstance(M, LinearMap):
        return M.entries
    return np.asarray(M, dtype=float)


def _coupled(M):
    '''True where the map mixes the horizontal block and the last coordinate.

    Works on stacks of matrices (..., d, d).
    '''
    scale = np.max(np.abs(M), axis=(-2, -1))
    mixing = np.maximum(np.max(np.abs(M[..., :-1, -1]), axis=-1),
                        np.max(np.abs(M[..., -1, :-1]), axis=-1))
    return mixing > defs.block_tolerance * scale


def _dilation_factor(M):
    '''a if M = diag(a, ..., a, a^2) with a > 0, otherwise None.'''
    d = M.shape[0]
    a = M[0, 0]
    if not a > 0:
        return None
    off = M - np.diag(np.diag(M))
    tol = defs.block_tolerance * max(a, a * a)
    if np.max(np.abs(off)) > tol:
        return None
    diag = np.diag(M)
    if np.max(np.abs(diag[:-1] - a)) > tol or abs(diag[-1] - a * a) > tol:
        return None
    return float(a)


def block_norm(M):
    '''Exact Koranyi operator norm.

    max(sigma_max(B), sqrt|m|) for M = [[B, 0], [0, m]], +inf if the map
    couples the blocks.
    '''
    M = _entries(M)
    if _coupled(M[None])[0]:
        return math.inf
    sigma = np.linalg.norm(M[:-1, :-1], ord=2)
    return float(max(sigma, math.sqrt(abs(M[-1, -1]))))


def sphere_from_angles(theta, psi):
    '''Points of the Koranyi unit sphere.

    :param theta: array of shape (...)
    :param psi: array of shape (..., 2n - 1), hyperspherical angles of the
        horizontal direction
    '''
    theta = np.asarray(theta, dtype=float)
    psi = np.asarray(psi, dtype=float)
    k = psi.shape[-1]
    u = np.empty(psi.shape[:-1] + (k + 1,))
    sines = np.ones(psi.shape[:-1])
    for i in range(k):
        u[..., i] = sines * np.cos(psi[..., i])
        sines = sines * np.sin(psi[..., i])
    u[..., k] = sines

    res = np.empty(theta.shape + (k + 2,))
    res[..., :-1] = np.sqrt(np.abs(np.cos(theta)))[..., None] * u
    res[..., -1] = np.sin(theta)
    return res


def _angle_grid(dim, fine=True):
    '''Grid of angles (theta, psi) and the half width of a grid cell.'''
    if dim.n == 1:
        n_theta = defs.norm_grid_theta if fine else defs.field_norm_grid_theta
        n_phi = defs.norm_grid_phi if fine else defs.field_norm_grid_phi
        theta = np.linspace(-math.pi / 2, math.pi / 2, n_theta)
        phi = np.linspace(0, 2 * math.pi, n_phi, endpoint=False)
        theta, phi = np.meshgrid(theta, phi, indexing='ij')
        angles = np.stack([theta.ravel(), phi.ravel()], axis=-1)
        width = np.array([math.pi / (n_theta - 1), 2 * math.pi / n_phi])
        return angles, width

    count = defs.norm_grid_random if fine else defs.field_norm_grid_random
    rng = np.random.default_rng(defs.norm_grid_seed)
    k = 2 * dim.n - 1
    theta = rng.uniform(-math.pi / 2, math.pi / 2, count)
    psi = rng.uniform(0, math.pi, (count, k))
    psi[:, -1] *= 2
    angles = np.concatenate([theta[:, None], psi], axis=-1)
    width = np.full(k + 1, math.pi / count ** (1.0 / (k + 1)))
    return angles, width


def _ratios(Ms, angles):
    '''|M x|_h for every map of the stack and every angle row.

    :param Ms: (K, d, d)
    :param angles: (K, P, k + 1) or (P, k + 1)
    :return: (K, P)
    '''
    x = sphere_from_angles(angles[..., 0], angles[..., 1:])
    if x.ndim == 2:
        y = np.einsum('kij,pj->kpi', Ms, x)
    else:
        y = np.einsum('kij,kpj->kpi', Ms, x)
    return heisenberg.koranyi_norm(y)


def _golden_maximize(func, lo, hi, iterations):
    '''Vectorised golden section search for the maximum on [lo, hi].'''
    a = lo.copy()
    b = hi.copy()
    c = b - _golden * (b - a)
    d = a + _golden * (b - a)
    fc = func(c)
    fd = func(d)
    for i in range(iterations):
        # the maximum lies in [a, d] where fc > fd, in [c, b] otherwise
        left = fc > fd
        a, b = np.where(left, a, c), np.where(left, d, b)
        new_c = b - _golden * (b - a)
        new_d = a + _golden * (b - a)
        c, d = np.where(left, new_c, d), np.where(left, c, new_d)
        f_new = func(np.where(left, new_c, new_d))
        fc, fd = np.where(left, f_new, fd), np.where(left, fc, f_new)
    x = (a + b) / 2
    return x, func(x)


def _estimate(Ms, dim, fine=True):
    '''Grid plus refinement for a stack of block diagonal maps.

    :return: (grid values, refined values), both of shape (K,)
    '''
    angles, width = _angle_grid(dim, fine)
    K = Ms.shape[0]
    P = angles.shape[0]

    best_value = np.empty(K)
    best_angles = np.empty((K, angles.shape[1]))
    chunk = max(1, defs.norm_batch_points // (P * dim.coords))
    for start in range(0, K, chunk):
        part = Ms[start:start + chunk]
        values = _ratios(part, angles)
        idx = np.argmax(values, axis=-1)
        best_value[start:start + chunk] = values[np.arange(len(part)), idx]
        best_angles[start:start + chunk] = angles[idx]

    grid_value = best_value.copy()
    sweeps = defs.norm_refine_sweeps if fine else defs.field_norm_refine_sweeps
    for sweep in range(sweeps):
        for j in range(angles.shape[1]):
            def func(values, j=j):
                trial = best_angles.copy()
                trial[:, j] = values
                return _ratios(Ms, trial[:, None, :])[:, 0]

            lo = best_angles[:, j] - width[j]
            hi = best_angles[:, j] + width[j]
            x, fx = _golden_maximize(func, lo, hi, defs.norm_refine_iterations)
            better = fx > best_value
            best_angles[better, j] = x[better]
            best_value = np.where(better, fx, best_value)

    return grid_value, best_value


def matrix_op_norm(M, dim=None):
    '''Estimate ||M|| = sup_{|x|_h = 1} |Mx|_h.

    diag(a, ..., a, a^2) returns a exactly; a map coupling the horizontal
    block and the last coordinate returns +inf.
    '''
    M = _entries(M)
    if dim is None:
        dim = heisenberg.HeisDim.for_coords(M.shape[-1])
    if M.shape != (dim.coords, dim.coords):
        raise DimensionError(
            _('expected a %(d)ix%(d)i matrix for H^%(n)i') %
            {'d': dim.coords, 'n': dim.n})
    if not np.all(np.isfinite(M)):
        raise ParameterError(_('matrix entries must be finite'))

    if not np.any(M):
        return NormEstimate(0.0, 0.0)

    if _coupled(M[None])[0]:
        log.warn(_('The map mixes the horizontal and vertical coordinates, '
                   'its Koranyi norm is infinite.'))
        return NormEstimate(math.inf, 0.0)

    a = _dilation_factor(M)
    if a is not None:
        return NormEstimate(a, 0.0)

    grid, refined = _estimate(M[None], dim, fine=True)
    return NormEstimate(float(refined[0]), float(refined[0] - grid[0]))


def batch_op_norm(Ms, dim, fine=False):
    '''Norm estimates for a stack of matrices (K, d, d), no warnings.

    Used for matrix fields sampled at many y; the coarse grid is the default.
    '''
    Ms = np.asarray(Ms, dtype=float)
    res = np.zeros(Ms.shape[0])
    coupled = _coupled(Ms)
    nonzero = np.any(Ms != 0, axis=(-2, -1))
    res[coupled] = math.inf

    todo = nonzero & ~coupled
    if np.any(todo):
        grid, refined = _estimate(Ms[todo], dim, fine=fine)
        res[todo] = refined
    return res
