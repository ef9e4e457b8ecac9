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

'''
Arithmetic and geometry of the Heisenberg group H^n.

Points are stored as 2n+1 real coordinates (x_1, ..., x_2n, t). The plain
functions of this module accept numpy arrays whose last axis holds the
coordinates and broadcast over all other axes; :py:class:`GroupPoint` is the
immutable single point wrapper used by the public API.

The Haar measure is normalised so that the Koranyi unit ball has measure
Omega_Q (see :py:attr:`HeisDim.Omega_Q`). This is exactly twice its Lebesgue
volume for every n, so Lebesgue box sampling is scaled by
:py:attr:`HeisDim.haar_normalization`.
'''

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from hhl import defs
from hhl.utils.exceptions import DimensionError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


@dataclass(frozen=True)
class HeisDim(object):
    '''Dimension data of H^n.

    :ivar n: the group is H^n, points have 2n+1 coordinates
    '''
    n: int = defs.default_n

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DimensionError(_('requires n >= 1, got %s') % self.n)

    @classmethod
    def for_coords(cls, count):
        if count < 3 or count % 2 == 0:
            raise DimensionError(
                _('a point of H^n has 2n+1 >= 3 coordinates, got %i') % count)
        return cls((count - 1) // 2)

    @property
    def coords(self):
        return 2 * self.n + 1

    @property
    def Q(self):
        '''homogeneous dimension'''
        return 2 * self.n + 2

    @property
    def Omega_Q(self):
        '''measure of the Koranyi unit ball'''
        n = self.n
        return (2 * math.pi ** (n + 0.5) * special.gamma(n / 2) /
                ((n + 1) * special.gamma(n) * special.gamma((n + 1) / 2)))

    @property
    def omega_Q(self):
        '''area of the Koranyi unit sphere'''
        return self.Q * self.Omega_Q

    @property
    def lebesgue_ball_volume(self):
        n = self.n
        return (math.pi ** (n + 0.5) * special.gamma(n / 2) /
                ((n + 1) * special.gamma(n) * special.gamma((n + 1) / 2)))

    @property
    def haar_normalization(self):
        return self.Omega_Q / self.lebesgue_ball_volume

    def ball_measure(self, r):
        return self.Omega_Q * np.asarray(r, dtype=float) ** self.Q

    def shell_measure(self, r_in, r_out):
        return self.Omega_Q * (np.asarray(r_out, dtype=float) ** self.Q -
                               np.asarray(r_in, dtype=float) ** self.Q)

    def check(self, x):
        x = coordinates(x)
        if x.shape[-1] != self.coords:
            raise DimensionError(
                _('expected %(want)i coordinates for H^%(n)i, got %(got)i') %
                {'want': self.coords, 'n': self.n, 'got': x.shape[-1]})
        return x


def coordinates(x):
    '''Return the coordinate array of x (GroupPoint or array like).'''
    if isinstance(x, GroupPoint):
        return x.coords
    x = np.asarray(x, dtype=float)
    if x.ndim == 0:
        raise DimensionError(_('a point needs 2n+1 coordinates, got a scalar'))
    count = x.shape[-1]
    if count < 3 or count % 2 == 0:
        raise DimensionError(
            _('a point of H^n has 2n+1 >= 3 coordinates, got %i') % count)
    return x


def _wrap(result, *inputs):
    if all(isinstance(x, GroupPoint) for x in inputs):
        return GroupPoint(result)
    return result


def group_mul(x, y):
    '''The group law x.y; broadcasts over leading axes.'''
    xc = coordinates(x)
    yc = coordinates(y)
    if xc.shape[-1] != yc.shape[-1]:
        raise DimensionError(
            _('cannot multiply points with %(a)i and %(b)i coordinates') %
            {'a': xc.shape[-1], 'b': yc.shape[-1]})
    n = (xc.shape[-1] - 1) // 2

    res = xc + yc
    symplectic = np.sum(yc[..., :n] * xc[..., n:2 * n] -
                        xc[..., :n] * yc[..., n:2 * n], axis=-1)
    res[..., -1] = res[..., -1] + 2 * symplectic
    return _wrap(res, x, y)


def group_inverse(x):
    return _wrap(-coordinates(x), x)


def dilate(r, x):
    '''delta_r x: horizontal coordinates times r, the last one times r^2.'''
    xc = coordinates(x)
    r = np.asarray(r, dtype=float)
    if np.any(~(r > 0)):
        raise ParameterError(_('dilations require r > 0'))
    res = xc * r[..., None]
    res[..., -1] = res[..., -1] * r
    return _wrap(res, x)


def koranyi_norm(x):
    xc = coordinates(x)
    horizontal = np.sum(xc[..., :-1] ** 2, axis=-1)
    res = (horizontal ** 2 + xc[..., -1] ** 2) ** 0.25
    if isinstance(x, GroupPoint):
        return float(res)
    return res


def distance(p, q):
    '''Left invariant distance d(p, q) = |q^-1 p|_h.'''
    return koranyi_norm(group_mul(group_inverse(q), p))


def unit_ball_volume(dim):
    return dim.Omega_Q


def sphere_points(x):
    '''Project points onto the Koranyi unit sphere along dilation orbits.'''
    xc = coordinates(x)
    return dilate(1.0 / koranyi_norm(xc), xc)


class GroupPoint(object):
    '''An immutable point of H^n.

    :ivar coords: read only array of the 2n+1 coordinates
    '''

    __slots__ = ('coords',)

    def __init__(self, coords):
        coords = np.array(coords, dtype=float)
        if coords.ndim != 1:
            raise DimensionError(_('a GroupPoint holds a single point'))
        coordinates(coords)
        if not np.all(np.isfinite(coords)):
            raise ParameterError(_('coordinates of a point must be finite'))
        coords.setflags(write=False)
        object.__setattr__(self, 'coords', coords)

    def __setattr__(self, name, value):
        raise AttributeError(_('GroupPoint is immutable'))

    @classmethod
    def origin(cls, dim):
        return cls(np.zeros(dim.coords))

    @property
    def dim(self):
        return HeisDim.for_coords(len(self.coords))

    def __mul__(self, other):
        if not isinstance(other, GroupPoint):
            return NotImplemented
        return group_mul(self, other)

    def inverse(self):
        return group_inverse(self)

    def dilate(self, r):
        return dilate(r, self)

    def norm(self):
        return koranyi_norm(self)

    def distance(self, other):
        return distance(self, other)

    def __eq__(self, other):
        if not isinstance(other, GroupPoint):
            return NotImplemented
        return np.array_equal(self.coords, other.coords)

    def __hash__(self):
        return hash(tuple(self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return 'GroupPoint(%s)' % ', '.join('%g' % c for c in self.coords)


@dataclass(frozen=True)
class BallSpec(object):
    '''The Koranyi ball B(center, radius) = {y : d(center, y) < radius}.'''
    center: tuple
    radius: float

    def __post_init__(self):
        center = tuple(float(c) for c in coordinates(self.center).ravel())
        object.__setattr__(self, 'center', center)
        coordinates(center)
        if not self.radius > 0 or not math.isfinite(self.radius):
            raise ParameterError(_('a ball requires a radius > 0'))
        object.__setattr__(self, 'radius', float(self.radius))

    @classmethod
    def central(cls, dim, radius):
        return cls(tuple([0.0] * dim.coords), radius)

    @property
    def dim(self):
        return HeisDim.for_coords(len(self.center))

    @property
    def center_array(self):
        return np.array(self.center)

    @property
    def is_central(self):
        return not any(self.center)

    def measure(self):
        return float(self.dim.ball_measure(self.radius))

    def contains(self, x):
        return distance(x, self.center_array) < self.radius

    def contains_origin(self):
        return koranyi_norm(self.center_array) < self.radius


@dataclass(frozen=True)
class AnnulusSpec(object):
    '''The central shell {r_in <= |x|_h < r_out}.'''
    dim: HeisDim
    r_in: float
    r_out: float

    def __post_init__(self):
        if not 0 <= self.r_in <= self.r_out:
            raise ParameterError(_('an annulus requires 0 <= r_in <= r_out'))

    def measure(self):
        return float(self.dim.shell_measure(self.r_in, self.r_out))

    def contains(self, x):
        rho = koranyi_norm(x)
        return (rho >= self.r_in) & (rho < self.r_out)
