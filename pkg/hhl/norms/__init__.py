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
Weighted norms on H^n.

 * L^p(B; w) on single balls,
 * the weighted central Morrey norm
   sup_r (w(B(0, r))^-(1 + p lambda) int_B(0, r) |f|^p w)^(1/p),
 * the weighted central BMO norm
   sup_r (w(B(0, r))^-1 int_B(0, r) |b - b_B|^p w)^(1/p) with the unweighted
   mean b_B.

The supremum over r > 0 is replaced by the maximum over a
:py:class:`RadiusGrid`; the grid and the whole per radius table travel with
every result.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from hhl import defs
from hhl.model import heisenberg
from hhl.utils.exceptions import ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


# Relative tolerance of 1/p = 1/p1 + 1/p2
exponent_tolerance = 1e-12


@dataclass(frozen=True)
class NormParams(object):
    '''Exponents of the Morrey and CMO spaces involved.

    :ivar lam: the Morrey index lambda, -1/p <= lambda < 0
    :ivar p: target exponent
    :ivar p1: source (f side) exponent
    :ivar p2: CMO exponent of commutator estimates
    :ivar q: exponent of the A_q condition
    :ivar delta: reverse Hoelder order used by the A_q constants
    '''
    p: float = 2.0
    lam: float = -0.25
    alpha: float = 0.0
    p1: object = None
    p2: object = None
    q: object = None
    delta: object = None

    def validate(self, dim=None):
        if dim is None:
            dim = heisenberg.HeisDim()
        p, lam = self.p, self.lam
        if not 1 <= p < math.inf:
            raise ParameterError(_('requires 1 <= p < inf, got p = %g') % p)
        if not -1.0 / p <= lam < 0:
            raise ParameterError(
                _('requires -1/p <= lambda < 0, got lambda = %(lam)g with '
                  '-1/p = %(bound)g') % {'lam': lam, 'bound': -1.0 / p})
        if not self.alpha > -dim.Q:
            raise ParameterError(
                _('requires alpha > -Q = %(mQ)i, got %(alpha)g') %
                {'mQ': -dim.Q, 'alpha': self.alpha})
        for name in ('p1', 'p2', 'q'):
            value = getattr(self, name)
            if value is not None and not 1 <= value < math.inf:
                raise ParameterError(_('requires 1 <= %(name)s < inf, got '
                                       '%(value)g') %
                                     {'name': name, 'value': value})
        if self.delta is not None and not self.delta > 1:
            raise ParameterError(_('requires delta > 1, got %g') % self.delta)
        return self

    def check_holder(self):
        '''1/p = 1/p1 + 1/p2, the exponent relation of the power weighted
        commutator estimates.'''
        if self.p1 is None or self.p2 is None:
            raise ParameterError(_('commutator estimates require p1 and p2'))
        if not math.isclose(1.0 / self.p, 1.0 / self.p1 + 1.0 / self.p2,
                            rel_tol=exponent_tolerance):
            raise ParameterError(
                _('requires 1/p = 1/p1 + 1/p2, got 1/%(p)g != 1/%(p1)g + '
                  '1/%(p2)g') % {'p': self.p, 'p1': self.p1, 'p2': self.p2})
        return self

    def replace(self, **kwargs):
        values = self.as_dict()
        values.update(kwargs)
        return NormParams(**values)

    def as_dict(self):
        return dict(p=self.p, lam=self.lam, alpha=self.alpha, p1=self.p1,
                    p2=self.p2, q=self.q, delta=self.delta)


@dataclass(frozen=True)
class RadiusGrid(object):
    '''Radii replacing sup_(r > 0).'''
    r_values: tuple = field(default_factory=lambda: tuple(
        2.0 ** k for k in range(defs.radius_k_min, defs.radius_k_max + 1)))

    def __post_init__(self):
        values = tuple(float(r) for r in self.r_values)
        if not values:
            raise ParameterError(_('the radius grid is empty'))
        if values[0] <= 0 or any(b <= a for a, b in zip(values[:-1], values[1:])):
            raise ParameterError(
                _('radius grid values must be positive and strictly '
                  'increasing'))
        object.__setattr__(self, 'r_values', values)

    @classmethod
    def dyadic(cls, k_min=defs.radius_k_min, k_max=defs.radius_k_max):
        if k_max < k_min:
            raise ParameterError(_('requires k_min <= k_max'))
        return cls(tuple(2.0 ** k for k in range(k_min, k_max + 1)))

    @classmethod
    def logspace(cls, r_min, r_max, count):
        if not 0 < r_min < r_max or count < 2:
            raise ParameterError(_('requires 0 < r_min < r_max and at least '
                                   'two radii'))
        return cls(tuple(np.geomspace(r_min, r_max, int(count))))

    def __iter__(self):
        return iter(self.r_values)

    def __len__(self):
        return len(self.r_values)


from .morrey import lp_ball_norm, morrey_norm, extremizer_field, \
    extremizer_norm
from .cmo import ball_mean, cmo_norm, log_cmo_norm
